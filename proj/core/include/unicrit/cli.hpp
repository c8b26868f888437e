#ifndef UNICRIT_CLI_HPP
#define UNICRIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace unicrit::cli {

// Runs one command-line invocation in-process; args excludes the program
// name. The report goes to out as JSON, diagnostics to err. Exit code:
// 0 accept/success, 1 reject or counterexample found, 2 usage or parse
// error, 3 numeric failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unicrit::cli

#endif
