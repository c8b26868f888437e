#ifndef UNICRIT_IO_HPP
#define UNICRIT_IO_HPP

#include <string>

#include "unicrit/poly.hpp"
#include "unicrit/trig.hpp"

namespace unicrit {

// One coefficient file format for both carriers, tagged by "kind":
//   { "kind": "poly", "coeffs": [[re, im], ...] }   ascending degree
//   { "kind": "trig", "coeffs": [[re, im], ...] }   Laurent lags c_0..c_n
// Rendering uses shortest-round-trip doubles, so parse(render(x)) == x.
struct CoeffFile {
    enum class Kind { Poly, Trig };
    Kind kind = Kind::Poly;
    ComplexPoly poly;
    TrigPoly trig;
};

// Throws ParseError naming the offending entry for malformed input.
CoeffFile parse_coeff_text(const std::string& text);
CoeffFile load_coeff_file(const std::string& path);

std::string render_coeff_file(const ComplexPoly& p);
std::string render_coeff_file(const TrigPoly& t);

}  // namespace unicrit

#endif
