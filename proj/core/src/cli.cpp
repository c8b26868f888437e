#include "unicrit/cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "unicrit/classes.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/fejer.hpp"
#include "unicrit/io.hpp"
#include "unicrit/roots.hpp"
#include "unicrit/theorem.hpp"
#include "unicrit/trig.hpp"

namespace unicrit::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

constexpr int kBoundarySamples = 256;

ordered_json pairs_json(const std::vector<Complex>& c) {
    ordered_json arr = ordered_json::array();
    for (const Complex& z : c) arr.push_back(ordered_json::array({z.real(), z.imag()}));
    return arr;
}

ordered_json certificate_json(const PositivityCertificate& cert) {
    ordered_json j;
    j["min_value"] = cert.min_value;
    j["argmin_t"] = cert.argmin_t;
    j["method"] = to_string(cert.method);
    return j;
}

ordered_json class_report_json(const ClassReport& rep) {
    ordered_json j;
    j["verdict"] = rep.verdict;
    j["min_value"] = rep.min_value;
    j["argmin_t"] = rep.argmin_t;
    j["detail"] = rep.detail;
    if (rep.certificate) j["certificate"] = certificate_json(*rep.certificate);
    return j;
}

ordered_json boundary_json(const TrigPoly& t) {
    ordered_json arr = ordered_json::array();
    const std::vector<double> values = t.sample_uniform(kBoundarySamples);
    for (int i = 0; i < kBoundarySamples; ++i) {
        const double ti = 2.0 * std::numbers::pi * static_cast<double>(i) / kBoundarySamples;
        arr.push_back(ordered_json::array({ti, values[static_cast<size_t>(i)]}));
    }
    return arr;
}

ComplexPoly load_poly(const std::string& path) {
    const CoeffFile file = load_coeff_file(path);
    if (file.kind != CoeffFile::Kind::Poly)
        throw ParseError("expected a \"poly\" coefficient file: " + path);
    return file.poly;
}

TrigPoly load_trig(const std::string& path) {
    const CoeffFile file = load_coeff_file(path);
    if (file.kind != CoeffFile::Kind::Trig)
        throw ParseError("expected a \"trig\" coefficient file: " + path);
    return file.trig;
}

double resolve_default_tol() {
    const char* env = std::getenv("UNICRIT_DEFAULT_TOL");
    if (env == nullptr || *env == '\0') return kCheckerTol;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !std::isfinite(v) || v < 0.0)
        throw ParseError("UNICRIT_DEFAULT_TOL must be a nonnegative number");
    return v;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

int run_root_listing(const std::string& path, bool of_derivative, std::ostream& out) {
    const ComplexPoly p = load_poly(path);
    const RootSet rs = of_derivative ? critical_points(p) : find_roots(p);
    ordered_json j;
    j["summary"] = std::to_string(rs.roots.size()) +
                   (of_derivative ? " critical points" : " roots");
    j["roots"] = pairs_json(rs.roots);
    j["residuals"] = rs.residuals;
    emit(out, j);
    return kExitAccept;
}

int run_factorize(const std::string& path, std::ostream& out) {
    const TrigPoly t = load_trig(path);
    const SpectralFactor f = spectral_factorize(t);
    const TrigPoly back = autocorrelate(f);

    double residual = std::abs(back.a0() - t.a0());
    const int deg = std::max(back.degree(), t.degree());
    for (int k = 1; k <= deg; ++k) {
        const double ca = k <= back.degree() ? back.cos_coeffs()[static_cast<size_t>(k - 1)] : 0.0;
        const double sa = k <= back.degree() ? back.sin_coeffs()[static_cast<size_t>(k - 1)] : 0.0;
        const double cb = k <= t.degree() ? t.cos_coeffs()[static_cast<size_t>(k - 1)] : 0.0;
        const double sb = k <= t.degree() ? t.sin_coeffs()[static_cast<size_t>(k - 1)] : 0.0;
        residual = std::max(residual, std::hypot(ca - cb, sa - sb));
    }

    ordered_json j;
    j["summary"] = "spectral factor of degree " + std::to_string(f.gammas.size() - 1);
    j["gammas"] = pairs_json(f.gammas);
    j["round_trip_residual"] = residual;
    emit(out, j);
    return kExitAccept;
}

int run_check(const std::string& mode, const std::string& path, double tol, bool emit_boundary,
              std::ostream& out) {
    const ComplexPoly raw = load_poly(path);
    ordered_json j;

    if (mode == "positive") {
        const ClassReport rep = check_positive_real_part(raw, tol);
        j["summary"] = "positive: " + std::string(rep.verdict ? "accepted" : "rejected") + " (" +
                       rep.detail + ")";
        j.update(class_report_json(rep));
        if (emit_boundary) j["boundary"] = boundary_json(boundary_real_part(raw));
        emit(out, j);
        return rep.verdict ? kExitAccept : kExitReject;
    }

    const NormalizedPoly p{raw};
    if (mode == "brannan") {
        const bool verdict = check_brannan_form(p, tol);
        j["summary"] = "brannan: " + std::string(verdict ? "accepted" : "rejected");
        j["verdict"] = verdict;
        emit(out, j);
        return verdict ? kExitAccept : kExitReject;
    }

    const bool nw = mode == "nw";
    const ClassReport rep = nw ? check_noshiro_warschawski(p, tol) : check_starlike(p, tol);
    j["summary"] =
        mode + ": " + std::string(rep.verdict ? "accepted" : "rejected") + " (" + rep.detail + ")";
    j.update(class_report_json(rep));
    if (emit_boundary)
        j["boundary"] = boundary_json(nw ? boundary_real_part(p.derivative())
                                         : trig_product_real(p.derivative().times_z(), p.poly()));
    emit(out, j);
    return rep.verdict ? kExitAccept : kExitReject;
}

int run_verify_theorem(int n, std::ostream& out) {
    const EquivalenceReport rep = verify_equivalence(canonical_polynomial(n));
    const bool ok = rep.verdict_a.verdict && rep.verdict_b && rep.verdict_c.verdict &&
                    rep.consistent;
    ordered_json j;
    j["summary"] = "n=" + std::to_string(n) + ": " + (ok ? "equivalence holds" : "inconsistent");
    j["n"] = rep.n;
    j["a"] = class_report_json(rep.verdict_a);
    j["b"] = rep.verdict_b;
    j["c"] = class_report_json(rep.verdict_c);
    j["univalence_screen"] = rep.univalence_screen;
    j["consistent"] = rep.consistent;
    emit(out, j);
    return ok ? kExitAccept : kExitReject;
}

int run_search(int n, int trials, std::uint64_t seed, std::ostream& out) {
    const std::optional<Counterexample> hit = proposition1_search(n, trials, seed);
    ordered_json j;
    if (!hit) {
        j["summary"] = "no counterexample in " + std::to_string(trials) + " trials";
        j["counterexample"] = nullptr;
        emit(out, j);
        return kExitAccept;
    }
    j["summary"] = "counterexample at trial " + std::to_string(hit->trial);
    ordered_json c;
    c["trial"] = hit->trial;
    c["coeffs"] = pairs_json(hit->q.coeffs());
    c["max_middle_modulus"] = hit->max_middle_modulus;
    j["counterexample"] = c;
    emit(out, j);
    return kExitReject;
}

int run_threshold(int n, int k, double step, std::ostream& out) {
    const double threshold = perturbation_threshold(n, k, step);
    ordered_json j;
    if (std::isinf(threshold)) {
        j["summary"] = "no rejection on the grid up to 1";
        j["threshold"] = nullptr;
        emit(out, j);
        return kExitReject;
    }
    j["summary"] = "rejected from grid step " + std::to_string(static_cast<long>(std::lround(threshold / step)));
    j["threshold"] = threshold;
    emit(out, j);
    return kExitAccept;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified checks for univalent polynomials with all critical points on the unit circle"};
    app.require_subcommand(1);

    std::string roots_file;
    auto* roots_cmd = app.add_subcommand("roots", "All roots of a complex polynomial");
    roots_cmd->add_option("file", roots_file, "coefficient file (kind \"poly\")")->required();

    std::string crit_file;
    auto* crit_cmd = app.add_subcommand("critical-points", "All roots of the derivative");
    crit_cmd->add_option("file", crit_file, "coefficient file (kind \"poly\")")->required();

    std::string fact_file;
    auto* fact_cmd =
        app.add_subcommand("factorize", "Spectral factor of a nonnegative trig polynomial");
    fact_cmd->add_option("file", fact_file, "coefficient file (kind \"trig\")")->required();

    std::string check_mode;
    std::string check_file;
    double check_tol = 0.0;
    bool emit_boundary = false;
    auto* check_cmd = app.add_subcommand("check", "Class membership check with witness");
    check_cmd->add_option("class", check_mode, "positive | nw | starlike | brannan")
        ->required()
        ->check(CLI::IsMember({"positive", "nw", "starlike", "brannan"}));
    check_cmd->add_option("file", check_file, "coefficient file (kind \"poly\")")->required();
    auto* tol_opt = check_cmd->add_option(
        "--tol", check_tol,
        "positivity tolerance (default 1e-9; UNICRIT_DEFAULT_TOL overrides the default)");
    check_cmd->add_flag("--emit-boundary", emit_boundary,
                        "include 256 (t, value) boundary samples in the report");

    int verify_n = 0;
    auto* verify_cmd =
        app.add_subcommand("verify-theorem", "Equivalence report for the canonical polynomial");
    verify_cmd->add_option("--n", verify_n, "degree (>= 2)")->required();

    int search_n = 0;
    int search_trials = 0;
    std::uint64_t search_seed = 0;
    auto* search_cmd =
        app.add_subcommand("search", "Random search for a positive-real-part counterexample");
    search_cmd->add_option("--n", search_n, "degree (>= 2)")->required();
    search_cmd->add_option("--trials", search_trials, "number of trials (>= 1)")->required();
    search_cmd->add_option("--seed", search_seed, "base seed")->required();

    int thr_n = 0;
    int thr_k = 0;
    double thr_step = 0.0;
    auto* thr_cmd =
        app.add_subcommand("threshold", "Smallest grid perturbation the NW checker rejects");
    thr_cmd->add_option("--n", thr_n, "degree (>= 3)")->required();
    thr_cmd->add_option("--k", thr_k, "perturbed index, 2 <= k <= n-1")->required();
    thr_cmd->add_option("--step", thr_step, "grid step (> 0)")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitAccept;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitAccept;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (roots_cmd->parsed()) return run_root_listing(roots_file, false, out);
        if (crit_cmd->parsed()) return run_root_listing(crit_file, true, out);
        if (fact_cmd->parsed()) return run_factorize(fact_file, out);
        if (check_cmd->parsed()) {
            const double tol = tol_opt->count() > 0 ? check_tol : resolve_default_tol();
            return run_check(check_mode, check_file, tol, emit_boundary, out);
        }
        if (verify_cmd->parsed()) return run_verify_theorem(verify_n, out);
        if (search_cmd->parsed()) return run_search(search_n, search_trials, search_seed, out);
        if (thr_cmd->parsed()) return run_threshold(thr_n, thr_k, thr_step, out);
    } catch (const Error& e) {
        const bool usage = dynamic_cast<const ParseError*>(&e) != nullptr ||
                           dynamic_cast<const NotNormalized*>(&e) != nullptr ||
                           dynamic_cast<const InvalidDegree*>(&e) != nullptr ||
                           dynamic_cast<const IndexOutOfRange*>(&e) != nullptr ||
                           dynamic_cast<const NotVanishingAtOrigin*>(&e) != nullptr ||
                           dynamic_cast<const NonUnimodularRotation*>(&e) != nullptr ||
                           dynamic_cast<const NotExtremal*>(&e) != nullptr ||
                           dynamic_cast<const ZeroPolynomial*>(&e) != nullptr;
        err << (usage ? "input error: " : "numeric failure: ") << e.what() << "\n";
        return usage ? kExitUsage : kExitNumeric;
    }
    err << "usage error: no subcommand\n";
    return kExitUsage;
}

}  // namespace unicrit::cli
