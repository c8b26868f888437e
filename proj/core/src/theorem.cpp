#include "unicrit/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "unicrit/errors.hpp"
#include "unicrit/rng.hpp"
#include "unicrit/trig.hpp"

namespace unicrit {

NormalizedPoly canonical_polynomial(int n) {
    if (n < 2) throw InvalidDegree("canonical polynomial needs n >= 2");
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    c[1] = Complex(1.0, 0.0);
    c[static_cast<size_t>(n)] = Complex(1.0 / static_cast<double>(n), 0.0);
    return NormalizedPoly(ComplexPoly(std::move(c)));
}

EquivalenceReport verify_equivalence(const NormalizedPoly& p, double tol) {
    const int n = p.n();
    if (std::abs(std::abs(p.coefficient(n)) - 1.0 / n) > tol)
        throw NotExtremal("equivalence check needs |a_n| = 1/n");

    EquivalenceReport report;
    report.n = n;
    report.verdict_a = check_noshiro_warschawski(p, tol);
    report.verdict_b = check_brannan_form(p, tol);
    report.verdict_c = check_starlike(p, tol);
    report.univalence_screen = check_boundary_injective(p, std::max(1024, 8 * n));
    report.consistent = report.verdict_a.verdict == report.verdict_b &&
                        report.verdict_b == report.verdict_c.verdict;
    return report;
}

std::optional<Counterexample> proposition1_search(int n, int trials, std::uint64_t seed) {
    if (n < 2) throw InvalidDegree("search needs n >= 2");
    if (trials < 1) throw IndexOutOfRange("search needs at least one trial");

    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(SplitMix64::derive(seed, static_cast<std::uint64_t>(trial)));
        std::vector<Complex> c(static_cast<size_t>(n) + 1);
        c[0] = Complex(1.0, 0.0);
        c[static_cast<size_t>(n)] = Complex(1.0, 0.0);
        double max_middle = 0.0;
        for (int k = 1; k < n; ++k) {
            c[static_cast<size_t>(k)] = rng.next_complex(1.0);
            max_middle = std::max(max_middle, std::abs(c[static_cast<size_t>(k)]));
        }
        // Below the reporting gate nothing can count as a counterexample.
        if (max_middle <= 1e-6) continue;

        const ComplexPoly q(std::move(c));
        // Cheap screen: the 64-point grid is a subset of the certifier's
        // 4096-point grid, so any sample below -1e-6 already forces the
        // certified minimum under the -1e-10 acceptance line.
        bool plausible = true;
        for (double v : boundary_real_part(q).sample_uniform(64)) {
            if (v < -1e-6) {
                plausible = false;
                break;
            }
        }
        if (!plausible) continue;

        if (check_positive_real_part(q, 1e-10).verdict)
            return Counterexample{trial, q, max_middle};
    }
    return std::nullopt;
}

ProofConstants proof_constants(int n, std::span<const Complex> middle) {
    if (n < 2) throw InvalidDegree("proof constants need n >= 2");
    if (middle.size() > static_cast<size_t>(n - 2))
        throw IndexOutOfRange("middle coefficient list longer than a_2..a_{n-1}");

    ProofConstants pc;
    pc.n = n;
    pc.c_squared = (static_cast<double>(n) + 1.0) / (2.0 * static_cast<double>(n));
    pc.alpha_top = 1.0 + 1.0 / static_cast<double>(n) - 2.0 * pc.c_squared;
    double sum = 0.0;
    for (size_t i = 0; i < middle.size(); ++i) {
        const double k = static_cast<double>(i) + 2.0;
        sum += k * (1.0 - k * pc.c_squared) * std::norm(middle[i]);
    }
    pc.alpha_zero = (1.0 - pc.c_squared) + sum + (1.0 / static_cast<double>(n) - pc.c_squared);
    return pc;
}

double verify_proof_identity(const NormalizedPoly& p) {
    if (!p.extremal()) throw NotExtremal("proof identity needs |a_n| = 1/n");
    const int n = p.n();

    // The lag-(n-1) identity reads off alpha_top only when a_n is real and
    // positive; a rotation with lambda^{n-1} = conj(a_n)/|a_n| arranges that
    // without touching any modulus.
    NormalizedPoly q = p;
    const Complex an = p.coefficient(n);
    if (an.imag() != 0.0 || an.real() < 0.0)
        q = rotate(p, std::polar(1.0, -std::arg(an) / static_cast<double>(n - 1)));

    const double c2 = (static_cast<double>(n) + 1.0) / (2.0 * static_cast<double>(n));
    const ComplexPoly dp = q.derivative();
    const ComplexPoly b = associated_R(q) - dp * Complex(c2, 0.0);
    const TrigPoly t = trig_product_real(dp, b);

    std::vector<Complex> middle;
    for (int k = 2; k <= n - 1; ++k) middle.push_back(q.coefficient(k));
    const ProofConstants pc = proof_constants(n, middle);

    const double d_zero = std::abs(t.a0() - pc.alpha_zero);
    const double d_top = std::abs(t.cos_coeffs()[static_cast<size_t>(n - 2)] - pc.alpha_top);
    return std::max(d_zero, d_top);
}

double perturbation_threshold(int n, int k, double step) {
    if (n < 3 || k < 2 || k > n - 1)
        throw IndexOutOfRange("perturbation index must satisfy 2 <= k <= n-1");
    if (!(step > 0.0)) throw Error("grid step must be positive");

    for (int i = 1; static_cast<double>(i) * step <= 1.0 + 1e-12; ++i) {
        const double eps = static_cast<double>(i) * step;
        std::vector<Complex> c(static_cast<size_t>(n) + 1);
        c[1] = Complex(1.0, 0.0);
        c[static_cast<size_t>(k)] = Complex(eps, 0.0);
        c[static_cast<size_t>(n)] = Complex(1.0 / static_cast<double>(n), 0.0);
        const NormalizedPoly p{ComplexPoly(std::move(c))};
        if (!check_noshiro_warschawski(p).verdict) return eps;
    }
    return std::numeric_limits<double>::infinity();
}

}  // namespace unicrit
