#ifndef UNICRIT_TESTS_SUPPORT_ORACLES_HPP
#define UNICRIT_TESTS_SUPPORT_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "unicrit/fejer.hpp"
#include "unicrit/poly.hpp"
#include "unicrit/rng.hpp"
#include "unicrit/trig.hpp"

namespace unicrit::testsupport {

// Power-sum evaluation, deliberately not Horner, kept as an independent
// oracle for the library's evaluator.
inline Complex naive_eval(const ComplexPoly& p, Complex z) {
    Complex acc(0.0, 0.0);
    Complex zp(1.0, 0.0);
    for (const Complex& c : p.coeffs()) {
        acc += c * zp;
        zp *= z;
    }
    return acc;
}

// Worst pairing distance under greedy nearest-neighbor matching of two point
// multisets; infinity when the sizes differ. Good enough for the
// well-separated root sets the suites compare.
inline double match_points(std::vector<Complex> got, std::vector<Complex> want) {
    if (got.size() != want.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (const Complex& g : got) {
        std::size_t best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < want.size(); ++j) {
            const double d = std::abs(g - want[j]);
            if (d < best_dist) {
                best_dist = d;
                best = j;
            }
        }
        worst = std::max(worst, best_dist);
        want.erase(want.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return worst;
}

// Brute-force grid minimum over [0, 2*pi), evaluated independently of
// TrigPoly::sample_uniform: one rotator per harmonic, advanced point by
// point and resynchronized against libm every 1024 points.
inline double grid_min(const TrigPoly& t, int points) {
    const std::vector<double>& ca = t.cos_coeffs();
    const std::vector<double>& sa = t.sin_coeffs();
    const int m = t.degree();
    const double step = 2.0 * std::numbers::pi / points;
    std::vector<std::complex<double>> w(static_cast<std::size_t>(m));
    std::vector<std::complex<double>> rot(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
        rot[static_cast<std::size_t>(k)] = std::polar(1.0, (k + 1) * step);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < points; ++i) {
        if ((i & 1023) == 0) {
            const double ti = step * i;
            for (int k = 0; k < m; ++k)
                w[static_cast<std::size_t>(k)] = std::polar(1.0, (k + 1) * ti);
        }
        double v = t.a0();
        for (int k = 0; k < m; ++k) {
            const std::size_t ku = static_cast<std::size_t>(k);
            v += ca[ku] * w[ku].real() + sa[ku] * w[ku].imag();
            w[ku] *= rot[ku];
        }
        best = std::min(best, v);
    }
    return best;
}

// Largest coefficient-wise difference, zero-padded past either degree.
inline double trig_distance(const TrigPoly& a, const TrigPoly& b) {
    const auto at = [](const std::vector<double>& v, int k) {
        return k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : 0.0;
    };
    double worst = std::abs(a.a0() - b.a0());
    const int m = std::max(a.degree(), b.degree());
    for (int k = 0; k < m; ++k) {
        worst = std::max(worst, std::abs(at(a.cos_coeffs(), k) - at(b.cos_coeffs(), k)));
        worst = std::max(worst, std::abs(at(a.sin_coeffs(), k) - at(b.sin_coeffs(), k)));
    }
    return worst;
}

inline double poly_distance(const ComplexPoly& a, const ComplexPoly& b) {
    double worst = 0.0;
    const int d = std::max(a.degree(), b.degree());
    for (int k = 0; k <= d; ++k) worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
    return worst;
}

// Random polynomial of degree <= max_degree with coefficients drawn from the
// disk of the given radius; the leading coefficient is redrawn until it is
// well clear of the canonical-form strip tolerance.
inline ComplexPoly random_poly(SplitMix64& rng, int max_degree, double max_modulus = 1.0) {
    const int d = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(max_degree + 1));
    std::vector<Complex> c(static_cast<std::size_t>(d) + 1);
    for (Complex& ck : c) ck = rng.next_complex(max_modulus);
    while (d > 0 && std::abs(c[static_cast<std::size_t>(d)]) < 1e-3 * max_modulus)
        c[static_cast<std::size_t>(d)] = rng.next_complex(max_modulus);
    return ComplexPoly(std::move(c));
}

// Random extremal polynomial: middle coefficients in the unit disk, top
// coefficient of modulus exactly 1/n with random phase.
inline NormalizedPoly random_extremal(SplitMix64& rng, int n) {
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex(0.0, 0.0));
    c[1] = Complex(1.0, 0.0);
    for (int k = 2; k < n; ++k) c[static_cast<std::size_t>(k)] = rng.next_complex(1.0);
    c[static_cast<std::size_t>(n)] = rng.next_unimodular() / static_cast<double>(n);
    return NormalizedPoly(ComplexPoly(std::move(c)));
}

// Random factor with both end coefficients bounded away from zero, so the
// autocorrelation keeps full degree and a well-conditioned carrier.
inline std::vector<Complex> random_factor(SplitMix64& rng, int max_degree) {
    const int d = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(max_degree));
    std::vector<Complex> g(static_cast<std::size_t>(d) + 1);
    for (Complex& gk : g) gk = rng.next_complex(1.0);
    while (std::abs(g.front()) < 0.05) g.front() = rng.next_complex(1.0);
    while (std::abs(g.back()) < 0.05) g.back() = rng.next_complex(1.0);
    return g;
}

// Random nonnegative trig polynomial of degree <= max_degree, realized as an
// autocorrelation so nonnegativity holds by construction.
inline TrigPoly random_nonneg_trig(SplitMix64& rng, int max_degree) {
    return autocorrelate(SpectralFactor{random_factor(rng, max_degree)});
}

}  // namespace unicrit::testsupport

#endif
