#include "unicrit/fejer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "compensated.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/roots.hpp"

namespace unicrit {

namespace {

constexpr int kGridSize = 4096;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Roots of the algebraic carrier within this band of the unit circle are
// treated as unit-circle zeros of T and snapped onto it.
constexpr double kUnitBandDelta = 1e-7;
// Two band roots this close in angle form one double-zero cluster pair.
constexpr double kPairGapMax = 1e-3;
// Nonnegativity slack below which factorization refuses to proceed.
constexpr double kFactorizeTol = 1e-10;

double wrap_angle(double t) {
    t = std::fmod(t, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

// z^m * sum_{k=-m}^{m} c_k z^k with c_{-k} = conj(c_k): the polynomial whose
// unit-circle values are e^{imt} T(t).
ComplexPoly algebraic_carrier(const TrigPoly& t, int m) {
    const std::vector<Complex> c = t.laurent();
    std::vector<Complex> b(static_cast<size_t>(2 * m) + 1);
    b[static_cast<size_t>(m)] = Complex(c[0].real(), 0.0);
    for (int k = 1; k <= m; ++k) {
        b[static_cast<size_t>(m + k)] = c[static_cast<size_t>(k)];
        b[static_cast<size_t>(m - k)] = std::conj(c[static_cast<size_t>(k)]);
    }
    return ComplexPoly(std::move(b));
}

void zoom_refine(const TrigPoly& t, double& best_t, double& best_v) {
    double w = kTwoPi / kGridSize;
    for (int round = 0; round < 24; ++round) {
        double center = best_t;
        for (int i = -16; i <= 16; ++i) {
            const double tt = center + w * static_cast<double>(i) / 16.0;
            const double v = t(tt);
            if (v < best_v) {
                best_v = v;
                best_t = tt;
            }
        }
        w *= 0.25;
    }
}

}  // namespace

std::string to_string(MinMethod m) {
    return m == MinMethod::CriticalPointEnumeration ? "critical-point-enumeration" : "refined-grid";
}

PositivityCertificate min_on_circle(const TrigPoly& t) {
    const int m = t.effective_degree();
    if (m == 0) return PositivityCertificate{t(0.0), 0.0, MinMethod::CriticalPointEnumeration};

    const std::vector<double> samples = t.sample_uniform(kGridSize);
    double best_v = samples[0];
    double best_t = 0.0;
    for (int i = 1; i < kGridSize; ++i) {
        if (samples[static_cast<size_t>(i)] < best_v) {
            best_v = samples[static_cast<size_t>(i)];
            best_t = kTwoPi * static_cast<double>(i) / kGridSize;
        }
    }

    // Newton refinement of the best grid point on T'.
    const TrigPoly dt = t.derivative();
    const TrigPoly ddt = dt.derivative();
    {
        double tt = best_t;
        const double max_step = kTwoPi / kGridSize;
        for (int it = 0; it < 50; ++it) {
            const double d2 = ddt(tt);
            if (d2 <= 0.0) break;
            const double step = dt(tt) / d2;
            if (std::abs(step) > max_step) break;
            tt -= step;
            if (std::abs(step) <= 1e-14) break;
        }
        const double v = t(tt);
        if (v < best_v) {
            best_v = v;
            best_t = wrap_angle(tt);
        }
    }

    // Cross-check: every interior minimum is a zero of T' on the circle, and
    // those are exactly the unit-modulus roots of the carrier polynomial.
    bool enumerated = false;
    const int md = dt.effective_degree();
    if (md > 0) {
        try {
            const RootSet rs = detail::solve_roots(algebraic_carrier(dt, md));
            for (const Complex& z : rs.roots) {
                if (std::abs(std::abs(z) - 1.0) > 1e-6) continue;
                enumerated = true;
                const double tt = wrap_angle(std::arg(z));
                const double v = t(tt);
                if (v < best_v) {
                    best_v = v;
                    best_t = tt;
                }
            }
        } catch (const Error&) {
            enumerated = false;
        }
    }

    if (!enumerated) zoom_refine(t, best_v, best_t);

    return PositivityCertificate{best_v, wrap_angle(best_t),
                                 enumerated ? MinMethod::CriticalPointEnumeration
                                            : MinMethod::RefinedGrid};
}

bool is_nonnegative(const TrigPoly& t, double tol) {
    return min_on_circle(t).min_value >= -tol;
}

SpectralFactor spectral_factorize(const TrigPoly& t) {
    const double scale = std::max(1.0, t.max_coeff_modulus());
    if (t.max_coeff_modulus() <= kCoeffStripTol)
        throw ZeroPolynomial();
    const PositivityCertificate cert = min_on_circle(t);
    if (cert.min_value < -kFactorizeTol) throw NotNonnegative(cert.min_value);

    const int m = t.effective_degree(kCoeffStripTol * scale);
    if (m == 0)
        return SpectralFactor{{Complex(std::sqrt(std::max(t.a0(), 0.0)), 0.0)}};

    const std::vector<Complex> c = t.laurent();
    const RootSet rs = detail::solve_roots(algebraic_carrier(t, m));

    std::vector<Complex> selected;
    std::vector<double> band;
    for (const Complex& z : rs.roots) {
        const double r = std::abs(z);
        if (std::abs(r - 1.0) <= kUnitBandDelta)
            band.push_back(wrap_angle(std::arg(z)));
        else if (r < 1.0)
            selected.push_back(z);
    }
    if (band.size() % 2 != 0)
        throw OddUnitClusterAfterTolerance(
            "odd-size unit-circle root cluster: T touches zero ambiguously at noise scale");

    if (!band.empty()) {
        std::sort(band.begin(), band.end());
        // Rotate the sorted angle list so no cluster straddles the seam, then
        // pair adjacent entries; each pair is one double zero of T.
        const size_t s = band.size();
        size_t start = 0;
        double widest = band[0] + kTwoPi - band[s - 1];
        for (size_t i = 0; i + 1 < s; ++i) {
            const double gap = band[i + 1] - band[i];
            if (gap > widest) {
                widest = gap;
                start = i + 1;
            }
        }
        for (size_t j = 0; j < s; j += 2) {
            const double a = band[(start + j) % s];
            const double b = band[(start + j + 1) % s];
            double gap = b - a;
            if (gap < 0.0) gap += kTwoPi;
            if (gap > kPairGapMax)
                throw OddUnitClusterAfterTolerance(
                    "unit-circle roots do not pair into even clusters at tolerance");
            selected.push_back(std::polar(1.0, wrap_angle(a + gap / 2.0)));
        }
    }
    if (static_cast<int>(selected.size()) != m)
        throw Error("spectral factor selection does not halve the carrier root set");

    // Expand with doubled coefficients: the plain in-place product loses
    // about m * eps against the intermediate coefficient growth, which is
    // exactly the error a round trip against T surfaces.
    const ComplexPoly monic(detail::expand_monic_compensated(selected));
    const Complex m0 = monic.coeff(0);
    const Complex c_top = c[static_cast<size_t>(m)];
    const double mag = std::sqrt(std::abs(c_top) / std::abs(m0));
    const Complex s_scale = std::polar(mag, -std::arg(m0));

    SpectralFactor f;
    f.gammas.resize(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) f.gammas[static_cast<size_t>(j)] = s_scale * monic.coeff(j);
    f.gammas[0] = Complex(mag * std::abs(m0), 0.0);
    return f;
}

TrigPoly autocorrelate(const SpectralFactor& f) {
    const auto& g = f.gammas;
    if (g.empty()) return TrigPoly();
    const size_t n = g.size() - 1;
    std::vector<Complex> c(n + 1);
    for (size_t k = 0; k <= n; ++k)
        for (size_t j = 0; j + k <= n; ++j) c[k] += g[j + k] * std::conj(g[j]);
    return TrigPoly::from_laurent(c);
}

}  // namespace unicrit
