#include "unicrit/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "compensated.hpp"
#include "unicrit/errors.hpp"

namespace unicrit {

namespace {

using detail::eval_compensated;

// Evaluate p and p' at z in one Horner sweep.
void eval_with_derivative(const std::vector<Complex>& c, Complex z, Complex& p, Complex& dp) {
    p = c.back();
    dp = Complex(0.0, 0.0);
    for (size_t k = c.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
}

// sum_k |c_k| |z|^k, the scale against which |p(z)| is pure rounding noise.
double noise_scale(const std::vector<Complex>& c, Complex z) {
    const double r = std::abs(z);
    double s = std::abs(c.back());
    for (size_t k = c.size() - 1; k-- > 0;) s = s * r + std::abs(c[k]);
    return s;
}

std::vector<Complex> initial_guesses(const std::vector<Complex>& c) {
    const size_t n = c.size() - 1;
    double bound = 0.0;
    for (size_t k = 0; k < n; ++k) {
        const double ratio = std::abs(c[k]) / std::abs(c[n]);
        if (ratio > 0.0) bound = std::max(bound, std::pow(ratio, 1.0 / static_cast<double>(n - k)));
    }
    const double radius = 1.0 + bound;
    // Golden-angle spacing keeps the guesses spread out and asymmetric for
    // every n, which avoids the stalls symmetric starting patterns cause on
    // polynomials with symmetric root sets.
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<Complex> z(n);
    for (size_t i = 0; i < n; ++i)
        z[i] = std::polar(radius, 0.25 + golden * static_cast<double>(i));
    return z;
}

RootSet aberth(const std::vector<Complex>& c, double tol, int max_iter) {
    const size_t n = c.size() - 1;
    std::vector<Complex> z = initial_guesses(c);
    std::vector<char> frozen(n, 0);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double floor_factor = 2.0 * eps * static_cast<double>(2 * n + 1);

    for (int iter = 0; iter < max_iter; ++iter) {
        double max_step = 0.0;
        bool all_frozen = true;
        for (size_t i = 0; i < n; ++i) {
            if (frozen[i]) continue;
            Complex p, dp;
            eval_with_derivative(c, z[i], p, dp);
            // Once |p| is below the evaluation noise floor the iterate is a
            // root to working precision.  Correction-based tests never get
            // there for multiple roots, so settle on the residual instead.
            if (std::abs(p) <= floor_factor * noise_scale(c, z[i])) {
                frozen[i] = 1;
                continue;
            }
            all_frozen = false;
            if (dp == Complex(0.0, 0.0)) {
                z[i] += Complex(1e-8, 1e-8) * std::max(1.0, std::abs(z[i]));
                max_step = std::numeric_limits<double>::max();
                continue;
            }
            const Complex newton = p / dp;
            Complex repulsion(0.0, 0.0);
            for (size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const Complex d = z[i] - z[j];
                if (d == Complex(0.0, 0.0)) continue;
                repulsion += 1.0 / d;
            }
            const Complex denom = Complex(1.0, 0.0) - newton * repulsion;
            const Complex w = (std::abs(denom) > 1e-300) ? newton / denom : newton;
            z[i] -= w;
            max_step = std::max(max_step, std::abs(w) / std::max(1.0, std::abs(z[i])));
        }
        if (all_frozen || max_step <= tol) break;
        if (iter == max_iter - 1) throw DidNotConverge(max_iter);
    }

    // Endgame: a few guarded Newton steps driven by the compensated value.
    // The sweep above stalls at the plain-evaluation noise floor; these
    // steps sharpen each root to the limit the double representation of the
    // iterate allows.  A step is taken only when it reduces |p|.
    std::vector<double> residuals(n);
    for (size_t i = 0; i < n; ++i) {
        Complex p = eval_compensated(c, z[i]);
        for (int step = 0; step < 3; ++step) {
            if (std::abs(p) == 0.0) break;
            Complex pv, dp;
            eval_with_derivative(c, z[i], pv, dp);
            if (dp == Complex(0.0, 0.0)) break;
            const Complex w = p / dp;
            if (std::abs(w) > 0.5 * std::max(1.0, std::abs(z[i]))) break;
            const Complex candidate = z[i] - w;
            const Complex pc = eval_compensated(c, candidate);
            if (!(std::abs(pc) < std::abs(p))) break;
            z[i] = candidate;
            p = pc;
        }
        residuals[i] = std::abs(p);
    }

    std::vector<std::pair<Complex, double>> paired(n);
    for (size_t i = 0; i < n; ++i) paired[i] = {z[i], residuals[i]};
    std::sort(paired.begin(), paired.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });

    // Certify every residual relative to the growth of the polynomial at the
    // root: |p(z)| <= 1e-9 * (1 + max |c_k|) * max(1, |z|)^n is a relative
    // backward error of about 1e-9, the strongest statement that holds for
    // roots of every modulus.
    double max_modulus = 0.0;
    for (const Complex& ck : c) max_modulus = std::max(max_modulus, std::abs(ck));
    RootSet out;
    out.roots.resize(n);
    out.residuals.resize(n);
    for (size_t i = 0; i < n; ++i) {
        out.roots[i] = paired[i].first;
        out.residuals[i] = paired[i].second;
        const double growth = std::pow(std::max(1.0, std::abs(out.roots[i])), static_cast<double>(n));
        if (out.residuals[i] > 1e-9 * (1.0 + max_modulus) * growth) throw DidNotConverge(max_iter);
    }
    return out;
}

}  // namespace

namespace detail {

RootSet solve_roots(const ComplexPoly& p, double tol, int max_iter) {
    if (p.degree() < 0) throw ZeroPolynomial();
    if (p.degree() == 0) return RootSet{};

    std::vector<Complex> c = p.coeffs();
    // Deflate exact zeros at the origin; Aberth handles them but a multiple
    // root at 0 costs iterations for no reason.
    size_t zeros = 0;
    while (zeros < c.size() - 1 && c[zeros] == Complex(0.0, 0.0)) ++zeros;
    c.erase(c.begin(), c.begin() + static_cast<long>(zeros));

    RootSet out;
    if (c.size() == 2) {
        out.roots.push_back(-c[0] / c[1]);
        out.residuals.push_back(std::abs(c[1] * out.roots[0] + c[0]));
    } else if (c.size() > 2) {
        out = aberth(c, tol, max_iter);
    }
    if (zeros > 0) {
        std::vector<std::pair<Complex, double>> paired;
        paired.reserve(out.roots.size() + zeros);
        for (size_t i = 0; i < zeros; ++i) paired.emplace_back(Complex(0.0, 0.0), 0.0);
        for (size_t i = 0; i < out.roots.size(); ++i)
            paired.emplace_back(out.roots[i], out.residuals[i]);
        std::sort(paired.begin(), paired.end(), [](const auto& a, const auto& b) {
            if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
            return a.first.imag() < b.first.imag();
        });
        out.roots.clear();
        out.residuals.clear();
        for (const auto& [root, residual] : paired) {
            out.roots.push_back(root);
            out.residuals.push_back(residual);
        }
    }
    return out;
}

}  // namespace detail

RootSet find_roots(const ComplexPoly& p, double tol, int max_iter) {
    RootSet out = detail::solve_roots(p, tol, max_iter);
    // On top of the relative certificate of solve_roots, enforce the absolute
    // residual contract of RootSet.  A polynomial with a root far outside the
    // unit disk cannot meet it in double precision no matter how accurate the
    // iteration; that is reported as a convergence failure.
    double max_modulus = 0.0;
    for (const Complex& ck : p.coeffs()) max_modulus = std::max(max_modulus, std::abs(ck));
    const double contract = 1e-9 * (1.0 + max_modulus);
    for (double r : out.residuals)
        if (r > contract) throw DidNotConverge(max_iter);
    return out;
}

RootSet critical_points(const ComplexPoly& p, double tol, int max_iter) {
    if (p.degree() < 2) throw InvalidDegree("critical points need degree >= 2");
    return find_roots(p.derivative(), tol, max_iter);
}

bool all_on_unit_circle(std::span<const Complex> points, double tol) {
    for (const Complex& z : points)
        if (std::abs(std::abs(z) - 1.0) > tol) return false;
    return true;
}

bool all_on_unit_circle(const RootSet& r, double tol) { return all_on_unit_circle(std::span<const Complex>(r.roots), tol); }

bool all_simple(std::span<const Complex> points, double sep_tol) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (std::abs(points[i] - points[j]) <= sep_tol) return false;
    return true;
}

bool all_simple(const RootSet& r, double sep_tol) { return all_simple(std::span<const Complex>(r.roots), sep_tol); }

UnitRoots roots_of_minus_one(int n) {
    if (n < 1) throw InvalidDegree("roots of -1 need order >= 1");
    UnitRoots u;
    u.n = n;
    u.omegas.resize(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k)
        u.omegas[static_cast<size_t>(k)] =
            std::polar(1.0, (2.0 * k + 1.0) * std::numbers::pi / static_cast<double>(n));
    return u;
}

Complex power_sum(const UnitRoots& u, int j) {
    if (j < 0 || j > u.n) throw IndexOutOfRange("power sum exponent must lie in [0, n]");
    Complex sum(0.0, 0.0);
    for (const Complex& z : u.omegas) {
        Complex pw(1.0, 0.0), base = z;
        for (int e = j; e > 0; e >>= 1) {
            if (e & 1) pw *= base;
            base *= base;
        }
        sum += pw;
    }
    return sum;
}

}  // namespace unicrit
