#include "unicrit/classes.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "unicrit/errors.hpp"
#include "unicrit/roots.hpp"
#include "unicrit/trig.hpp"

namespace unicrit {

namespace {

// Interior-zero cutoff: roots at least this far inside the circle count as
// genuine interior zeros; anything closer is unit-circle root-finder noise.
constexpr double kInteriorCutoff = 1.0 - 1e-9;

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

// Proper (transversal) segment intersection; touching endpoints and
// collinear overlap do not count, which keeps cusped boundary curves from
// producing false positives.
bool segments_cross(Complex a, Complex b, Complex c, Complex d) {
    const double o1 = cross(a, b, c);
    const double o2 = cross(a, b, d);
    const double o3 = cross(c, d, a);
    const double o4 = cross(c, d, b);
    return o1 * o2 < 0.0 && o3 * o4 < 0.0;
}

}  // namespace

ClassReport check_positive_real_part(const ComplexPoly& q, double tol) {
    if (q.is_zero()) throw ZeroPolynomial();
    const PositivityCertificate cert = min_on_circle(boundary_real_part(q));
    ClassReport report;
    report.min_value = cert.min_value;
    report.argmin_t = cert.argmin_t;
    report.certificate = cert;
    const bool boundary_ok = cert.min_value >= -tol;
    const bool center_ok = q.coeff(0).real() > 0.0;
    report.verdict = boundary_ok && center_ok;
    report.detail = report.verdict ? "minimum-principle"
                    : boundary_ok  ? "nonpositive-at-center"
                                   : "boundary-min-negative";
    return report;
}

ClassReport check_noshiro_warschawski(const NormalizedPoly& p, double tol) {
    return check_positive_real_part(p.derivative(), tol);
}

ClassReport check_starlike(const NormalizedPoly& p, double tol) {
    bool interior_zero = false;
    const ComplexPoly r = associated_R(p);
    if (r.degree() >= 1) {
        const RootSet rs = find_roots(r);
        for (const Complex& z : rs.roots)
            if (std::abs(z) < kInteriorCutoff) interior_zero = true;
    }

    const ComplexPoly z_dp = p.derivative().times_z();
    const PositivityCertificate cert = min_on_circle(trig_product_real(z_dp, p.poly()));
    ClassReport report;
    report.min_value = cert.min_value;
    report.argmin_t = cert.argmin_t;
    report.certificate = cert;
    const bool boundary_ok = cert.min_value >= -tol;
    report.verdict = boundary_ok && !interior_zero;
    report.detail = report.verdict ? "minimum-principle"
                    : interior_zero ? "interior-zero"
                                    : "boundary-min-negative";
    return report;
}

bool check_brannan_form(const NormalizedPoly& p, double tol) {
    const int n = p.n();
    for (int k = 2; k <= n - 1; ++k)
        if (std::abs(p.coefficient(k)) > tol) return false;
    return std::abs(std::abs(p.coefficient(n)) - 1.0 / n) <= tol;
}

Complex starlike_ratio_canonical(int n, Complex z) {
    if (n < 2) throw InvalidDegree("canonical ratio needs n >= 2");
    Complex w(1.0, 0.0);
    Complex base = z;
    for (int e = n - 1; e > 0; e >>= 1) {
        if (e & 1) w *= base;
        base *= base;
    }
    return (Complex(1.0, 0.0) + w) / (Complex(1.0, 0.0) + w / static_cast<double>(n));
}

bool check_boundary_injective(const NormalizedPoly& p, int samples) {
    if (samples < 8 * p.n())
        throw Error("boundary injectivity sweep needs at least 8 * degree samples");
    const size_t count = static_cast<size_t>(samples);
    std::vector<Complex> pts(count);
    for (size_t i = 0; i < count; ++i)
        pts[i] = p.poly()(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) /
                                              static_cast<double>(count)));

    for (size_t i = 0; i < count; ++i) {
        const Complex a = pts[i];
        const Complex b = pts[(i + 1) % count];
        for (size_t j = i + 2; j < count; ++j) {
            if (i == 0 && j == count - 1) continue;  // wrap-adjacent pair
            const Complex c = pts[j];
            const Complex d = pts[(j + 1) % count];
            if (segments_cross(a, b, c, d)) return false;
        }
    }
    return true;
}

}  // namespace unicrit
