#include "unicrit/trig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace unicrit {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

TrigPoly::TrigPoly(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs)
    : a0_(a0), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    if (cos_.size() != sin_.size())
        throw std::invalid_argument("cos/sin coefficient lists must have equal length");
}

TrigPoly TrigPoly::from_laurent(std::span<const Complex> c) {
    if (c.empty()) return TrigPoly();
    std::vector<double> cc(c.size() - 1), ss(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) {
        cc[k - 1] = 2.0 * c[k].real();
        ss[k - 1] = -2.0 * c[k].imag();
    }
    return TrigPoly(c[0].real(), std::move(cc), std::move(ss));
}

std::vector<Complex> TrigPoly::laurent() const {
    std::vector<Complex> c(cos_.size() + 1);
    c[0] = Complex(a0_, 0.0);
    for (size_t k = 0; k < cos_.size(); ++k) c[k + 1] = Complex(cos_[k] / 2.0, -sin_[k] / 2.0);
    return c;
}

double TrigPoly::operator()(double t) const {
    const double c1 = std::cos(t), s1 = std::sin(t);
    double ck = 1.0, sk = 0.0;  // cos(0t), sin(0t)
    double acc = a0_;
    for (size_t k = 0; k < cos_.size(); ++k) {
        const double cn = ck * c1 - sk * s1;
        const double sn = sk * c1 + ck * s1;
        ck = cn;
        sk = sn;
        acc += cos_[k] * ck + sin_[k] * sk;
    }
    return acc;
}

std::vector<double> TrigPoly::sample_uniform(int count) const {
    std::vector<double> out(static_cast<size_t>(std::max(count, 0)));
    if (count <= 0) return out;
    const double step = kTwoPi / count;
    const double cstep = std::cos(step), sstep = std::sin(step);
    double c1 = 1.0, s1 = 0.0;  // running (cos t_i, sin t_i)
    for (int i = 0; i < count; ++i) {
        if ((i & 1023) == 0) {  // re-sync the rotation so drift stays far below eval noise
            c1 = std::cos(step * i);
            s1 = std::sin(step * i);
        }
        double ck = c1, sk = s1;
        double acc = a0_;
        for (size_t k = 0; k < cos_.size(); ++k) {
            acc += cos_[k] * ck + sin_[k] * sk;
            const double cn = ck * c1 - sk * s1;
            const double sn = sk * c1 + ck * s1;
            ck = cn;
            sk = sn;
        }
        out[static_cast<size_t>(i)] = acc;
        const double cn = c1 * cstep - s1 * sstep;
        const double sn = s1 * cstep + c1 * sstep;
        c1 = cn;
        s1 = sn;
    }
    return out;
}

TrigPoly TrigPoly::derivative() const {
    std::vector<double> cc(cos_.size()), ss(cos_.size());
    for (size_t k = 0; k < cos_.size(); ++k) {
        const double kk = static_cast<double>(k + 1);
        cc[k] = kk * sin_[k];
        ss[k] = -kk * cos_[k];
    }
    return TrigPoly(0.0, std::move(cc), std::move(ss));
}

double TrigPoly::max_coeff_modulus() const {
    double m = std::abs(a0_);
    for (double x : cos_) m = std::max(m, std::abs(x));
    for (double x : sin_) m = std::max(m, std::abs(x));
    return m;
}

int TrigPoly::effective_degree(double tol) const {
    int deg = static_cast<int>(cos_.size());
    while (deg > 0 && std::hypot(cos_[static_cast<size_t>(deg - 1)], sin_[static_cast<size_t>(deg - 1)]) < tol)
        --deg;
    return deg;
}

TrigPoly boundary_real_part(const ComplexPoly& p) {
    const int n = p.degree();
    if (n < 0) return TrigPoly();
    std::vector<double> cc(static_cast<size_t>(n)), ss(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) {
        cc[static_cast<size_t>(k - 1)] = p.coeff(k).real();
        ss[static_cast<size_t>(k - 1)] = -p.coeff(k).imag();
    }
    return TrigPoly(p.coeff(0).real(), std::move(cc), std::move(ss));
}

TrigPoly trig_product_real(const ComplexPoly& a, const ComplexPoly& b) {
    const int deg = std::max(a.degree(), b.degree());
    if (deg < 0) return TrigPoly();
    // Lag sums d_k = sum_j a_{j+k} conj(b_j), then Hermitian symmetrization
    // c_k = (d_k + conj(d_{-k}))/2 gives the real part of A conj(B).
    std::vector<Complex> laurent(static_cast<size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) {
        Complex pos(0.0, 0.0), neg(0.0, 0.0);
        for (int j = 0; j + k <= a.degree() && j <= b.degree(); ++j)
            pos += a.coeff(j + k) * std::conj(b.coeff(j));
        for (int j = 0; j <= a.degree() && j + k <= b.degree(); ++j)
            neg += a.coeff(j) * std::conj(b.coeff(j + k));
        laurent[static_cast<size_t>(k)] = (pos + std::conj(neg)) / 2.0;
    }
    return TrigPoly::from_laurent(laurent);
}

bool is_zero_trig(const TrigPoly& t, double tol) { return t.max_coeff_modulus() <= tol; }

}  // namespace unicrit
