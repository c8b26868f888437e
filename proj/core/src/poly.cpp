#include "unicrit/poly.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "unicrit/errors.hpp"

namespace unicrit {

namespace {

void strip_trailing(std::vector<Complex>& c) {
    while (!c.empty() && std::abs(c.back()) < kCoeffStripTol) c.pop_back();
}

}  // namespace

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    strip_trailing(coeffs_);
}

ComplexPoly::ComplexPoly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
    strip_trailing(coeffs_);
}

ComplexPoly ComplexPoly::from_roots(Complex leading, std::span<const Complex> roots) {
    std::vector<Complex> c{leading};
    c.reserve(roots.size() + 1);
    for (const Complex& r : roots) {
        c.push_back(c.back());
        for (size_t k = c.size() - 2; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return ComplexPoly(std::move(c));
}

double ComplexPoly::max_coeff_modulus() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

Complex ComplexPoly::operator()(Complex z) const {
    Complex acc(0.0, 0.0);
    for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * z + coeffs_[k];
    return acc;
}

ComplexPoly ComplexPoly::derivative() const {
    if (coeffs_.size() <= 1) return ComplexPoly();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::times_z() const {
    if (is_zero()) return ComplexPoly();
    std::vector<Complex> c(coeffs_.size() + 1, Complex(0.0, 0.0));
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
    return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator+(const ComplexPoly& rhs) const {
    std::vector<Complex> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Complex(0.0, 0.0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] += rhs.coeffs_[k];
    return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator-(const ComplexPoly& rhs) const {
    std::vector<Complex> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Complex(0.0, 0.0));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
    for (size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] -= rhs.coeffs_[k];
    return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator*(const ComplexPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return ComplexPoly();
    std::vector<Complex> c(coeffs_.size() + rhs.coeffs_.size() - 1, Complex(0.0, 0.0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return ComplexPoly(std::move(c));
}

ComplexPoly ComplexPoly::operator*(Complex scale) const {
    std::vector<Complex> c(coeffs_);
    for (Complex& x : c) x *= scale;
    return ComplexPoly(std::move(c));
}

Complex eval(const ComplexPoly& p, Complex z) { return p(z); }

ComplexPoly derivative(const ComplexPoly& p) { return p.derivative(); }

NormalizedPoly::NormalizedPoly(ComplexPoly p) : poly_(std::move(p)) {
    n_ = poly_.degree();
    if (n_ < 2) throw InvalidDegree("normalized polynomial needs degree >= 2, got " + std::to_string(n_));
    if (poly_.coeff(0) != Complex(0.0, 0.0))
        throw NotNormalized("constant term must be exactly zero");
    if (poly_.coeff(1) != Complex(1.0, 0.0))
        throw NotNormalized("linear coefficient must be exactly one");
    extremal_ = std::abs(std::abs(poly_.coeff(n_)) - 1.0 / n_) <= 1e-12;
}

NormalizedPoly rotate(const NormalizedPoly& p, Complex lambda) {
    const double mod = std::abs(lambda);
    if (std::abs(mod - 1.0) > 1e-12) throw NonUnimodularRotation(mod);
    // coefficient k picks up lambda^{k-1}; k = 1 stays exactly 1.
    std::vector<Complex> c(p.poly().coeffs());
    Complex power(1.0, 0.0);
    for (size_t k = 1; k < c.size(); ++k) {
        c[k] *= power;
        power *= lambda;
    }
    return NormalizedPoly(ComplexPoly(std::move(c)));
}

ComplexPoly associated_R(const ComplexPoly& p) {
    if (p.is_zero()) return ComplexPoly();
    if (std::abs(p.coeff(0)) >= kCoeffStripTol) throw NotVanishingAtOrigin();
    std::vector<Complex> c(p.coeffs().begin() + 1, p.coeffs().end());
    return ComplexPoly(std::move(c));
}

ComplexPoly associated_R(const NormalizedPoly& p) { return associated_R(p.poly()); }

}  // namespace unicrit
