#ifndef UNICRIT_POLY_HPP
#define UNICRIT_POLY_HPP

#include <complex>
#include <span>
#include <vector>

namespace unicrit {

using Complex = std::complex<double>;

// Coefficients with modulus below this are treated as trailing zeros when a
// polynomial is put into canonical form.
inline constexpr double kCoeffStripTol = 1e-14;

// Complex polynomial c0 + c1 z + ... + cn z^n, coefficients stored in
// ascending degree. Always held in canonical form: trailing coefficients of
// modulus < kCoeffStripTol are stripped, and the zero polynomial has an empty
// coefficient list and degree() == -1. Immutable after construction.
class ComplexPoly {
  public:
    ComplexPoly() = default;
    explicit ComplexPoly(std::vector<Complex> coeffs);
    ComplexPoly(std::initializer_list<Complex> coeffs);

    // leading * prod_k (z - roots[k]), expanded.
    static ComplexPoly from_roots(Complex leading, std::span<const Complex> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Complex>& coeffs() const { return coeffs_; }

    // Coefficient of z^k; zero beyond the degree.
    Complex coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<size_t>(k)]
                                                                : Complex(0.0, 0.0);
    }

    double max_coeff_modulus() const;

    // Horner evaluation.
    Complex operator()(Complex z) const;

    ComplexPoly derivative() const;

    // z * p(z): shifts every coefficient up one degree.
    ComplexPoly times_z() const;

    ComplexPoly operator+(const ComplexPoly& rhs) const;
    ComplexPoly operator-(const ComplexPoly& rhs) const;
    ComplexPoly operator*(const ComplexPoly& rhs) const;
    ComplexPoly operator*(Complex scale) const;

  private:
    std::vector<Complex> coeffs_;
};

Complex eval(const ComplexPoly& p, Complex z);
ComplexPoly derivative(const ComplexPoly& p);

// Normalized polynomial P(z) = z + a2 z^2 + ... + an z^n with n >= 2.
// The constructor rejects anything whose constant term is not exactly zero or
// whose linear coefficient is not exactly one.
class NormalizedPoly {
  public:
    explicit NormalizedPoly(ComplexPoly p);

    const ComplexPoly& poly() const { return poly_; }
    int n() const { return n_; }

    // Taylor coefficient a_k (a_1 = 1).
    Complex coefficient(int k) const { return poly_.coeff(k); }

    // True when |a_n| = 1/n within 1e-12, i.e. all critical points sit on the
    // unit circle.
    bool extremal() const { return extremal_; }

    ComplexPoly derivative() const { return poly_.derivative(); }

  private:
    ComplexPoly poly_;
    int n_ = 0;
    bool extremal_ = false;
};

// P_lambda(z) = conj(lambda) * P(lambda z) for unimodular lambda. Preserves
// the normalization and every class membership considered here.
NormalizedPoly rotate(const NormalizedPoly& p, Complex lambda);

// R(z) = P(z)/z for a polynomial vanishing at the origin.
ComplexPoly associated_R(const NormalizedPoly& p);
ComplexPoly associated_R(const ComplexPoly& p);

}  // namespace unicrit

#endif
