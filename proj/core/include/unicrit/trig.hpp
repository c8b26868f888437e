#ifndef UNICRIT_TRIG_HPP
#define UNICRIT_TRIG_HPP

#include <span>
#include <vector>

#include "unicrit/poly.hpp"

namespace unicrit {

// Real trigonometric polynomial
//   T(t) = a0 + sum_{k=1}^n (alpha_k cos kt + beta_k sin kt),
// stored in (alpha, beta) form. The equivalent Hermitian Laurent view
//   c_0 = a0, c_k = (alpha_k - i beta_k)/2, c_{-k} = conj(c_k)
// is available for the factorization algebra. Immutable in spirit: the
// library never mutates one after construction.
class TrigPoly {
  public:
    TrigPoly() = default;
    TrigPoly(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

    // Builds from nonnegative-lag Laurent coefficients c_0..c_n; the negative
    // lags are implied by Hermitian symmetry. imag(c[0]) is discarded.
    static TrigPoly from_laurent(std::span<const Complex> c);

    double a0() const { return a0_; }
    const std::vector<double>& cos_coeffs() const { return cos_; }
    const std::vector<double>& sin_coeffs() const { return sin_; }
    int degree() const { return static_cast<int>(cos_.size()); }

    // Laurent coefficients c_0..c_degree.
    std::vector<Complex> laurent() const;

    double operator()(double t) const;

    // Values at t_i = 2*pi*i/count, i = 0..count-1. Uses the angle-addition
    // recurrence per point instead of per-harmonic libm calls, so dense scans
    // stay cheap.
    std::vector<double> sample_uniform(int count) const;

    // d/dt: a0' = 0, alpha'_k = k beta_k, beta'_k = -k alpha_k.
    TrigPoly derivative() const;

    // Largest modulus among a0 and the harmonic coefficients.
    double max_coeff_modulus() const;

    // Highest k whose (alpha_k, beta_k) pair is not below tol in modulus.
    int effective_degree(double tol = kCoeffStripTol) const;

  private:
    double a0_ = 0.0;
    std::vector<double> cos_;
    std::vector<double> sin_;
};

// Restriction map: T(t) = Re P(e^{it}).
TrigPoly boundary_real_part(const ComplexPoly& p);

// T(t) = Re{ A(e^{it}) * conj(B(e^{it})) } as a trig polynomial of degree
// max(deg A, deg B), via the symmetrized lag sums c_k = sum_j a_{j+k} conj(b_j).
TrigPoly trig_product_real(const ComplexPoly& a, const ComplexPoly& b);

// True iff every coefficient of T has modulus <= tol. Combined with the
// restriction map this is the computable face of the fact that a polynomial
// whose real part vanishes on the circle is an imaginary constant.
bool is_zero_trig(const TrigPoly& t, double tol);

}  // namespace unicrit

#endif
