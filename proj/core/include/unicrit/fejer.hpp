#ifndef UNICRIT_FEJER_HPP
#define UNICRIT_FEJER_HPP

#include <string>
#include <vector>

#include "unicrit/trig.hpp"

namespace unicrit {

// How the global minimum was certified. CriticalPointEnumeration means every
// zero of T' on the circle was located through the root solver and the
// minimum was taken over those angles plus the dense grid; RefinedGrid means
// that path was unavailable and an iteratively zoomed grid stands in.
enum class MinMethod { CriticalPointEnumeration, RefinedGrid };

std::string to_string(MinMethod m);

// Witness for the global minimum of a trig polynomial over [0, 2*pi).
struct PositivityCertificate {
    double min_value = 0.0;
    double argmin_t = 0.0;
    MinMethod method = MinMethod::CriticalPointEnumeration;
};

// Coefficients gamma_0..gamma_n of a factor with |Gamma(e^{it})|^2 equal to
// the source trig polynomial. Minimum-phase normal form: every root of Gamma
// lies in the closed unit disk and gamma_0 is real and >= 0.
struct SpectralFactor {
    std::vector<Complex> gammas;
};

// Global minimum of T over the circle: dense 4096-point scan, Newton
// refinement on T', and a cross-check that enumerates the unit-circle roots
// of the algebraic polynomial carrying T'. The certificate's min never
// exceeds any grid sample.
PositivityCertificate min_on_circle(const TrigPoly& t);

// True iff min_on_circle(T).min_value >= -tol.
bool is_nonnegative(const TrigPoly& t, double tol);

// Constructive factorization of a nonnegative T: root the degree-2n
// algebraic polynomial z^n * sum c_k z^k, keep the roots inside the unit
// circle plus half of each unit-circle cluster (clusters are snapped onto
// the circle and must have even size), scale to match the top lag, and
// rotate so gamma_0 >= 0. Throws NotNonnegative when T dips below -1e-10
// and OddUnitClusterAfterTolerance when a unit cluster has odd size.
SpectralFactor spectral_factorize(const TrigPoly& t);

// |Gamma(e^{it})|^2 as a trig polynomial: Laurent lags
// c_k = sum_j gamma_{j+k} * conj(gamma_j).
TrigPoly autocorrelate(const SpectralFactor& f);

}  // namespace unicrit

#endif
