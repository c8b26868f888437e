#ifndef UNICRIT_CLASSES_HPP
#define UNICRIT_CLASSES_HPP

#include <optional>
#include <string>

#include "unicrit/fejer.hpp"
#include "unicrit/poly.hpp"

namespace unicrit {

// Default tolerance for every membership checker: above factorization noise,
// below any meaningful coefficient scale.
inline constexpr double kCheckerTol = 1e-9;

// Verdict plus numeric witness for a class-membership query. detail names
// the satisfied or failed criterion: "minimum-principle" on acceptance,
// "boundary-min-negative", "nonpositive-at-center", or "interior-zero" on
// rejection. min_value and argmin_t describe the boundary trig polynomial
// the query minimized.
struct ClassReport {
    bool verdict = false;
    double min_value = 0.0;
    double argmin_t = 0.0;
    std::string detail;
    std::optional<PositivityCertificate> certificate;
};

// Re Q > 0 throughout the open disk, certified by the minimum principle:
// boundary minimum of Re Q(e^{it}) >= -tol together with Re Q(0) > 0.
ClassReport check_positive_real_part(const ComplexPoly& q, double tol = kCheckerTol);

// Noshiro-Warschawski class: Re P' > 0 in the disk.
ClassReport check_noshiro_warschawski(const NormalizedPoly& p, double tol = kCheckerTol);

// Starlike: no zero of P in 0 < |z| < 1 and Re{z P'(z) conj(P(z))} >= -tol on
// the circle. The |P|^2-multiplied form sidesteps division near boundary
// zeros of P.
ClassReport check_starlike(const NormalizedPoly& p, double tol = kCheckerTol);

// Brannan normal form: |a_k| <= tol for 2 <= k <= n-1 and ||a_n| - 1/n| <= tol.
bool check_brannan_form(const NormalizedPoly& p, double tol = kCheckerTol);

// Q(z) = (1 + z^{n-1}) / (1 + z^{n-1}/n), the boundary ratio z P'/P of the
// canonical polynomial z + z^n/n. Its image of the unit circle is the circle
// with real diameter endpoints 0 and 2n/(n+1).
Complex starlike_ratio_canonical(int n, Complex z);

// Heuristic univalence screen: samples the closed curve t -> P(e^{it}) and
// sweeps all non-adjacent segment pairs for a proper crossing. A clean sweep
// is evidence, not proof, of boundary injectivity. Needs samples >= 8*degree.
bool check_boundary_injective(const NormalizedPoly& p, int samples);

}  // namespace unicrit

#endif
