#ifndef UNICRIT_THEOREM_HPP
#define UNICRIT_THEOREM_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "unicrit/classes.hpp"
#include "unicrit/poly.hpp"

namespace unicrit {

// Results of running all three equivalence checks on one extremal
// polynomial: (a) Noshiro-Warschawski, (b) Brannan normal form,
// (c) starlike, plus the heuristic univalence screen. consistent records
// whether the three verdicts agree; the equivalence claim itself is
// conditional on the screen for the starlike direction.
struct EquivalenceReport {
    int n = 0;
    ClassReport verdict_a;
    bool verdict_b = false;
    ClassReport verdict_c;
    bool univalence_screen = false;
    bool consistent = false;
};

// The constants of the equivalence proof for degree n:
// C_squared = (n+1)/(2n), alpha_top = 1 + 1/n - 2 C_squared (identically
// zero), and alpha_zero, the constant coefficient of the proof's boundary
// trig polynomial for the given middle coefficients a_2..a_{n-1}.
struct ProofConstants {
    int n = 0;
    double c_squared = 0.0;
    double alpha_top = 0.0;
    double alpha_zero = 0.0;
};

// First random polynomial with positive real part and a middle coefficient
// above the noise gate, should one ever be found.
struct Counterexample {
    int trial = 0;
    ComplexPoly q;
    double max_middle_modulus = 0.0;
};

// P(z) = z + z^n/n, the extremal starlike polynomial.
NormalizedPoly canonical_polynomial(int n);

// Runs checkers (a), (b), (c) and the univalence screen on an extremal
// polynomial; throws NotExtremal when ||a_n| - 1/n| > tol.
EquivalenceReport verify_equivalence(const NormalizedPoly& p, double tol = kCheckerTol);

// Random search for a counterexample to "Re Q > 0 forces the middle
// coefficients of 1 + sum c_k z^k + z^n to vanish": samples `trials`
// coefficient vectors with |c_k| <= 1 uniform in modulus and phase and
// returns the first hit with max |c_k| > 1e-6, or empty. Deterministic
// given (n, trials, seed); trial order fixes the selection.
std::optional<Counterexample> proposition1_search(int n, int trials, std::uint64_t seed);

// middle holds a_2..a_{n-1}; missing entries count as zero.
ProofConstants proof_constants(int n, std::span<const Complex> middle);

// Cross-checks the proof's lag identities on one extremal polynomial:
// builds T = Re{P'(e^{it}) conj(R(e^{it}) - C_squared P'(e^{it}))} and
// returns the larger of |constant coefficient - alpha_zero| and
// |cos (n-1)t coefficient - alpha_top|. Contract: <= 1e-12 always.
double verify_proof_identity(const NormalizedPoly& p);

// Smallest grid multiple of `step` at which the Noshiro-Warschawski checker
// rejects z + eps z^k + z^n/n; +infinity if no grid point up to 1 is
// rejected (which the theorem rules out).
double perturbation_threshold(int n, int k, double step);

}  // namespace unicrit

#endif
