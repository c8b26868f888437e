#ifndef UNICRIT_ROOTS_HPP
#define UNICRIT_ROOTS_HPP

#include <span>
#include <vector>

#include "unicrit/poly.hpp"

namespace unicrit {

// Roots of a polynomial together with the residuals |p(root)| actually
// achieved.  Roots are sorted lexicographically by (real, imag) so equal
// inputs give byte-identical output; residuals[i] belongs to roots[i].
struct RootSet {
    std::vector<Complex> roots;
    std::vector<double> residuals;
};

// The n-th roots of -1: omega_k = exp(i (2k+1) pi / n) for k = 0..n-1.
struct UnitRoots {
    int n = 0;
    std::vector<Complex> omegas;
};

namespace detail {
// All complex roots via the Aberth-Ehrlich simultaneous iteration, certified
// relative to the growth of the polynomial at each root: residual <=
// 1e-9 * (1 + max |c_k|) * max(1, |root|)^degree, a relative backward error
// of about 1e-9 for roots of every modulus.  Callers that validate through a
// downstream contract of their own (the spectral factorizer round trip) use
// this directly.  Deterministic: fixed initial configuration, no randomness.
// Throws ZeroPolynomial for the zero polynomial and DidNotConverge when the
// iteration exhausts max_iter or the relative certificate fails.
RootSet solve_roots(const ComplexPoly& p, double tol = 1e-12, int max_iter = 200);
}  // namespace detail

// All complex roots via the Aberth-Ehrlich simultaneous iteration.
// Deterministic: fixed initial configuration, no randomness.  Throws
// ZeroPolynomial for the zero polynomial and DidNotConverge when the
// iteration exhausts max_iter or the final residuals violate the
// contract residual <= 1e-9 * (1 + max |c_k|).
RootSet find_roots(const ComplexPoly& p, double tol = 1e-12, int max_iter = 200);

// Roots of P', i.e. the critical points of P. Requires degree >= 2.
RootSet critical_points(const ComplexPoly& p, double tol = 1e-12, int max_iter = 200);

// True when every point z satisfies ||z| - 1| <= tol.
bool all_on_unit_circle(std::span<const Complex> points, double tol);
bool all_on_unit_circle(const RootSet& r, double tol);

// True when all points are pairwise farther apart than sep_tol.
bool all_simple(std::span<const Complex> points, double sep_tol);
bool all_simple(const RootSet& r, double sep_tol);

UnitRoots roots_of_minus_one(int n);

// sum_k omega_k^j; defined for 0 <= j <= n.
Complex power_sum(const UnitRoots& u, int j);

}  // namespace unicrit

#endif
