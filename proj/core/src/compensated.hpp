#ifndef UNICRIT_SRC_COMPENSATED_HPP
#define UNICRIT_SRC_COMPENSATED_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "unicrit/poly.hpp"

// Error-free transforms and the compensated kernels built on them.  Internal
// to the library; not installed.

namespace unicrit::detail {

// s + e equals a + b exactly.
inline void two_sum(double a, double b, double& s, double& e) {
    s = a + b;
    const double t = s - a;
    e = (a - (s - t)) + (b - t);
}

// p + e equals a * b exactly.
inline void two_prod(double a, double b, double& p, double& e) {
    p = a * b;
    e = std::fma(a, b, -p);
}

inline void two_sum(Complex a, Complex b, Complex& s, Complex& e) {
    double sr, er, si, ei;
    two_sum(a.real(), b.real(), sr, er);
    two_sum(a.imag(), b.imag(), si, ei);
    s = Complex(sr, si);
    e = Complex(er, ei);
}

inline void two_prod(Complex a, Complex b, Complex& p, Complex& e) {
    double prr, err_rr, pii, err_ii, pri, err_ri, pir, err_ir;
    two_prod(a.real(), b.real(), prr, err_rr);
    two_prod(a.imag(), b.imag(), pii, err_ii);
    two_prod(a.real(), b.imag(), pri, err_ri);
    two_prod(a.imag(), b.real(), pir, err_ir);
    double re, re_err, im, im_err;
    two_sum(prr, -pii, re, re_err);
    two_sum(pri, pir, im, im_err);
    p = Complex(re, im);
    e = Complex(err_rr - err_ii + re_err, err_ri + err_ir + im_err);
}

// Compensated Horner: evaluates p(z) with roughly twice the working
// precision.  Plain evaluation near a root of large modulus returns pure
// cancellation noise, which is useless both for the final Newton steps of
// the root solver and for an honest residual report.
inline Complex eval_compensated(const std::vector<Complex>& c, Complex z) {
    Complex s = c.back();
    Complex err(0.0, 0.0);
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        Complex p, ep, es;
        two_prod(s, z, p, ep);
        two_sum(p, c[k], s, es);
        err = err * z + (ep + es);
    }
    return s + err;
}

// A complex value carried as an unevaluated sum hi + lo.
struct DoubledComplex {
    Complex hi, lo;
};

inline DoubledComplex doubled_sub(DoubledComplex a, DoubledComplex b) {
    Complex s, e;
    two_sum(a.hi, -b.hi, s, e);
    e += a.lo - b.lo;
    DoubledComplex out;
    two_sum(s, e, out.hi, out.lo);
    return out;
}

inline DoubledComplex doubled_mul(DoubledComplex a, Complex b) {
    Complex p, e;
    two_prod(a.hi, b, p, e);
    e += a.lo * b;
    DoubledComplex out;
    two_sum(p, e, out.hi, out.lo);
    return out;
}

// Monic product over (z - r_k), expanded with doubled coefficients.  The
// in-place recurrence loses about n * eps relative to the intermediate
// coefficient growth in plain arithmetic, which is the dominant error of a
// factorization round trip; doubling the carry removes it.
inline std::vector<Complex> expand_monic_compensated(std::span<const Complex> roots) {
    std::vector<DoubledComplex> c = {{Complex(1.0, 0.0), Complex(0.0, 0.0)}};
    for (const Complex& r : roots) {
        c.push_back({Complex(0.0, 0.0), Complex(0.0, 0.0)});
        for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] = doubled_sub(c[k - 1], doubled_mul(c[k], r));
        const DoubledComplex t = doubled_mul(c[0], r);
        c[0] = {-t.hi, -t.lo};
    }
    std::vector<Complex> out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = c[k].hi + c[k].lo;
    return out;
}

}  // namespace unicrit::detail

#endif
