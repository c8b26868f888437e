#ifndef UNICRIT_ERRORS_HPP
#define UNICRIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unicrit {

// Base class for all library errors, so callers can catch the whole family.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonUnimodularRotation : Error {
    explicit NonUnimodularRotation(double modulus)
        : Error("rotation factor must be unimodular, got |lambda| = " + std::to_string(modulus)) {}
};

struct NotVanishingAtOrigin : Error {
    NotVanishingAtOrigin() : Error("polynomial does not vanish at the origin") {}
};

struct NotNormalized : Error {
    using Error::Error;
};

struct InvalidDegree : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct DidNotConverge : Error {
    int max_iter;
    explicit DidNotConverge(int iters)
        : Error("root iteration did not converge within " + std::to_string(iters) + " steps"),
          max_iter(iters) {}
};

struct NotNonnegative : Error {
    double min_value;
    explicit NotNonnegative(double min)
        : Error("trigonometric polynomial is not nonnegative, minimum " + std::to_string(min)),
          min_value(min) {}
};

struct OddUnitClusterAfterTolerance : Error {
    using Error::Error;
};

struct NotExtremal : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace unicrit

#endif
