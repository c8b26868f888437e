#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "support/oracles.hpp"
#include "unicrit/classes.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/poly.hpp"
#include "unicrit/rng.hpp"
#include "unicrit/trig.hpp"

using namespace unicrit;
using testsupport::random_extremal;

namespace {

constexpr double kPi = std::numbers::pi;

NormalizedPoly canonical(int n) {
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex(0.0, 0.0));
    c[1] = Complex(1.0, 0.0);
    c[static_cast<std::size_t>(n)] = Complex(1.0 / static_cast<double>(n), 0.0);
    return NormalizedPoly(ComplexPoly(std::move(c)));
}

// Direct sampling of Re{z P'(z) conj(P(z))} on the circle, independent of
// the TrigPoly machinery.
double starlike_grid_min(const NormalizedPoly& p, int points) {
    const ComplexPoly dp = p.poly().derivative();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < points; ++i) {
        const Complex z = std::polar(1.0, 2.0 * kPi * i / points);
        best = std::min(best, (z * dp(z) * std::conj(p.poly()(z))).real());
    }
    return best;
}

}  // namespace

TEST_CASE("positive real part on hand examples") {
    const ClassReport one_plus_sq = check_positive_real_part(ComplexPoly{1.0, 0.0, 1.0});
    CHECK(one_plus_sq.verdict);
    CHECK(one_plus_sq.detail == "minimum-principle");
    CHECK(std::abs(one_plus_sq.min_value) <= 1e-10);

    const ClassReport dip = check_positive_real_part(ComplexPoly{1.0, 0.5, 1.0});
    CHECK_FALSE(dip.verdict);
    CHECK(dip.detail == "boundary-min-negative");
    CHECK(std::abs(dip.min_value + 1.0 / 32.0) <= 1e-12);

    for (int n = 1; n <= 6; ++n) {
        std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex(0.0, 0.0));
        c[0] = Complex(1.0, 0.0);
        c[static_cast<std::size_t>(n)] = Complex(1.0, 0.0);
        const ClassReport rep = check_positive_real_part(ComplexPoly(std::move(c)));
        CHECK(rep.verdict);
        CHECK(std::abs(rep.min_value) <= 1e-10);
    }
}

TEST_CASE("positive real part guards and center condition") {
    CHECK_THROWS_AS(check_positive_real_part(ComplexPoly()), ZeroPolynomial);

    // Boundary real part vanishes identically but the center value is 0,
    // not positive.
    const ClassReport imag_const = check_positive_real_part(ComplexPoly{Complex(0.0, 1.0)});
    CHECK_FALSE(imag_const.verdict);
    CHECK(imag_const.detail == "nonpositive-at-center");
}

TEST_CASE("class report reproduces its minimum through the boundary trig polynomial") {
    const ComplexPoly q{1.0, 0.5, 1.0};
    const ClassReport rep = check_positive_real_part(q);
    const TrigPoly t = boundary_real_part(q);
    CHECK(std::abs(t(rep.argmin_t) - rep.min_value) <= 1e-10);
    REQUIRE(rep.certificate.has_value());
    CHECK(rep.certificate->min_value == rep.min_value);

    const NormalizedPoly p(ComplexPoly{0.0, 1.0, 0.1, 1.0 / 3.0});
    const ClassReport nw = check_noshiro_warschawski(p);
    const TrigPoly dt = boundary_real_part(p.poly().derivative());
    CHECK(std::abs(dt(nw.argmin_t) - nw.min_value) <= 1e-10);

    const ClassReport st = check_starlike(canonical(3));
    const TrigPoly bt = trig_product_real(canonical(3).poly().derivative().times_z(), canonical(3).poly());
    CHECK(std::abs(bt(st.argmin_t) - st.min_value) <= 1e-10);
}

TEST_CASE("noshiro-warschawski checker") {
    const ClassReport cardioid = check_noshiro_warschawski(canonical(2));
    CHECK(cardioid.verdict);
    CHECK(std::abs(cardioid.min_value) <= 1e-10);
    CHECK(std::abs(cardioid.argmin_t - kPi) <= 1e-6);

    // Re P' on the circle is 1 + 0.2 cos t + cos 2t = 2c^2 + 0.2c with
    // c = cos t; vertex c = -0.05, minimum -0.005.
    const NormalizedPoly perturbed(ComplexPoly{0.0, 1.0, 0.1, 1.0 / 3.0});
    const ClassReport rejected = check_noshiro_warschawski(perturbed);
    CHECK_FALSE(rejected.verdict);
    CHECK(std::abs(rejected.min_value + 0.005) <= 1e-12);
    CHECK(std::abs(std::cos(rejected.argmin_t) + 0.05) <= 1e-6);
}

TEST_CASE("canonical family accepted by both checkers") {
    for (int n = 2; n <= 16; ++n) {
        const ClassReport nw = check_noshiro_warschawski(canonical(n));
        CHECK(nw.verdict);
        CHECK(nw.min_value >= -1e-10);
        CHECK(nw.min_value <= 1e-8);

        const ClassReport st = check_starlike(canonical(n));
        CHECK(st.verdict);
        CHECK(st.min_value >= -1e-10);
        CHECK(st.min_value <= 1e-8);
    }
}

TEST_CASE("starlike checker") {
    const ClassReport cubic = check_starlike(canonical(3));
    CHECK(cubic.verdict);
    CHECK(std::abs(cubic.min_value) <= 1e-10);
    CHECK(cubic.detail == "minimum-principle");

    const NormalizedPoly perturbed(ComplexPoly{0.0, 1.0, 0.2, 1.0 / 3.0});
    const ClassReport rejected = check_starlike(perturbed);
    CHECK_FALSE(rejected.verdict);
    const double oracle = starlike_grid_min(perturbed, 1 << 16);
    CHECK(oracle < -1e-9);
    CHECK(rejected.min_value <= oracle + 1e-10);
    CHECK(oracle - rejected.min_value <= 1e-7);

    // A zero of P inside the punctured disk rejects immediately.
    const NormalizedPoly inner_zero(ComplexPoly{0.0, 1.0, 2.0});
    const ClassReport inner = check_starlike(inner_zero);
    CHECK_FALSE(inner.verdict);
    CHECK(inner.detail == "interior-zero");
}

TEST_CASE("starlike boundary of the canonical family in closed form") {
    for (int n = 2; n <= 16; ++n) {
        const NormalizedPoly p = canonical(n);
        const TrigPoly t = trig_product_real(p.poly().derivative().times_z(), p.poly());
        const double lead = (static_cast<double>(n) + 1.0) / static_cast<double>(n);
        CHECK(std::abs(t.a0() - lead) <= 1e-12);
        for (int k = 1; k <= t.degree(); ++k) {
            const double want_cos = (k == n - 1) ? lead : 0.0;
            CHECK(std::abs(t.cos_coeffs()[static_cast<std::size_t>(k - 1)] - want_cos) <= 1e-12);
            CHECK(std::abs(t.sin_coeffs()[static_cast<std::size_t>(k - 1)]) <= 1e-12);
        }
        CHECK(t.degree() >= n - 1);
    }
}

TEST_CASE("brannan normal form") {
    CHECK(check_brannan_form(canonical(5)));
    CHECK_FALSE(check_brannan_form(NormalizedPoly(ComplexPoly{0.0, 1.0, 0.1, 0.0, 0.0, 0.2})));
    CHECK(check_brannan_form(rotate(canonical(5), std::polar(1.0, kPi / 7.0))));
    CHECK(check_brannan_form(NormalizedPoly(ComplexPoly{0.0, 1.0, 1e-12, 0.0, 0.0, 0.2})));
    CHECK_FALSE(check_brannan_form(NormalizedPoly(ComplexPoly{0.0, 1.0, 0.0, 0.0, 0.0, 0.21})));
}

TEST_CASE("canonical starlike ratio") {
    CHECK(std::abs(starlike_ratio_canonical(3, Complex(0.0, 0.0)) - Complex(1.0, 0.0)) <= 1e-15);
    CHECK(std::abs(starlike_ratio_canonical(3, Complex(0.0, 1.0))) <= 1e-15);
    CHECK(std::abs(starlike_ratio_canonical(3, Complex(1.0, 0.0)) - Complex(1.5, 0.0)) <= 1e-15);
    CHECK_THROWS_AS(starlike_ratio_canonical(1, Complex(0.0, 0.0)), InvalidDegree);

    // The unit circle maps onto the circle with real diameter (0, 2n/(n+1)).
    for (const int n : {2, 5, 8}) {
        const double radius = static_cast<double>(n) / (n + 1.0);
        for (int i = 0; i < 64; ++i) {
            const Complex w = starlike_ratio_canonical(n, std::polar(1.0, 2.0 * kPi * i / 64.0));
            CHECK(std::abs(std::abs(w - Complex(radius, 0.0)) - radius) <= 1e-12);
        }
    }
}

TEST_CASE("boundary injectivity screen") {
    CHECK(check_boundary_injective(canonical(2), 256));
    CHECK_FALSE(check_boundary_injective(NormalizedPoly(ComplexPoly{0.0, 1.0, 1.0}), 256));
    for (int n = 2; n <= 12; ++n) CHECK(check_boundary_injective(canonical(n), 1024));
    CHECK_THROWS_AS(check_boundary_injective(canonical(12), 95), Error);
}

TEST_CASE("positive real part forces small middle coefficients") {
    // 1e5 random Q = 1 + sum c_k z^k + z^n; any acceptance must come with
    // negligible middle coefficients. A coarse 64-point screen skips the
    // overwhelming majority that are already negative somewhere on the grid.
    int violations = 0;
    int accepted = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        SplitMix64 rng = SplitMix64::derive(33, static_cast<std::uint64_t>(trial));
        const int n = 2 + trial % 7;
        std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
        c[0] = Complex(1.0, 0.0);
        c[static_cast<std::size_t>(n)] = Complex(1.0, 0.0);
        double max_middle = 0.0;
        for (int k = 1; k < n; ++k) {
            c[static_cast<std::size_t>(k)] = rng.next_complex(1.0);
            max_middle = std::max(max_middle, std::abs(c[static_cast<std::size_t>(k)]));
        }
        const ComplexPoly q(std::move(c));

        bool plausible = true;
        for (int i = 0; i < 64 && plausible; ++i) {
            const Complex z = std::polar(1.0, 2.0 * kPi * i / 64.0);
            if (q(z).real() < -1e-6) plausible = false;
        }
        if (!plausible) continue;

        if (check_positive_real_part(q, 1e-10).verdict) {
            ++accepted;
            if (max_middle > 1e-6) ++violations;
        }
    }
    CHECK(violations == 0);
    CHECK(accepted >= 0);
}

TEST_CASE("starlike verdict is rotation invariant") {
    SplitMix64 rng(34);
    const NormalizedPoly polys[] = {
        canonical(5),
        NormalizedPoly(ComplexPoly{0.0, 1.0, 0.2, 1.0 / 3.0}),
        random_extremal(rng, 6),
    };
    for (const NormalizedPoly& p : polys) {
        const bool star_base = check_starlike(p).verdict;
        const bool nw_base = check_noshiro_warschawski(p).verdict;
        const bool brannan_base = check_brannan_form(p);
        for (int i = 0; i < 16; ++i) {
            const Complex lambda = rng.next_unimodular();
            const NormalizedPoly rotated = rotate(p, lambda);
            CHECK(check_starlike(rotated).verdict == star_base);
            CHECK(check_noshiro_warschawski(rotated).verdict == nw_base);
            CHECK(check_brannan_form(rotated) == brannan_base);
        }
    }
}
