#include "orbgw/mirror.hpp"

#include "orbgw/picard_fuchs.hpp"
#include "orbgw/reference.hpp"

#include "doctest.h"

#include <random>
#include <stdexcept>

using namespace orbgw;

TEST_SUITE("mirror") {

TEST_CASE("frame construction validates the map") {
    MirrorFrame frame = make_mirror_frame(30);
    CHECK(frame.sigma1_of_psi == bk_series(1, 30));
    CHECK(frame.sigma2_of_psi == bk_series(2, 30));
    CHECK_THROWS_AS(make_mirror_frame(1), std::invalid_argument);
}

TEST_CASE("mirror map inversion") {
    MirrorFrame frame = make_mirror_frame(40);
    Series inverse = psi_of_sigma1(frame);
    CHECK(inverse.variable() == kSigmaVariable);
    CHECK(inverse.coeff(0) == 0);
    CHECK(inverse.coeff(1) == 1);
    CHECK(inverse.coeff(2) == 0);
    CHECK(inverse.coeff(3) == 0);
    CHECK(inverse.coeff(4) == Rational(1, 648));

    // defining property: sigma1(psi(sigma1)) is the identity
    CHECK(compose(frame.sigma1_of_psi, inverse) ==
          Series::monomial(kSigmaVariable, 1, 1, 40));
}

TEST_CASE("prepotential leading behavior and grading") {
    MirrorFrame frame = make_mirror_frame(60);
    Series f0 = prepotential(frame);
    CHECK(f0.coeff(0) == 0);
    CHECK(f0.coeff(3) == Rational(1, 18));
    CHECK(Rational(factorial(3)) * f0.coeff(3) == Rational(1, 3));
    for (int m = 0; m <= 60; ++m) {
        if (m % 3 != 0) CHECK(f0.coeff(m) == 0);
    }
}

TEST_CASE("genus-0 invariants match the published values") {
    MirrorFrame frame = make_mirror_frame(60);
    auto inv = genus0_invariants(frame, 4);
    REQUIRE(inv.size() == 4);
    CHECK(inv[0] == Rational(1, 3));
    CHECK(inv[1] == Rational(-1, 27));
    CHECK(inv[2] == Rational(1, 9));
    CHECK(inv[3] == Rational(-1093, 729));
    for (int k = 1; k <= 4; ++k) {
        CHECK(inv[static_cast<size_t>(k - 1)] == InvariantTable::instance().ngk(0, k));
    }
}

TEST_CASE("insufficient working order is rejected") {
    MirrorFrame frame = make_mirror_frame(10);
    CHECK_THROWS_AS(genus0_invariants(frame, 4), std::invalid_argument);
    CHECK_NOTHROW(genus0_invariants(frame, 3));
}

TEST_CASE("truncation stability between working orders 30 and 60") {
    auto low = genus0_invariants(make_mirror_frame(30), 9);
    auto high = genus0_invariants(make_mirror_frame(60), 9);
    CHECK(low == high);
}

TEST_CASE("mirror map round trip reproduces B2") {
    MirrorFrame frame = make_mirror_frame(40);
    Series sigma2_of_sigma1 = compose(frame.sigma2_of_psi, psi_of_sigma1(frame));
    CHECK(compose(sigma2_of_sigma1, frame.sigma1_of_psi) == frame.sigma2_of_psi);
}

TEST_CASE("period matrix") {
    Series f0 = Series::monomial(kSigmaVariable, 3, Rational(1, 18), 5);
    Series tau = period_matrix_1d(f0);
    CHECK(tau.coeff(1) == Rational(1, 3));
    CHECK(tau == Series::monomial(kSigmaVariable, 1, Rational(1, 3), 3));

    CHECK(period_matrix_1d(Series(kSigmaVariable, 6)).is_zero());

    std::mt19937 rng(13);
    std::uniform_int_distribution<int> num(-9, 9);
    std::vector<Rational> coeffs(11);
    for (auto& c : coeffs) c = num(rng);
    Series f(kSigmaVariable, coeffs);
    CHECK(period_matrix_1d(f) == differentiate(differentiate(f)));
}

}  // TEST_SUITE
