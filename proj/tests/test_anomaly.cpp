#include "orbgw/anomaly.hpp"

#include "doctest.h"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

using namespace orbgw;

namespace {

AmplitudeData scalar_data(const Rational& e, const Rational& df1, const Rational& ddf1,
                          const Rational& d3f0, const Rational& d4f0) {
    return AmplitudeData(1, {e}, {df1}, {ddf1}, {d3f0}, {d4f0});
}

Rational random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 6);
    return Rational(num(rng), den(rng));
}

// Independent summation oracle: evaluates the six contributions through
// contracted intermediate tensors instead of one flat tuple loop.
Rational gamma2_oracle(const AmplitudeData& d) {
    const int r = d.modulus_count();
    Rational term1 = 0;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            term1 += d.propagator(i, j) * (d.ddf1(i, j) + d.df1(i) * d.df1(j));
        }
    }
    term1 /= 2;

    // v_j = E^{ij} dF1_i ; u_k = E^{ij} d3F0_{ijk}
    std::vector<Rational> v(static_cast<size_t>(r), Rational(0));
    std::vector<Rational> u(static_cast<size_t>(r), Rational(0));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            v[static_cast<size_t>(j)] += d.propagator(i, j) * d.df1(i);
            for (int k = 0; k < r; ++k) {
                u[static_cast<size_t>(k)] += d.propagator(i, j) * d.d3f0(i, j, k);
            }
        }
    }
    Rational term2 = 0;  // (1/2) v_j E^{kl} d3F0_{jkl}
    Rational term3 = 0;  // (1/8) E^{ij} E^{kl} d4F0_{ijkl}
    for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) {
            for (int l = 0; l < r; ++l) {
                term2 += v[static_cast<size_t>(j)] * d.propagator(k, l) * d.d3f0(j, k, l);
                for (int i = 0; i < r; ++i) {
                    term3 += d.propagator(i, j) * d.propagator(k, l) * d.d4f0(i, j, k, l);
                }
            }
        }
    }
    term2 /= 2;
    term3 /= 8;

    // (1/8) E^{kl} u_k u_l
    Rational term4 = 0;
    for (int k = 0; k < r; ++k) {
        for (int l = 0; l < r; ++l) {
            term4 += d.propagator(k, l) * u[static_cast<size_t>(k)] * u[static_cast<size_t>(l)];
        }
    }
    term4 /= 8;

    // (1/12) d3F0_{ikm} (E^{ij} E^{kl} E^{mn} d3F0_{jln})
    Rational term5 = 0;
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < r; ++k) {
            for (int m = 0; m < r; ++m) {
                Rational contracted = 0;
                for (int j = 0; j < r; ++j) {
                    for (int l = 0; l < r; ++l) {
                        for (int n = 0; n < r; ++n) {
                            contracted += d.propagator(i, j) * d.propagator(k, l) *
                                          d.propagator(m, n) * d.d3f0(j, l, n);
                        }
                    }
                }
                term5 += d.d3f0(i, k, m) * contracted;
            }
        }
    }
    term5 /= 12;

    return term1 + term2 + term3 + term4 + term5;
}

// Symmetrized random tensors at r = 2.
AmplitudeData random_data_r2(std::mt19937& rng) {
    const int r = 2;
    std::vector<Rational> e(4), df1(2), ddf1(4), d3(8), d4(16);
    for (auto& x : df1) x = random_rational(rng);
    for (int i = 0; i < r; ++i) {
        for (int j = i; j < r; ++j) {
            Rational a = random_rational(rng), b = random_rational(rng);
            e[static_cast<size_t>(i * r + j)] = e[static_cast<size_t>(j * r + i)] = a;
            ddf1[static_cast<size_t>(i * r + j)] = ddf1[static_cast<size_t>(j * r + i)] = b;
        }
    }
    auto idx3 = [r](int i, int j, int k) { return static_cast<size_t>((i * r + j) * r + k); };
    auto idx4 = [r](int i, int j, int k, int l) {
        return static_cast<size_t>(((i * r + j) * r + k) * r + l);
    };
    for (int i = 0; i < r; ++i) {
        for (int j = i; j < r; ++j) {
            for (int k = j; k < r; ++k) {
                Rational a = random_rational(rng);
                int p[3] = {i, j, k};
                std::sort(p, p + 3);
                do {
                    d3[idx3(p[0], p[1], p[2])] = a;
                } while (std::next_permutation(p, p + 3));
                for (int l = k; l < r; ++l) {
                    Rational b = random_rational(rng);
                    int q[4] = {i, j, k, l};
                    std::sort(q, q + 4);
                    do {
                        d4[idx4(q[0], q[1], q[2], q[3])] = b;
                    } while (std::next_permutation(q, q + 4));
                }
            }
        }
    }
    return AmplitudeData(r, e, df1, ddf1, d3, d4);
}

Series const_series(const char* var, const Rational& v, int order) {
    return Series::constant(var, v, order);
}

}  // namespace

TEST_SUITE("anomaly") {

TEST_CASE("symmetry is validated on construction") {
    CHECK_THROWS_AS(AmplitudeData(2, {1, 2, 3, 4}, {0, 0}, {0, 0, 0, 0},
                                  std::vector<Rational>(8, Rational(0)),
                                  std::vector<Rational>(16, Rational(0))),
                    std::invalid_argument);
    std::vector<Rational> d3(8, Rational(0));
    d3[1] = 5;  // (0,0,1) entry without its permutations
    CHECK_THROWS_AS(AmplitudeData(2, {1, 0, 0, 1}, {0, 0}, {0, 0, 0, 0}, d3,
                                  std::vector<Rational>(16, Rational(0))),
                    std::invalid_argument);
    CHECK_THROWS_AS(AmplitudeData(0, {}, {}, {}, {}, {}), std::invalid_argument);
}

TEST_CASE("single-slot values at one modulus") {
    CHECK(gamma2(scalar_data(0, 0, 0, 0, 0)) == 0);
    CHECK(gamma2(scalar_data(1, 0, 0, 1, 0)) == Rational(5, 24));
    CHECK(gamma2(scalar_data(1, 0, 0, 0, 1)) == Rational(1, 8));
    CHECK(gamma2(scalar_data(1, 1, 0, 0, 0)) == Rational(1, 2));
}

TEST_CASE("one-modulus collapsed closed form on random inputs") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        Rational e = random_rational(rng), df1 = random_rational(rng),
                 ddf1 = random_rational(rng), d3 = random_rational(rng),
                 d4 = random_rational(rng);
        Rational expected = e * (ddf1 / 2 + df1 * df1 / 2) +
                            e * e * (df1 * d3 / 2 + d4 / 8) +
                            e * e * e * d3 * d3 * Rational(5, 24);
        CHECK(gamma2(scalar_data(e, df1, ddf1, d3, d4)) == expected);
    }
}

TEST_CASE("matches the independent contraction oracle at two moduli") {
    std::mt19937 rng(909);
    for (int trial = 0; trial < 15; ++trial) {
        AmplitudeData data = random_data_r2(rng);
        CHECK(gamma2(data) == gamma2_oracle(data));
    }
}

TEST_CASE("invariant under relabeling of the moduli") {
    std::mt19937 rng(111);
    for (int trial = 0; trial < 10; ++trial) {
        AmplitudeData d = random_data_r2(rng);
        // permute indices 0 <-> 1 everywhere
        auto sw = [](int i) { return 1 - i; };
        std::vector<Rational> e(4), df1(2), ddf1(4), d3(8), d4(16);
        for (int i = 0; i < 2; ++i) {
            df1[static_cast<size_t>(sw(i))] = d.df1(i);
            for (int j = 0; j < 2; ++j) {
                e[static_cast<size_t>(sw(i) * 2 + sw(j))] = d.propagator(i, j);
                ddf1[static_cast<size_t>(sw(i) * 2 + sw(j))] = d.ddf1(i, j);
                for (int k = 0; k < 2; ++k) {
                    d3[static_cast<size_t>((sw(i) * 2 + sw(j)) * 2 + sw(k))] = d.d3f0(i, j, k);
                    for (int l = 0; l < 2; ++l) {
                        d4[static_cast<size_t>(((sw(i) * 2 + sw(j)) * 2 + sw(k)) * 2 + sw(l))] =
                            d.d4f0(i, j, k, l);
                    }
                }
            }
        }
        AmplitudeData relabeled(2, e, df1, ddf1, d3, d4);
        CHECK(gamma2(relabeled) == gamma2(d));
    }
}

TEST_CASE("linearity in the linear slots by superposition") {
    std::mt19937 rng(222);
    for (int trial = 0; trial < 10; ++trial) {
        Rational e = random_rational(rng), df1 = random_rational(rng);
        Rational a = random_rational(rng), b = random_rational(rng);
        // ddF1 slot
        CHECK(gamma2(scalar_data(e, df1, a + b, 0, 0)) + gamma2(scalar_data(e, df1, 0, 0, 0)) ==
              gamma2(scalar_data(e, df1, a, 0, 0)) + gamma2(scalar_data(e, df1, b, 0, 0)));
        // d4F0 slot
        CHECK(gamma2(scalar_data(e, df1, 0, 0, a + b)) + gamma2(scalar_data(e, df1, 0, 0, 0)) ==
              gamma2(scalar_data(e, df1, 0, 0, a)) + gamma2(scalar_data(e, df1, 0, 0, b)));
    }
}

TEST_CASE("genus-2 recursion step") {
    const char* var = "sigma1";
    Series zero(var, 12);

    SUBCASE("zero propagator returns the ambiguity") {
        std::mt19937 rng(3);
        std::vector<Rational> h2c(13);
        for (auto& c : h2c) c = random_rational(rng);
        Series h2(var, h2c);
        Series f0 = Series::monomial(var, 3, Rational(1, 18), 12);
        Series out = recursion_step_genus2(f0, zero, zero, h2);
        for (int m = 0; m <= out.truncation_order(); ++m) CHECK(out.coeff(m) == h2.coeff(m));
    }

    SUBCASE("all inputs zero") {
        CHECK(recursion_step_genus2(zero, zero, zero, zero).is_zero());
    }

    SUBCASE("constant propagator against cubic prepotential") {
        Series f0 = Series::monomial(var, 3, Rational(1, 18), 12);
        Series out =
            recursion_step_genus2(f0, zero, const_series(var, 1, 12), zero);
        CHECK(out.coeff(0) == Rational(-5, 216));
        for (int m = 1; m <= out.truncation_order(); ++m) CHECK(out.coeff(m) == 0);
    }

    SUBCASE("variable mismatch is rejected") {
        Series f0 = Series::monomial("psi", 3, 1, 12);
        CHECK_THROWS_AS(recursion_step_genus2(f0, zero, zero, zero), std::invalid_argument);
    }

    SUBCASE("coefficientwise agreement with gamma2 on constant data") {
        std::mt19937 rng(17);
        for (int trial = 0; trial < 10; ++trial) {
            Rational e = random_rational(rng), f1lin = random_rational(rng),
                     f0cub = random_rational(rng);
            // F1 = f1lin x, F0 = f0cub x^3: constant derivative data
            Series f1 = Series::monomial(var, 1, f1lin, 10);
            Series f0 = Series::monomial(var, 3, f0cub, 10);
            Series out = recursion_step_genus2(f0, f1, const_series(var, e, 10), zero);
            Rational expected = -gamma2(scalar_data(e, f1lin, 0, 6 * f0cub, 0));
            CHECK(out.coeff(0) == expected);
        }
    }
}

TEST_CASE("amplitude document parsing") {
    const char* good = R"({
      "modulus_count": 1,
      "E": [["1"]],
      "dF1": ["0"],
      "ddF1": [["0"]],
      "d3F0": [[["1"]]],
      "d4F0": [[[["0"]]]]
    })";
    AmplitudeData data = parse_amplitude_data(good);
    CHECK(gamma2(data) == Rational(5, 24));

    CHECK_THROWS_AS(parse_amplitude_data("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_amplitude_data("{}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_amplitude_data(R"({"modulus_count": 1, "E": [["1"]]})"),
                    std::invalid_argument);
    // wrong arity
    CHECK_THROWS_AS(parse_amplitude_data(R"({
      "modulus_count": 2,
      "E": [["1"]],
      "dF1": ["0", "0"],
      "ddF1": [["0","0"],["0","0"]],
      "d3F0": [[["0","0"],["0","0"]],[["0","0"],["0","0"]]],
      "d4F0": [[[["0","0"],["0","0"]],[["0","0"],["0","0"]]],[[["0","0"],["0","0"]],[["0","0"],["0","0"]]]]
    })"),
                    std::invalid_argument);
    // asymmetric propagator
    CHECK_THROWS_AS(parse_amplitude_data(R"({
      "modulus_count": 2,
      "E": [["1","2"],["3","4"]],
      "dF1": ["0", "0"],
      "ddF1": [["0","0"],["0","0"]],
      "d3F0": [[["0","0"],["0","0"]],[["0","0"],["0","0"]]],
      "d4F0": [[[["0","0"],["0","0"]],[["0","0"],["0","0"]]],[[["0","0"],["0","0"]],[["0","0"],["0","0"]]]]
    })"),
                    std::invalid_argument);
}

}  // TEST_SUITE
