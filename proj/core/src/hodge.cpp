#include "orbgw/hodge.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace orbgw {

namespace {

void add_weighted_term(WeightedClassPoly& p, const std::array<int, 3>& t, const LambdaPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.terms.emplace(t, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) p.terms.erase(it);
    }
}

// Scalar polynomial in t1,t2,t3.
using TPoly = std::map<std::array<int, 3>, Rational>;

TPoly tpoly_mul(const TPoly& a, const TPoly& b) {
    TPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            Rational c = out[e] += ca * cb;
            if (c == 0) out.erase(e);
        }
    }
    return out;
}

TPoly elementary_power_product(int a, int b, int c) {
    const TPoly e1{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}};
    const TPoly e2{{{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}};
    const TPoly e3{{{1, 1, 1}, 1}};
    TPoly out{{{0, 0, 0}, 1}};
    for (int i = 0; i < a; ++i) out = tpoly_mul(out, e1);
    for (int i = 0; i < b; ++i) out = tpoly_mul(out, e2);
    for (int i = 0; i < c; ++i) out = tpoly_mul(out, e3);
    return out;
}

}  // namespace

SymmetricDecomposition decompose_symmetric(const WeightedClassPoly& p) {
    SymmetricDecomposition out;
    WeightedClassPoly rest = p;
    while (!rest.terms.empty()) {
        // lex-largest t-exponent triple; for a symmetric polynomial it is
        // weakly decreasing
        auto lead = std::prev(rest.terms.end());
        const auto [p1, p2, p3] = lead->first;
        if (!(p1 >= p2 && p2 >= p3)) {
            throw std::invalid_argument("decompose_symmetric: input is not symmetric");
        }
        std::array<int, 3> ekey{p1 - p2, p2 - p3, p3};
        LambdaPoly coeff = lead->second;
        out.coefficients[ekey] = coeff;
        for (const auto& [t, scalar] : elementary_power_product(ekey[0], ekey[1], ekey[2])) {
            add_weighted_term(rest, t, coeff.scaled(-scalar));
        }
    }
    return out;
}

WeightedClassPoly recompose_symmetric(const SymmetricDecomposition& d) {
    WeightedClassPoly out;
    for (const auto& [ekey, coeff] : d.coefficients) {
        for (const auto& [t, scalar] : elementary_power_product(ekey[0], ekey[1], ekey[2])) {
            add_weighted_term(out, t, coeff.scaled(scalar));
        }
    }
    return out;
}

Rational fp_integral(int g) {
    if (g < 2) throw std::invalid_argument("fp_integral requires g >= 2");
    Rational b_low = bernoulli(2 * g - 2);
    Rational b_high = bernoulli(2 * g);
    return Rational(1, 2 * factorial(2 * g - 2)) * abs(b_low) / (2 * g - 2) * abs(b_high) /
           (2 * g);
}

WeightedClassPoly disc_integrand(int g) {
    if (g < 2) throw std::invalid_argument("disc_integrand requires g >= 2");
    WeightedClassPoly product;
    product.terms[{0, 0, 0}] = LambdaPoly::term(LambdaMonomial(), 1);
    for (int i = 0; i < 3; ++i) {
        WeightedClassPoly next;
        for (int j = 0; j <= g; ++j) {
            // factor i contributes (-1)^j lambda_j t_i^{g-j}
            LambdaPoly lam = (j == 0) ? LambdaPoly::term(LambdaMonomial(), 1)
                                      : LambdaPoly::generator(Generator{GeneratorFamily::plain, j});
            if (j % 2 != 0) lam = lam.scaled(-1);
            std::array<int, 3> t{0, 0, 0};
            t[static_cast<size_t>(i)] = g - j;
            for (const auto& [te, coeff] : product.terms) {
                std::array<int, 3> sum{te[0] + t[0], te[1] + t[1], te[2] + t[2]};
                add_weighted_term(next, sum, coeff * lam);
            }
        }
        product = std::move(next);
    }
    return product;
}

DiscReduction disc_integrand_reduction(int g) {
    const int top = 3 * g - 3;
    WeightedClassPoly full = disc_integrand(g);

    DiscReduction result{};
    WeightedClassPoly top_piece;
    for (const auto& [t, coeff] : full.terms) {
        for (const auto& [degree, piece] : coeff.homogeneous_pieces()) {
            if (degree > top) {
                result.discarded_above += static_cast<int>(piece.terms().size());
            } else if (degree < top) {
                result.discarded_below += static_cast<int>(piece.terms().size());
            } else {
                add_weighted_term(top_piece, t, piece);
            }
        }
    }

    SymmetricDecomposition decomp = decompose_symmetric(top_piece);
    // soundness of the rewrite
    bool recomposes = recompose_symmetric(decomp).terms == top_piece.terms;

    // Calabi-Yau weights kill every basis monomial containing e1; in
    // t-degree 3 the only remaining one is e3 itself.
    LambdaPoly survivor;
    bool e3_exact = true;
    for (const auto& [ekey, coeff] : decomp.coefficients) {
        if (ekey[0] != 0) continue;  // e1 factor: vanishes at e1 = 0
        if (ekey == std::array<int, 3>{0, 0, 1}) {
            survivor = coeff;
        } else if (!coeff.is_zero()) {
            e3_exact = false;
        }
    }
    result.weight_check = recomposes && e3_exact;
    result.pre_reduction = survivor;
    result.reduced = reduce(survivor, mumford_relations(g));
    return result;
}

std::optional<Rational> conn_contribution(int g) {
    if (g < 2) throw std::invalid_argument("conn_contribution requires g >= 2");
    LambdaPoly cube =
        LambdaPoly::term(LambdaMonomial({{Generator{GeneratorFamily::omega, g - 1}, 3}}), 1);
    if (is_zero_in_quotient(cube, g_mumford_relations(g))) return Rational(0);
    return std::nullopt;
}

UnpointedResult unpointed_invariant(int g) {
    DiscReduction disc = disc_integrand_reduction(g);
    if (!disc.weight_check) {
        throw std::logic_error("disc integrand failed the weight-independence check");
    }

    UnpointedResult out;
    out.fp_value = fp_integral(g);

    // lambda_g lambda_{g-1} lambda_{g-2}; at g = 2 the last factor is
    // lambda_0 = 1 and is simply absent from the monomial
    std::map<Generator, int> exps;
    for (int i : {g, g - 1, g - 2}) {
        if (i >= 1) exps[Generator{GeneratorFamily::plain, i}] += 1;
    }
    LambdaPoly fp_class = LambdaPoly::term(LambdaMonomial(std::move(exps)), 1);
    LambdaPoly nf = reduce(fp_class, mumford_relations(g));

    if (nf.is_zero()) {
        if (!disc.reduced.is_zero()) {
            out.status = UnpointedResult::Status::non_proportional;
            return out;
        }
        out.disc_coefficient = 0;
    } else {
        const LambdaMonomial& lead = nf.terms().rbegin()->first;
        out.disc_coefficient = disc.reduced.coeff(lead) / nf.coeff(lead);
        if (!(disc.reduced == nf.scaled(out.disc_coefficient))) {
            out.status = UnpointedResult::Status::non_proportional;
            return out;
        }
    }

    out.connected = conn_contribution(g);
    if (!out.connected) {
        out.status = UnpointedResult::Status::unsupported_connected;
        return out;
    }
    out.status = UnpointedResult::Status::value;
    out.value = out.disc_coefficient * out.fp_value / 3 + *out.connected;
    return out;
}

Rational constant_map_invariant(int g, const Rational& chi) {
    if (g < 2) throw std::invalid_argument("constant_map_invariant requires g >= 2");
    Rational v = chi * fp_integral(g);
    return (g % 2 == 0) ? v : -v;
}

int expected_dimension(int g, int n, int dim_x, int k_dot_beta) {
    return (1 - g) * (dim_x - 3) - k_dot_beta + n;
}

Rational cover_map_degree(int g) {
    if (g < 0) throw std::invalid_argument("cover_map_degree requires g >= 0");
    return Rational(boost::multiprecision::pow(Integer(3), static_cast<unsigned>(2 * g)), 3);
}

}  // namespace orbgw
