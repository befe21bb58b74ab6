#pragma once

// The Hodge-integral route to the unpointed orbifold invariants of C^3/Z3:
// the Faber-Pandharipande closed form, reduction of the equivariant
// disconnected-cover integrand under Calabi-Yau weights, vanishing analysis
// of the connected-cover contribution, and assembly of the genus-g bracket.
//
// Evaluating a genuinely nonzero Z3-Hodge integral is outside what the
// quotient-ring engine can do; where the analysis does not prove vanishing
// the operations return an "unsupported" outcome instead of a number.

#include "orbgw/lambda_algebra.hpp"
#include "orbgw/rational.hpp"

#include <array>
#include <map>
#include <optional>

namespace orbgw {

/// Polynomial in the equivariant weights t1,t2,t3 with LambdaPoly
/// coefficients, keyed by the t-exponent triple.
struct WeightedClassPoly {
    std::map<std::array<int, 3>, LambdaPoly> terms;  // nonzero values only
};

/// Coefficients in the elementary symmetric basis: key (a,b,c) stands for
/// e1^a e2^b e3^c.
struct SymmetricDecomposition {
    std::map<std::array<int, 3>, LambdaPoly> coefficients;
};

/// Rewrite a symmetric t-polynomial in the elementary basis by iterated
/// leading-term subtraction. Exact; throws std::invalid_argument if the
/// input is not symmetric (the subtraction would not terminate).
SymmetricDecomposition decompose_symmetric(const WeightedClassPoly& p);

/// Expand an elementary-basis decomposition back into t-monomials.
WeightedClassPoly recompose_symmetric(const SymmetricDecomposition& d);

/// integral over M_g-bar of lambda_g lambda_{g-1} lambda_{g-2}
///   = 1/(2(2g-2)!) * |B_{2g-2}|/(2g-2) * |B_{2g}|/(2g),  g >= 2.
Rational fp_integral(int g);

/// The full equivariant Euler-class product prod_{i=1}^3 sum_j (-1)^j
/// lambda_j t_i^{g-j} for the disconnected-cover component.
WeightedClassPoly disc_integrand(int g);

struct DiscReduction {
    LambdaPoly pre_reduction;  // the t1 t2 t3 coefficient at Calabi-Yau weights
    LambdaPoly reduced;        // its normal form modulo the Mumford ideal
    bool weight_check;         // remainder at e1 = 0 was an exact e3 multiple
    int discarded_above;       // integrand terms of lambda-degree > 3g-3 (cohomologically zero)
    int discarded_below;       // terms of lambda-degree < 3g-3 (vanish against the top class)
};

/// Extract the lambda-degree 3g-3 piece of disc_integrand(g), specialize to
/// Calabi-Yau weights (e1 = 0), strip the exact t1 t2 t3 factor and reduce
/// modulo mumford_relations(g).
DiscReduction disc_integrand_reduction(int g);

/// Connected-cover contribution (-1)^{g-1} * integral of lambda_{g-1,w}^3.
/// Returns 0 when the G-Mumford ideal forces the class to vanish; nullopt
/// ("unsupported") when it does not, since the integral then needs Z3-Hodge
/// integral technology this library does not contain.
std::optional<Rational> conn_contribution(int g);

struct UnpointedResult {
    enum class Status {
        value,                  // exact invariant computed
        unsupported_connected,  // connected-cover integral not derivable here
        non_proportional,       // disc reduction not a multiple of the FP class
    };
    Status status = Status::value;
    Rational value;                    // set when status == value
    Rational disc_coefficient;         // c with reduced = c * nf(l_g l_{g-1} l_{g-2})
    Rational fp_value;                 // fp_integral(g)
    std::optional<Rational> connected; // nullopt when unsupported
};

/// (1/3) c fp_integral(g) + conn_contribution(g), with c determined by
/// asserting the disc reduction is proportional to the normal form of
/// lambda_g lambda_{g-1} lambda_{g-2}.
UnpointedResult unpointed_invariant(int g);

/// Constant-map invariant of the resolution: (-1)^g chi fp_integral(g).
Rational constant_map_invariant(int g, const Rational& chi = Rational(3));

/// (1-g)(dim X - 3) - K_X.beta + n
int expected_dimension(int g, int n, int dim_x, int k_dot_beta);

/// Degree 3^{2g}/3 of the forgetful map from Z3-covers to curves.
Rational cover_map_degree(int g);

}  // namespace orbgw
