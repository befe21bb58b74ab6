#pragma once

// Graded-commutative polynomial algebra in Hodge-class generators, relation
// ideals obtained from Chern-polynomial identities, and normal-form
// reduction by per-degree exact linear algebra.
//
// Three generator families exist: the Chern classes lambda_i of the Hodge
// bundle (written l1, l2, ...) and the classes of the two eigen-subbundles
// of a Z3-cover's Hodge bundle (l1w, l2w, ... and l1wb, l2wb, ...). The
// cohomological degree of every generator equals its index.
//
// Monomials are ordered by cohomological degree, ties broken reverse
// lexicographically over the generator order l1 < l2 < ... < l1w < ... <
// l1wb < ...: the largest generator with differing exponent decides, and
// the smaller exponent there wins. With this order the reduced form of the
// top-degree Mumford class comes out on the square-free monomial
// l1*l2*...*lg, matching how these classes are conventionally written. The
// order is fixed so normal forms are bit-stable across runs.
//
// Reduction works degree by degree: the degree-d slice of the ideal is
// spanned by {relation * monomial} products, row-reduced once into a
// canonical reduced row echelon form, and the normal form of p is p minus
// its projection onto that span. RREF depends only on the row space, so the
// result is independent of the order relations are supplied in.
//
// Everything here is a pure function over immutable values; the reduction
// workspace is per call.

#include "orbgw/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace orbgw {

enum class GeneratorFamily { plain = 0, omega = 1, omega_bar = 2 };

struct Generator {
    GeneratorFamily family = GeneratorFamily::plain;
    int index = 1;  // cohomological degree

    auto operator<=>(const Generator&) const = default;

    /// "l3", "l2w", "l1wb"
    std::string name() const;
    static Generator parse(const std::string& name);
};

/// Exponent map; absent generators have exponent zero.
class LambdaMonomial {
  public:
    LambdaMonomial() = default;
    explicit LambdaMonomial(std::map<Generator, int> exponents);

    const std::map<Generator, int>& exponents() const { return exponents_; }
    int exponent(const Generator& g) const;
    int degree() const;  // cohomological
    bool is_unit() const { return exponents_.empty(); }

    LambdaMonomial times(const LambdaMonomial& other) const;
    bool operator==(const LambdaMonomial& other) const = default;

    std::string to_string() const;  // "l1^3" or "l1*l2"; "1" for the unit

  private:
    std::map<Generator, int> exponents_;  // strictly positive values only
};

/// Graded-lex compare; returns <0, 0, >0 like strcmp.
int compare_monomials(const LambdaMonomial& a, const LambdaMonomial& b);

struct MonomialLess {
    bool operator()(const LambdaMonomial& a, const LambdaMonomial& b) const {
        return compare_monomials(a, b) < 0;
    }
};

class LambdaPoly {
  public:
    LambdaPoly() = default;
    static LambdaPoly term(const LambdaMonomial& m, const Rational& c);
    static LambdaPoly generator(const Generator& g);

    const std::map<LambdaMonomial, Rational, MonomialLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    Rational coeff(const LambdaMonomial& m) const;

    void add_term(const LambdaMonomial& m, const Rational& c);

    LambdaPoly operator+(const LambdaPoly& other) const;
    LambdaPoly operator-(const LambdaPoly& other) const;
    LambdaPoly operator*(const LambdaPoly& other) const;
    LambdaPoly scaled(const Rational& c) const;
    bool operator==(const LambdaPoly& other) const = default;

    /// Slices by cohomological degree, lowest degree first.
    std::vector<std::pair<int, LambdaPoly>> homogeneous_pieces() const;

    /// Sorted term list, leading (largest) monomial first:
    /// "-1 * l1^3 + 3 * l1*l2". Zero serializes as "0".
    std::string to_string() const;

  private:
    std::map<LambdaMonomial, Rational, MonomialLess> terms_;  // no zero values stored
};

/// Inverse of LambdaPoly::to_string. Throws std::invalid_argument on
/// malformed input.
LambdaPoly parse_lambda_poly(const std::string& text);

/// Swap the omega and omega-bar generator families in every term.
LambdaPoly swap_eigenfamilies(const LambdaPoly& p);

struct RelationSet {
    std::vector<Generator> generators;
    std::vector<LambdaPoly> relations;  // each homogeneous, positive degree
};

/// Relations among l1..lg from c_t(E + E^dual) = 1: all identically nonzero
/// positive-degree graded pieces of (sum l_i t^i)(sum (-1)^j l_j t^j) - 1.
RelationSet mumford_relations(int g);

/// Relations among the eigenbundle classes l{1..g-1}w, l{1..g-1}wb from
/// c_t(E_w + E_wb^dual) = 1, same expansion with ranks g-1. Requires g >= 2.
RelationSet g_mumford_relations(int g);

/// Canonical representative of p modulo the ideal generated by rel.
/// Mixed-degree input is reduced piecewise. The result is zero iff p lies in
/// the ideal.
LambdaPoly reduce(const LambdaPoly& p, const RelationSet& rel);

bool is_zero_in_quotient(const LambdaPoly& p, const RelationSet& rel);

/// All monomials of the given cohomological degree over the generator list,
/// in decreasing monomial order.
std::vector<LambdaMonomial> monomials_of_degree(const std::vector<Generator>& generators,
                                                int degree);

}  // namespace orbgw
