#pragma once

// Published exact values of the orbifold invariants N_{g,k} of C^3/Z3,
// embedded as regression anchors. Marked-point entries cover g = 0..6,
// k = 1..4; the unmarked invariants are kept in the symbolic form
// constant + chi * coefficient so the chi = 3 substitution is itself a
// tested step.
//
// Entries are stored as their printed factored forms (e.g.
// "1/(2^4*3^4*5)") and evaluated once when the table is built; the source
// strings stay available for audit. The table is immutable after
// construction and freely shareable.

#include "orbgw/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace orbgw {

/// Evaluate a product-of-prime-powers literal: optional leading '-', an
/// integer or product a^b*c^d..., optionally over a '/' denominator which
/// may be parenthesized. Examples: "0", "-14/3^5", "1/(2^4*3^4*5)".
Rational parse_factored(const std::string& text);

struct UnmarkedFormula {
    Rational constant_term;
    Rational chi_coefficient;
};

class InvariantTable {
  public:
    static const InvariantTable& instance();

    /// N_{g,k} for g in 0..6, k in 1..4; throws std::out_of_range otherwise.
    Rational ngk(int g, int k) const;

    /// Printed source string behind ngk(g, k), for audit.
    const std::string& ngk_source(int g, int k) const;

    /// constant + chi * coefficient for g in 2..5.
    Rational n_g0_formula(int g, const Rational& chi) const;

    const UnmarkedFormula& unmarked(int g) const;

    static constexpr int kMaxGenus = 6;
    static constexpr int kMaxMarks = 4;
    static constexpr int kUnmarkedMinGenus = 2;
    static constexpr int kUnmarkedMaxGenus = 5;

  private:
    InvariantTable();

    std::map<std::pair<int, int>, std::pair<std::string, Rational>> marked_;
    std::map<int, UnmarkedFormula> unmarked_;
};

struct CompareReport {
    bool pass;
    Rational computed;
    Rational expected;
    int g;
    int k;

    std::string to_string() const;
};

/// Structural equality check of a computed value against the table.
CompareReport compare(const Rational& computed, int g, int k);

}  // namespace orbgw
