#pragma once

// Truncated univariate formal power series over Rational.
//
// A Series knows its coefficients for exponents 0..truncation_order();
// coefficients beyond the truncation order are *unknown*, not zero. Every
// operation propagates the truncation order conservatively so a result never
// claims coefficients it cannot certify:
//
//   add/sub/scale     min(N1, N2)
//   mul               min(N1, N2)
//   theta             N
//   differentiate     N - 1
//   integrate         N + 1
//   compose/revert    min of the participating orders
//
// Values are immutable after construction and freely shareable between
// threads; all operations are pure functions.
//
// Series carry a variable tag ("psi", "sigma1", ...). Binary operations
// require matching tags; composition adopts the tag of the inner series and
// reversion keeps the tag of its input, so callers relabel explicitly via
// with_variable() when the variable genuinely changes meaning.

#include "orbgw/rational.hpp"

#include <string>
#include <vector>

namespace orbgw {

class Series {
  public:
    /// Zero series of the given truncation order.
    Series(std::string variable, int truncation_order);

    /// coeffs[m] is the coefficient of x^m; truncation order = size - 1.
    Series(std::string variable, std::vector<Rational> coeffs);

    static Series constant(const std::string& variable, const Rational& value, int order);
    static Series monomial(const std::string& variable, int exponent, const Rational& coeff,
                           int order);

    const std::string& variable() const { return variable_; }
    int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of x^m; m must lie in 0..truncation_order().
    const Rational& coeff(int m) const;

    bool is_zero() const;

    /// Same tag, same order, same coefficient list.
    bool operator==(const Series& other) const = default;

    /// Copy with a new variable tag.
    Series with_variable(std::string variable) const;

    /// Line-oriented text form: a header with tag and order, then one
    /// "exponent p/q" line per nonzero coefficient in increasing exponent.
    std::string to_text() const;

  private:
    std::string variable_;
    std::vector<Rational> coeffs_;
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series mul(const Series& f, const Series& g);
Series scale(const Rational& c, const Series& f);

/// theta = x d/dx: a_m -> m a_m. Truncation order preserved.
Series theta(const Series& f);

Series differentiate(const Series& f);

/// Formal antiderivative with zero constant term.
Series integrate(const Series& f);

/// f(g(x)). Requires g(0) = 0.
Series compose(const Series& f, const Series& g);

/// Compositional inverse: returns g with compose(g, f) = x up to the
/// certified order. Requires f(0) = 0 and f'(0) != 0. Solved order by order
/// as a triangular system.
Series revert(const Series& f);

inline Series operator+(const Series& f, const Series& g) { return add(f, g); }
inline Series operator-(const Series& f, const Series& g) { return sub(f, g); }
inline Series operator*(const Series& f, const Series& g) { return mul(f, g); }
inline Series operator*(const Rational& c, const Series& f) { return scale(c, f); }

}  // namespace orbgw
