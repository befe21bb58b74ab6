#include "orbgw/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace orbgw {

namespace {

void require_same_variable(const Series& f, const Series& g, const char* op) {
    if (f.variable() != g.variable()) {
        throw std::invalid_argument(std::string(op) + ": variable mismatch '" + f.variable() +
                                    "' vs '" + g.variable() + "'");
    }
}

}  // namespace

Series::Series(std::string variable, int truncation_order) : variable_(std::move(variable)) {
    if (truncation_order < 0) throw std::invalid_argument("truncation order must be >= 0");
    coeffs_.assign(static_cast<size_t>(truncation_order) + 1, Rational(0));
}

Series::Series(std::string variable, std::vector<Rational> coeffs)
    : variable_(std::move(variable)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("coefficient list must be non-empty");
}

Series Series::constant(const std::string& variable, const Rational& value, int order) {
    Series s(variable, order);
    s.coeffs_[0] = value;
    return s;
}

Series Series::monomial(const std::string& variable, int exponent, const Rational& coeff,
                        int order) {
    if (exponent < 0 || exponent > order) {
        throw std::invalid_argument("monomial exponent outside 0..order");
    }
    Series s(variable, order);
    s.coeffs_[exponent] = coeff;
    return s;
}

const Rational& Series::coeff(int m) const {
    if (m < 0 || m > truncation_order()) {
        throw std::out_of_range("coefficient index outside certified range");
    }
    return coeffs_[static_cast<size_t>(m)];
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Series Series::with_variable(std::string variable) const {
    Series s = *this;
    s.variable_ = std::move(variable);
    return s;
}

std::string Series::to_text() const {
    std::ostringstream out;
    out << "series " << variable_ << " order=" << truncation_order() << "\n";
    for (int m = 0; m <= truncation_order(); ++m) {
        if (coeffs_[static_cast<size_t>(m)] != 0) {
            out << m << " " << to_string(coeffs_[static_cast<size_t>(m)]) << "\n";
        }
    }
    return out.str();
}

Series add(const Series& f, const Series& g) {
    require_same_variable(f, g, "add");
    int order = std::min(f.truncation_order(), g.truncation_order());
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) c[static_cast<size_t>(m)] = f.coeff(m) + g.coeff(m);
    return Series(f.variable(), std::move(c));
}

Series sub(const Series& f, const Series& g) {
    require_same_variable(f, g, "sub");
    int order = std::min(f.truncation_order(), g.truncation_order());
    std::vector<Rational> c(static_cast<size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) c[static_cast<size_t>(m)] = f.coeff(m) - g.coeff(m);
    return Series(f.variable(), std::move(c));
}

Series mul(const Series& f, const Series& g) {
    require_same_variable(f, g, "mul");
    int order = std::min(f.truncation_order(), g.truncation_order());
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    for (int i = 0; i <= order; ++i) {
        if (f.coeff(i) == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (g.coeff(j) == 0) continue;
            c[static_cast<size_t>(i + j)] += f.coeff(i) * g.coeff(j);
        }
    }
    return Series(f.variable(), std::move(c));
}

Series scale(const Rational& c, const Series& f) {
    std::vector<Rational> out(static_cast<size_t>(f.truncation_order()) + 1);
    for (int m = 0; m <= f.truncation_order(); ++m) out[static_cast<size_t>(m)] = c * f.coeff(m);
    return Series(f.variable(), std::move(out));
}

Series theta(const Series& f) {
    std::vector<Rational> out(static_cast<size_t>(f.truncation_order()) + 1);
    for (int m = 0; m <= f.truncation_order(); ++m) out[static_cast<size_t>(m)] = m * f.coeff(m);
    return Series(f.variable(), std::move(out));
}

Series differentiate(const Series& f) {
    if (f.truncation_order() < 1) {
        throw std::invalid_argument("differentiate: order 0 input certifies nothing");
    }
    std::vector<Rational> out(static_cast<size_t>(f.truncation_order()));
    for (int m = 1; m <= f.truncation_order(); ++m) {
        out[static_cast<size_t>(m - 1)] = m * f.coeff(m);
    }
    return Series(f.variable(), std::move(out));
}

Series integrate(const Series& f) {
    std::vector<Rational> out(static_cast<size_t>(f.truncation_order()) + 2, Rational(0));
    for (int m = 0; m <= f.truncation_order(); ++m) {
        out[static_cast<size_t>(m + 1)] = f.coeff(m) / (m + 1);
    }
    return Series(f.variable(), std::move(out));
}

Series compose(const Series& f, const Series& g) {
    if (g.coeff(0) != 0) {
        throw std::invalid_argument("compose: inner series must have zero constant term");
    }
    int order = std::min(f.truncation_order(), g.truncation_order());
    Series inner = g;
    if (g.truncation_order() != order) {
        std::vector<Rational> c(static_cast<size_t>(order) + 1);
        for (int m = 0; m <= order; ++m) c[static_cast<size_t>(m)] = g.coeff(m);
        inner = Series(g.variable(), std::move(c));
    }
    // Horner from the top coefficient down.
    Series acc = Series::constant(inner.variable(), f.coeff(f.truncation_order()), order);
    for (int i = f.truncation_order() - 1; i >= 0; --i) {
        acc = mul(acc, inner);
        acc = add(acc, Series::constant(inner.variable(), f.coeff(i), order));
    }
    return acc;
}

Series revert(const Series& f) {
    if (f.coeff(0) != 0) {
        throw std::invalid_argument("revert: series must have zero constant term");
    }
    if (f.truncation_order() < 1 || f.coeff(1) == 0) {
        throw std::invalid_argument("revert: series must have nonzero linear coefficient");
    }
    const int order = f.truncation_order();
    // Solve sum_{i<=m} g_i [x^m](f^i) = [m == 1] for g_m, order by order; the
    // system is triangular because f has valuation 1.
    std::vector<Rational> g(static_cast<size_t>(order) + 1, Rational(0));
    std::vector<Series> powers;  // powers[i-1] = f^i
    powers.reserve(static_cast<size_t>(order));
    powers.push_back(f);
    for (int i = 2; i <= order; ++i) powers.push_back(mul(powers.back(), f));
    g[1] = Rational(1) / f.coeff(1);
    for (int m = 2; m <= order; ++m) {
        Rational acc = 0;
        for (int i = 1; i < m; ++i) acc += g[static_cast<size_t>(i)] * powers[static_cast<size_t>(i - 1)].coeff(m);
        g[static_cast<size_t>(m)] = -acc / powers[static_cast<size_t>(m - 1)].coeff(m);
    }
    return Series(f.variable(), std::move(g));
}

}  // namespace orbgw
