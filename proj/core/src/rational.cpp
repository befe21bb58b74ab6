#include "orbgw/rational.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace orbgw {

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += "/" + denominator(q).str();
    }
    return s;
}

Rational parse_rational(const std::string& text) {
    auto fail = [&] { throw std::invalid_argument("not a rational: '" + text + "'"); };
    auto is_digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string num = text;
    std::string den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!num.empty() && num[0] == '-') num = num.substr(1);
    if (!is_digits(num) || !is_digits(den)) fail();
    Integer d(den);
    if (d == 0) fail();
    return Rational(Integer(text.substr(0, 1) == "-" ? "-" + num : num), d);
}

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step: r is C(n, i+1) times an integer
    }
    return r;
}

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli index must be non-negative");
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1, solved for B_m.
    static std::vector<Rational> cache{Rational(1)};
    static std::mutex lock;
    std::scoped_lock guard(lock);
    for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k) {
            acc += Rational(binomial(m + 1, k)) * cache[k];
        }
        cache.push_back(-acc / (m + 1));
    }
    return cache[n];
}

Rational rising_cubed_ratio(int n, int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("rising_cubed_ratio: k must be 1 or 2");
    if (n < 0) throw std::invalid_argument("rising_cubed_ratio: n must be non-negative");
    Rational r = 1;
    for (int j = 0; j < n; ++j) {
        Rational factor(3 * j + k, 3);
        r *= factor * factor * factor;
    }
    return r;
}

}  // namespace orbgw
