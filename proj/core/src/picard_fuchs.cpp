#include "orbgw/picard_fuchs.hpp"

#include <cassert>
#include <stdexcept>
#include <vector>

namespace orbgw {

namespace {

void require_k(int k) {
    if (k != 1 && k != 2) throw std::invalid_argument("solution index k must be 1 or 2");
}

}  // namespace

Series bk_series(int k, int truncation_order) {
    require_k(k);
    if (truncation_order < k) {
        throw std::invalid_argument("truncation order must be at least k");
    }
    std::vector<Rational> c(static_cast<size_t>(truncation_order) + 1, Rational(0));
    for (int n = 0; 3 * n + k <= truncation_order; ++n) {
        int m = 3 * n + k;
        Rational value = rising_cubed_ratio(n, k) / Rational(factorial(m));
        if ((n + k + 1) % 2 != 0) value = -value;
        c[static_cast<size_t>(m)] = value;
    }
    return Series(kPsiVariable, std::move(c));
}

Series apply_pf_operator(const Series& f) {
    const int order = f.truncation_order();
    Series t1 = theta(f);
    Series t2 = theta(t1);
    Series t3 = theta(t2);
    // (Theta - 2)(Theta - 1)Theta f = t3 - 3 t2 + 2 t1
    Series euler_part = add(sub(t3, scale(3, t2)), scale(2, t1));
    if (order < 3) {
        // psi^3 Theta^3 f lies entirely past the certified range
        return scale(27, euler_part);
    }
    Series psi_cubed = Series::monomial(f.variable(), 3, 1, order);
    return add(mul(psi_cubed, t3), scale(27, euler_part));
}

Series bk_via_recurrence(int k, int truncation_order) {
    require_k(k);
    if (truncation_order < k) {
        throw std::invalid_argument("truncation order must be at least k");
    }
    std::vector<Rational> c(static_cast<size_t>(truncation_order) + 1, Rational(0));
    c[static_cast<size_t>(k)] = Rational((k % 2 != 0) ? 1 : -1) / Rational(factorial(k));
    for (int m = k + 3; m <= truncation_order; m += 3) {
        assert(m >= 3);  // denominator m(m-1)(m-2) cannot vanish
        Rational step(-Integer(m - 3) * (m - 3) * (m - 3),
                      Integer(27) * m * (m - 1) * (m - 2));
        c[static_cast<size_t>(m)] = c[static_cast<size_t>(m - 3)] * step;
    }
    return Series(kPsiVariable, std::move(c));
}

}  // namespace orbgw
