#include "orbgw/mirror.hpp"

#include "orbgw/picard_fuchs.hpp"

#include <stdexcept>

namespace orbgw {

MirrorFrame make_mirror_frame(int working_order) {
    if (working_order < 3) throw std::invalid_argument("working order must be at least 3");
    MirrorFrame frame{bk_series(1, working_order), bk_series(2, working_order), working_order};
    if (frame.sigma1_of_psi.coeff(0) != 0 || frame.sigma1_of_psi.coeff(1) != 1) {
        throw std::logic_error("sigma1(psi) must start as psi + higher order");
    }
    for (int m = 0; m <= working_order; ++m) {
        if (m % 3 != 1 && frame.sigma1_of_psi.coeff(m) != 0) {
            throw std::logic_error("sigma1(psi) support must sit at exponents 1 mod 3");
        }
        if (m % 3 != 2 && frame.sigma2_of_psi.coeff(m) != 0) {
            throw std::logic_error("sigma2(psi) support must sit at exponents 2 mod 3");
        }
    }
    return frame;
}

Series psi_of_sigma1(const MirrorFrame& frame) {
    return revert(frame.sigma1_of_psi).with_variable(kSigmaVariable);
}

Series prepotential(const MirrorFrame& frame) {
    Series sigma2_of_sigma1 = compose(frame.sigma2_of_psi, psi_of_sigma1(frame));
    return integrate(scale(Rational(-1, 3), sigma2_of_sigma1));
}

std::vector<Rational> genus0_invariants(const MirrorFrame& frame, int kmax) {
    if (kmax < 1) throw std::invalid_argument("kmax must be at least 1");
    if (frame.working_order < 3 * kmax) {
        throw std::invalid_argument("working order " + std::to_string(frame.working_order) +
                                    " too small for k <= " + std::to_string(kmax) +
                                    " (needs >= " + std::to_string(3 * kmax) + ")");
    }
    Series f0 = prepotential(frame);
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
        out.push_back(Rational(factorial(3 * k)) * f0.coeff(3 * k));
    }
    return out;
}

Series period_matrix_1d(const Series& f0) {
    return differentiate(differentiate(f0));
}

}  // namespace orbgw
