#pragma once

// The orbifold mirror map (sigma1, sigma2) = (B_1(psi), B_2(psi)), its
// inversion, the genus-0 prepotential fixed by sigma2 = -3 dF0/dsigma1, and
// extraction of the genus-0 invariants N_{0,k} = (3k)! [sigma1^{3k}] F0.
//
// The mirror map is taken with unit scale, exactly as the solution basis is
// normalized in picard_fuchs.hpp; N_{0,1} = 1/3 is the check that pins this
// scale, and no rescaling knob is exposed.

#include "orbgw/rational.hpp"
#include "orbgw/series.hpp"

#include <vector>

namespace orbgw {

inline constexpr const char* kSigmaVariable = "sigma1";

struct MirrorFrame {
    Series sigma1_of_psi;  // = B_1, zero constant term, unit linear coefficient
    Series sigma2_of_psi;  // = B_2
    int working_order;
};

/// Build the frame from the Picard-Fuchs solution basis at the given order
/// and validate its defining properties (leading coefficients and the mod-3
/// support pattern).
MirrorFrame make_mirror_frame(int working_order);

/// Reversion of sigma1(psi), relabeled to the sigma1 variable.
Series psi_of_sigma1(const MirrorFrame& frame);

/// F0(sigma1) = integral of -sigma2(sigma1)/3, zero constant term.
Series prepotential(const MirrorFrame& frame);

/// N_{0,k} = (3k)! [sigma1^{3k}] F0 for k = 1..kmax. Requires
/// working_order >= 3 kmax.
std::vector<Rational> genus0_invariants(const MirrorFrame& frame, int kmax);

/// One-modulus period matrix tau = d^2 F0 / dsigma1^2.
Series period_matrix_1d(const Series& f0);

}  // namespace orbgw
