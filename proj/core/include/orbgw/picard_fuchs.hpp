#pragma once

// The Picard-Fuchs operator at the orbifold point of the local P^2 mirror,
// and its holomorphic solution basis B_1(psi), B_2(psi), built two
// independent ways so they can be cross-checked coefficient by coefficient.
//
// Everything is expressed in the normalization in which the solution series
// read
//
//   B_k(psi) = sum_{n>=0} (-1)^{n+k+1} psi^{3n+k} / (3n+k)!
//              * (Gamma(n + k/3) / Gamma(k/3))^3,
//
// i.e. B_1 = psi - psi^4/648 + ..., B_2 = -psi^2/2 + psi^5/405 - ....
// In this normalization the annihilating operator is
//
//   D = psi^3 Theta^3 + 27 (Theta - 2)(Theta - 1) Theta,   Theta = psi d/dpsi.
//
// The coordinate on the mirror moduli space is only defined up to a cube-root
// branch times 1/3 (psi vs q^{-1/3}); rescaling psi by c multiplies the
// second term of D by 27 c^3 and nothing here depends on that choice. The
// normalization above is the one whose mirror map reproduces the known
// genus-0 invariants with unit scale, which is how the scale is fixed
// downstream.

#include "orbgw/series.hpp"

namespace orbgw {

/// Name of the orbifold-point coordinate as used by this library.
inline constexpr const char* kPsiVariable = "psi";

/// Solution B_k from its closed-form coefficients. k in {1,2}, N >= k.
Series bk_series(int k, int truncation_order);

/// D applied to a series in psi. The certified order of the result equals
/// the order of the input (the psi^3 factor raises exponents; anything it
/// pushes past the input order is dropped).
Series apply_pf_operator(const Series& f);

/// The same solution built instead from the three-term coefficient
/// recurrence D f = 0 induces:
///
///   a_m = -a_{m-3} (m-3)^3 / (27 m (m-1)(m-2))   for m > k, m == k (mod 3),
///
/// seeded with a_k = (-1)^{k+1}/k! and a_m = 0 elsewhere. Agreement with
/// bk_series is a library invariant.
Series bk_via_recurrence(int k, int truncation_order);

}  // namespace orbgw
