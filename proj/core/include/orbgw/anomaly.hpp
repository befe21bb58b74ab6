#pragma once

// The genus-2 functional of the holomorphic anomaly recursion,
//
//   Gamma_2 = E^{ij} (1/2 d_i d_j F1 + 1/2 d_i F1 d_j F1)
//           + E^{ij} E^{kl} (1/2 d_i F1 d_j d_k d_l F0 + 1/8 d_i d_j d_k d_l F0)
//           + E^{ij} E^{kl} E^{mn} (1/8 d_i d_j d_k F0 d_l d_m d_n F0
//                                 + 1/12 d_i d_k d_m F0 d_j d_l d_n F0),
//
// as an exact evaluator over supplied derivative data, plus the genus-2
// recursion step F2 = h2 - Gamma_2 in one-modulus series form. F1 and the
// holomorphic ambiguity h2 are inputs here; they come from boundary data
// (large-radius amplitudes) that this library does not compute.
//
// Index sums run naively over all tuples; the modulus count is tiny and the
// two E^3 terms are kept as written with their distinct index wirings.

#include "orbgw/rational.hpp"
#include "orbgw/series.hpp"

#include <string>
#include <vector>

namespace orbgw {

/// Derivative tensors of the low-genus amplitudes at modulus count r, each
/// stored dense and validated to be symmetric under index permutation on
/// construction.
class AmplitudeData {
  public:
    AmplitudeData(int modulus_count, std::vector<Rational> propagator,
                  std::vector<Rational> df1, std::vector<Rational> ddf1,
                  std::vector<Rational> d3f0, std::vector<Rational> d4f0);

    int modulus_count() const { return r_; }
    const Rational& propagator(int i, int j) const { return e_[idx2(i, j)]; }
    const Rational& df1(int i) const { return df1_[static_cast<size_t>(i)]; }
    const Rational& ddf1(int i, int j) const { return ddf1_[idx2(i, j)]; }
    const Rational& d3f0(int i, int j, int k) const { return d3f0_[idx3(i, j, k)]; }
    const Rational& d4f0(int i, int j, int k, int l) const { return d4f0_[idx4(i, j, k, l)]; }

  private:
    size_t idx2(int i, int j) const;
    size_t idx3(int i, int j, int k) const;
    size_t idx4(int i, int j, int k, int l) const;

    int r_;
    std::vector<Rational> e_, df1_, ddf1_, d3f0_, d4f0_;
};

/// Read an AmplitudeData document:
///   { "modulus_count": r, "E": [...], "dF1": [...], "ddF1": [...],
///     "d3F0": [...], "d4F0": [...] }
/// with every entry a "p/q" string and arrays nested to each tensor's rank.
/// Throws std::invalid_argument on malformed or asymmetric input.
AmplitudeData parse_amplitude_data(const std::string& json_text);

/// The fully index-summed exact value of Gamma_2.
Rational gamma2(const AmplitudeData& data);

/// One-modulus genus-2 recursion step F2 = h2 - Gamma_2[E, F0, F1] with each
/// tensor slot filled by the corresponding derivative series.
Series recursion_step_genus2(const Series& f0, const Series& f1, const Series& propagator,
                             const Series& h2);

}  // namespace orbgw
