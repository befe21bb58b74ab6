#include "orbgw/anomaly.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace orbgw {

namespace {

size_t checked(size_t expected, size_t got, const char* name) {
    if (expected != got) {
        throw std::invalid_argument(std::string(name) + ": expected " + std::to_string(expected) +
                                    " entries, got " + std::to_string(got));
    }
    return got;
}

}  // namespace

AmplitudeData::AmplitudeData(int modulus_count, std::vector<Rational> propagator,
                             std::vector<Rational> df1, std::vector<Rational> ddf1,
                             std::vector<Rational> d3f0, std::vector<Rational> d4f0)
    : r_(modulus_count),
      e_(std::move(propagator)),
      df1_(std::move(df1)),
      ddf1_(std::move(ddf1)),
      d3f0_(std::move(d3f0)),
      d4f0_(std::move(d4f0)) {
    if (r_ < 1) throw std::invalid_argument("modulus count must be positive");
    const size_t r = static_cast<size_t>(r_);
    checked(r * r, e_.size(), "E");
    checked(r, df1_.size(), "dF1");
    checked(r * r, ddf1_.size(), "ddF1");
    checked(r * r * r, d3f0_.size(), "d3F0");
    checked(r * r * r * r, d4f0_.size(), "d4F0");
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < r_; ++j) {
            if (e_[idx2(i, j)] != e_[idx2(j, i)]) {
                throw std::invalid_argument("E is not symmetric");
            }
            if (ddf1_[idx2(i, j)] != ddf1_[idx2(j, i)]) {
                throw std::invalid_argument("ddF1 is not symmetric");
            }
            for (int k = 0; k < r_; ++k) {
                if (d3f0_[idx3(i, j, k)] != d3f0_[idx3(j, i, k)] ||
                    d3f0_[idx3(i, j, k)] != d3f0_[idx3(i, k, j)]) {
                    throw std::invalid_argument("d3F0 is not symmetric");
                }
                for (int l = 0; l < r_; ++l) {
                    if (d4f0_[idx4(i, j, k, l)] != d4f0_[idx4(j, i, k, l)] ||
                        d4f0_[idx4(i, j, k, l)] != d4f0_[idx4(i, k, j, l)] ||
                        d4f0_[idx4(i, j, k, l)] != d4f0_[idx4(i, j, l, k)]) {
                        throw std::invalid_argument("d4F0 is not symmetric");
                    }
                }
            }
        }
    }
}

size_t AmplitudeData::idx2(int i, int j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(r_) + static_cast<size_t>(j);
}
size_t AmplitudeData::idx3(int i, int j, int k) const {
    return (idx2(i, j)) * static_cast<size_t>(r_) + static_cast<size_t>(k);
}
size_t AmplitudeData::idx4(int i, int j, int k, int l) const {
    return (idx3(i, j, k)) * static_cast<size_t>(r_) + static_cast<size_t>(l);
}

namespace {

// Flatten a rank-`depth` nested array of "p/q" strings with extent r per axis.
void flatten_tensor(const nlohmann::json& node, int depth, int r, const char* name,
                    std::vector<Rational>& out) {
    if (depth == 0) {
        if (!node.is_string()) {
            throw std::invalid_argument(std::string(name) + ": entries must be \"p/q\" strings");
        }
        out.push_back(parse_rational(node.get<std::string>()));
        return;
    }
    if (!node.is_array() || node.size() != static_cast<size_t>(r)) {
        throw std::invalid_argument(std::string(name) + ": expected arrays of length " +
                                    std::to_string(r));
    }
    for (const auto& child : node) flatten_tensor(child, depth - 1, r, name, out);
}

std::vector<Rational> tensor_field(const nlohmann::json& doc, const char* name, int depth, int r) {
    if (!doc.contains(name)) {
        throw std::invalid_argument(std::string("missing field '") + name + "'");
    }
    std::vector<Rational> out;
    flatten_tensor(doc.at(name), depth, r, name, out);
    return out;
}

}  // namespace

AmplitudeData parse_amplitude_data(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(std::string("amplitude document is not valid JSON: ") +
                                    err.what());
    }
    if (!doc.contains("modulus_count") || !doc["modulus_count"].is_number_integer()) {
        throw std::invalid_argument("missing integer field 'modulus_count'");
    }
    int r = doc["modulus_count"].get<int>();
    if (r < 1) throw std::invalid_argument("modulus_count must be positive");
    return AmplitudeData(r, tensor_field(doc, "E", 2, r), tensor_field(doc, "dF1", 1, r),
                         tensor_field(doc, "ddF1", 2, r), tensor_field(doc, "d3F0", 3, r),
                         tensor_field(doc, "d4F0", 4, r));
}

Rational gamma2(const AmplitudeData& data) {
    const int r = data.modulus_count();
    Rational total = 0;
    const Rational half(1, 2), eighth(1, 8), twelfth(1, 12);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            total += data.propagator(i, j) *
                     (half * data.ddf1(i, j) + half * data.df1(i) * data.df1(j));
            for (int k = 0; k < r; ++k) {
                for (int l = 0; l < r; ++l) {
                    const Rational ee = data.propagator(i, j) * data.propagator(k, l);
                    total += ee * (half * data.df1(i) * data.d3f0(j, k, l) +
                                   eighth * data.d4f0(i, j, k, l));
                    for (int m = 0; m < r; ++m) {
                        for (int n = 0; n < r; ++n) {
                            total += ee * data.propagator(m, n) *
                                     (eighth * data.d3f0(i, j, k) * data.d3f0(l, m, n) +
                                      twelfth * data.d3f0(i, k, m) * data.d3f0(j, l, n));
                        }
                    }
                }
            }
        }
    }
    return total;
}

Series recursion_step_genus2(const Series& f0, const Series& f1, const Series& propagator,
                             const Series& h2) {
    const Series df1 = differentiate(f1);
    const Series ddf1 = differentiate(df1);
    const Series d3f0 = differentiate(differentiate(differentiate(f0)));
    const Series d4f0 = differentiate(d3f0);
    const Rational half(1, 2), eighth(1, 8), twelfth(1, 12);

    Series gamma = mul(propagator, add(scale(half, ddf1), scale(half, mul(df1, df1))));
    Series e2 = mul(propagator, propagator);
    gamma = add(gamma, mul(e2, add(scale(half, mul(df1, d3f0)), scale(eighth, d4f0))));
    Series e3 = mul(e2, propagator);
    Series d3sq = mul(d3f0, d3f0);
    gamma = add(gamma, mul(e3, add(scale(eighth, d3sq), scale(twelfth, d3sq))));
    return sub(h2, gamma);
}

}  // namespace orbgw
