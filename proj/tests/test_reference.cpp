#include "orbgw/reference.hpp"

#include "orbgw/hodge.hpp"

#include "doctest.h"

#include <cstdint>
#include <stdexcept>

using namespace orbgw;

namespace {

// FNV-1a over the canonical serialization of the whole marked table; guards
// against silent edits of the transcription.
std::uint64_t table_checksum() {
    const auto& table = InvariantTable::instance();
    std::uint64_t h = 14695981039346656037ULL;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (int g = 0; g <= InvariantTable::kMaxGenus; ++g) {
        for (int k = 1; k <= InvariantTable::kMaxMarks; ++k) {
            feed(std::to_string(g) + "," + std::to_string(k) + "," +
                 to_string(table.ngk(g, k)) + ";");
        }
    }
    return h;
}

}  // namespace

TEST_SUITE("reference") {

TEST_CASE("factored literal parser") {
    CHECK(parse_factored("0") == 0);
    CHECK(parse_factored("1/3") == Rational(1, 3));
    CHECK(parse_factored("-14/3^5") == Rational(-14, 243));
    CHECK(parse_factored("2^4*3^4*5") == Rational(6480));
    CHECK(parse_factored("1/(2^4*3^4*5)") == Rational(1, 6480));
    for (const char* bad : {"", "2^", "ab", "3**4", "1/(2"}) {
        CHECK_THROWS_AS(parse_factored(bad), std::invalid_argument);
    }
}

TEST_CASE("spot values from the table") {
    const auto& t = InvariantTable::instance();
    CHECK(t.ngk(0, 1) == Rational(1, 3));
    CHECK(t.ngk(0, 4) == Rational(-1093, 729));
    CHECK(t.ngk(1, 1) == 0);
    CHECK(t.ngk(1, 2) == Rational(1, 243));
    CHECK(t.ngk(2, 1) == Rational(1, 6480));
    CHECK(t.ngk_source(2, 1) == "1/(2^4*3^4*5)");
}

TEST_CASE("out-of-range indices are rejected") {
    const auto& t = InvariantTable::instance();
    CHECK_THROWS_AS(t.ngk(7, 1), std::out_of_range);
    CHECK_THROWS_AS(t.ngk(-1, 1), std::out_of_range);
    CHECK_THROWS_AS(t.ngk(0, 0), std::out_of_range);
    CHECK_THROWS_AS(t.ngk(0, 5), std::out_of_range);
    CHECK_THROWS_AS(t.unmarked(6), std::out_of_range);
}

TEST_CASE("unmarked formulas at chi = 3") {
    const auto& t = InvariantTable::instance();
    CHECK(t.n_g0_formula(2, 3) == Rational(1, 17280));
    CHECK(t.n_g0_formula(3, 3) == Rational(-1, 4354560));
    CHECK(t.n_g0_formula(4, 3) == Rational(-7, 41990400) + Rational(3, 87091200));
    CHECK(t.n_g0_formula(2, 0) == Rational(-1, 2160));
}

TEST_CASE("chi coefficients match the Faber-Pandharipande integrals") {
    const auto& t = InvariantTable::instance();
    for (int g = 2; g <= 5; ++g) {
        Rational expected = (g % 2 == 0) ? fp_integral(g) : -fp_integral(g);
        CHECK(t.unmarked(g).chi_coefficient == expected);
    }
}

TEST_CASE("compare reports") {
    CHECK(compare(Rational(1, 3), 0, 1).pass);
    CHECK(compare(Rational(1, 9), 0, 3).pass);
    CompareReport bad = compare(Rational(1, 4), 0, 1);
    CHECK_FALSE(bad.pass);
    CHECK(bad.to_string().find("1/4") != std::string::npos);
    CHECK(bad.to_string().find("1/3") != std::string::npos);
}

TEST_CASE("transcription checksum over all 28 entries") {
    CHECK(table_checksum() == 0xFE779BF4FCD00D5AULL);
}

}  // TEST_SUITE
