#include "orbgw/reference.hpp"

#include <cctype>
#include <stdexcept>

namespace orbgw {

namespace {

// integer [ '^' integer ] ( '*' integer [ '^' integer ] )*
Integer parse_factor_product(const std::string& text) {
    Integer result = 1;
    size_t pos = 0;
    auto read_int = [&]() -> Integer {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("bad factored literal: '" + text + "'");
        return Integer(text.substr(start, pos - start));
    };
    while (true) {
        Integer base = read_int();
        Integer power = base;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            Integer exp = read_int();
            power = 1;
            for (Integer i = 0; i < exp; ++i) power *= base;
        }
        result *= power;
        if (pos == text.size()) return result;
        if (text[pos] != '*') throw std::invalid_argument("bad factored literal: '" + text + "'");
        ++pos;
    }
}

}  // namespace

Rational parse_factored(const std::string& text) {
    std::string body = text;
    bool negative = false;
    if (!body.empty() && body[0] == '-') {
        negative = true;
        body = body.substr(1);
    }
    std::string num = body;
    std::string den = "1";
    if (auto slash = body.find('/'); slash != std::string::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        if (den.size() >= 2 && den.front() == '(' && den.back() == ')') {
            den = den.substr(1, den.size() - 2);
        }
    }
    Rational value(parse_factor_product(num), parse_factor_product(den));
    return negative ? -value : value;
}

InvariantTable::InvariantTable() {
    const std::vector<std::vector<std::string>> rows{
        {"1/3", "-1/3^3", "1/3^2", "-1093/3^6"},
        {"0", "1/3^5", "-14/3^5", "13007/3^8"},
        {"1/(2^4*3^4*5)", "-13/(2^4*3^6)", "20693/(2^4*3^8*5)", "-12803923/(2^4*3^10*5)"},
        {"-31/(2^5*3^5*5*7)", "11569/(2^5*3^9*5*7)", "-2429003/(2^5*3^10*5*7)",
         "871749323/(2^4*3^11*5*7)"},
        {"313/(2^7*3^9*5^2)", "-1889/(2^7*3^9)", "115647179/(2^6*3^13*5^2)",
         "-29321809247/(2^8*3^12*5^2)"},
        {"-519961/(2^9*3^11*5^2*7*11)", "196898123/(2^9*3^12*5^2*7*11)",
         "-339157983781/(2^9*3^14*5^2*7*11)", "78658947782147/(2^9*3^16*5*7)"},
        {"14609730607/(2^12*3^13*5^3*7^2*11)", "-258703053013/(2^10*3^15*5^1*7^2*11)",
         "2453678654644313/(2^12*3^14*5^3*7^2*11)",
         "-40015774193969601803/(2^11*3^18*5^3*7^2*11)"},
    };
    for (int g = 0; g <= kMaxGenus; ++g) {
        for (int k = 1; k <= kMaxMarks; ++k) {
            const std::string& src = rows[static_cast<size_t>(g)][static_cast<size_t>(k - 1)];
            marked_[{g, k}] = {src, parse_factored(src)};
        }
    }
    unmarked_[2] = {parse_factored("-1/2160"), parse_factored("1/5760")};
    unmarked_[3] = {parse_factored("1/544320"), parse_factored("-1/1451520")};
    unmarked_[4] = {parse_factored("-7/41990400"), parse_factored("1/87091200")};
    unmarked_[5] = {parse_factored("3161/77598259200"), parse_factored("-1/2554675200")};
}

const InvariantTable& InvariantTable::instance() {
    static const InvariantTable table;
    return table;
}

Rational InvariantTable::ngk(int g, int k) const {
    auto it = marked_.find({g, k});
    if (it == marked_.end()) {
        throw std::out_of_range("no table entry for g=" + std::to_string(g) +
                                ", k=" + std::to_string(k));
    }
    return it->second.second;
}

const std::string& InvariantTable::ngk_source(int g, int k) const {
    auto it = marked_.find({g, k});
    if (it == marked_.end()) {
        throw std::out_of_range("no table entry for g=" + std::to_string(g) +
                                ", k=" + std::to_string(k));
    }
    return it->second.first;
}

Rational InvariantTable::n_g0_formula(int g, const Rational& chi) const {
    const UnmarkedFormula& f = unmarked(g);
    return f.constant_term + chi * f.chi_coefficient;
}

const UnmarkedFormula& InvariantTable::unmarked(int g) const {
    auto it = unmarked_.find(g);
    if (it == unmarked_.end()) {
        throw std::out_of_range("no unmarked formula for g=" + std::to_string(g));
    }
    return it->second;
}

std::string CompareReport::to_string() const {
    std::string s = "N_{" + std::to_string(g) + "," + std::to_string(k) + "}: ";
    if (pass) return s + "pass (" + orbgw::to_string(computed) + ")";
    return s + "FAIL computed=" + orbgw::to_string(computed) +
           " expected=" + orbgw::to_string(expected);
}

CompareReport compare(const Rational& computed, int g, int k) {
    Rational expected = InvariantTable::instance().ngk(g, k);
    return CompareReport{computed == expected, computed, expected, g, k};
}

}  // namespace orbgw
