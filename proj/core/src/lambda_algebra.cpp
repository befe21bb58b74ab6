#include "orbgw/lambda_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace orbgw {

std::string Generator::name() const {
    std::string s = "l" + std::to_string(index);
    if (family == GeneratorFamily::omega) s += "w";
    if (family == GeneratorFamily::omega_bar) s += "wb";
    return s;
}

Generator Generator::parse(const std::string& name) {
    auto fail = [&] { throw std::invalid_argument("not a generator name: '" + name + "'"); };
    if (name.size() < 2 || name[0] != 'l') fail();
    size_t pos = 1;
    while (pos < name.size() && std::isdigit(static_cast<unsigned char>(name[pos]))) ++pos;
    if (pos == 1) fail();
    int index = std::stoi(name.substr(1, pos - 1));
    if (index < 1) fail();
    std::string suffix = name.substr(pos);
    GeneratorFamily family;
    if (suffix.empty()) {
        family = GeneratorFamily::plain;
    } else if (suffix == "w") {
        family = GeneratorFamily::omega;
    } else if (suffix == "wb") {
        family = GeneratorFamily::omega_bar;
    } else {
        fail();
        return {};
    }
    return Generator{family, index};
}

LambdaMonomial::LambdaMonomial(std::map<Generator, int> exponents)
    : exponents_(std::move(exponents)) {
    for (auto it = exponents_.begin(); it != exponents_.end();) {
        if (it->second < 0) throw std::invalid_argument("negative exponent in monomial");
        it = (it->second == 0) ? exponents_.erase(it) : std::next(it);
    }
}

int LambdaMonomial::exponent(const Generator& g) const {
    auto it = exponents_.find(g);
    return it == exponents_.end() ? 0 : it->second;
}

int LambdaMonomial::degree() const {
    int d = 0;
    for (const auto& [gen, e] : exponents_) d += gen.index * e;
    return d;
}

LambdaMonomial LambdaMonomial::times(const LambdaMonomial& other) const {
    std::map<Generator, int> e = exponents_;
    for (const auto& [gen, k] : other.exponents_) e[gen] += k;
    return LambdaMonomial(std::move(e));
}

std::string LambdaMonomial::to_string() const {
    if (exponents_.empty()) return "1";
    std::string s;
    for (const auto& [gen, e] : exponents_) {
        if (!s.empty()) s += "*";
        s += gen.name();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

int compare_monomials(const LambdaMonomial& a, const LambdaMonomial& b) {
    if (int da = a.degree(), db = b.degree(); da != db) return da < db ? -1 : 1;
    // reverse lex: the largest generator with differing exponent decides,
    // and the smaller exponent there wins
    auto ia = a.exponents().rbegin(), ea = a.exponents().rend();
    auto ib = b.exponents().rbegin(), eb = b.exponents().rend();
    while (ia != ea || ib != eb) {
        if (ia == ea) return 1;  // b still has a larger generator; a's exponent there is 0
        if (ib == eb) return -1;
        if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second < ib->second ? 1 : -1;
        ++ia, ++ib;
    }
    return 0;
}

LambdaPoly LambdaPoly::term(const LambdaMonomial& m, const Rational& c) {
    LambdaPoly p;
    p.add_term(m, c);
    return p;
}

LambdaPoly LambdaPoly::generator(const Generator& g) {
    return term(LambdaMonomial({{g, 1}}), 1);
}

bool LambdaPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
}

Rational LambdaPoly::coeff(const LambdaMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LambdaPoly::add_term(const LambdaMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LambdaPoly LambdaPoly::operator+(const LambdaPoly& other) const {
    LambdaPoly out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

LambdaPoly LambdaPoly::operator-(const LambdaPoly& other) const {
    LambdaPoly out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

LambdaPoly LambdaPoly::operator*(const LambdaPoly& other) const {
    LambdaPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            out.add_term(ma.times(mb), ca * cb);
        }
    }
    return out;
}

LambdaPoly LambdaPoly::scaled(const Rational& c) const {
    LambdaPoly out;
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

std::vector<std::pair<int, LambdaPoly>> LambdaPoly::homogeneous_pieces() const {
    std::map<int, LambdaPoly> by_degree;
    for (const auto& [m, c] : terms_) by_degree[m.degree()].add_term(m, c);
    return {by_degree.begin(), by_degree.end()};
}

std::string LambdaPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        s += orbgw::to_string(it->second);
        if (!it->first.is_unit()) s += " * " + it->first.to_string();
    }
    return s;
}

namespace {

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

LambdaPoly parse_lambda_poly(const std::string& text) {
    std::string body = trimmed(text);
    if (body.empty()) throw std::invalid_argument("empty polynomial");
    if (body == "0") return {};
    LambdaPoly out;
    size_t start = 0;
    while (start <= body.size()) {
        size_t next = body.find(" + ", start);
        std::string term =
            trimmed(next == std::string::npos ? body.substr(start) : body.substr(start, next - start));
        if (term.empty()) throw std::invalid_argument("empty term in polynomial");
        std::vector<std::string> factors;
        size_t fstart = 0;
        while (fstart <= term.size()) {
            size_t star = term.find('*', fstart);
            factors.push_back(trimmed(star == std::string::npos ? term.substr(fstart)
                                                                : term.substr(fstart, star - fstart)));
            if (star == std::string::npos) break;
            fstart = star + 1;
        }
        Rational coeff = parse_rational(factors.front());
        std::map<Generator, int> exps;
        for (size_t i = 1; i < factors.size(); ++i) {
            const std::string& f = factors[i];
            std::string name = f;
            int e = 1;
            if (auto caret = f.find('^'); caret != std::string::npos) {
                name = f.substr(0, caret);
                e = std::stoi(f.substr(caret + 1));
                if (e < 1) throw std::invalid_argument("exponent must be positive: '" + f + "'");
            }
            exps[Generator::parse(name)] += e;
        }
        out.add_term(LambdaMonomial(std::move(exps)), coeff);
        if (next == std::string::npos) break;
        start = next + 3;
    }
    return out;
}

LambdaPoly swap_eigenfamilies(const LambdaPoly& p) {
    LambdaPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::map<Generator, int> e;
        for (const auto& [gen, k] : m.exponents()) {
            Generator g = gen;
            if (g.family == GeneratorFamily::omega) g.family = GeneratorFamily::omega_bar;
            else if (g.family == GeneratorFamily::omega_bar) g.family = GeneratorFamily::omega;
            e[g] = k;
        }
        out.add_term(LambdaMonomial(std::move(e)), c);
    }
    return out;
}

namespace {

// Graded pieces of A(t)*B(t) - 1 for two Chern polynomials given as
// coefficient lists indexed by t-degree. Identically-zero pieces are
// dropped; the degree-0 piece must cancel exactly.
std::vector<LambdaPoly> chern_product_relations(const std::vector<LambdaPoly>& a,
                                                const std::vector<LambdaPoly>& b) {
    std::vector<LambdaPoly> piece(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) {
            piece[i + j] = piece[i + j] + a[i] * b[j];
        }
    }
    LambdaPoly one = LambdaPoly::term(LambdaMonomial(), 1);
    if (!(piece[0] == one)) throw std::logic_error("Chern product has non-unit constant term");
    std::vector<LambdaPoly> out;
    for (size_t d = 1; d < piece.size(); ++d) {
        if (!piece[d].is_zero()) out.push_back(piece[d]);
    }
    return out;
}

}  // namespace

RelationSet mumford_relations(int g) {
    if (g < 1) throw std::invalid_argument("mumford_relations requires g >= 1");
    RelationSet rel;
    std::vector<LambdaPoly> ct{LambdaPoly::term(LambdaMonomial(), 1)};
    std::vector<LambdaPoly> ct_dual = ct;
    for (int i = 1; i <= g; ++i) {
        Generator li{GeneratorFamily::plain, i};
        rel.generators.push_back(li);
        ct.push_back(LambdaPoly::generator(li));
        ct_dual.push_back(LambdaPoly::generator(li).scaled((i % 2 == 0) ? 1 : -1));
    }
    rel.relations = chern_product_relations(ct, ct_dual);
    return rel;
}

RelationSet g_mumford_relations(int g) {
    if (g < 2) throw std::invalid_argument("g_mumford_relations requires g >= 2");
    RelationSet rel;
    std::vector<LambdaPoly> ct_w{LambdaPoly::term(LambdaMonomial(), 1)};
    std::vector<LambdaPoly> ct_wb_dual = ct_w;
    for (int i = 1; i <= g - 1; ++i) {
        rel.generators.push_back(Generator{GeneratorFamily::omega, i});
        ct_w.push_back(LambdaPoly::generator(Generator{GeneratorFamily::omega, i}));
    }
    for (int i = 1; i <= g - 1; ++i) {
        rel.generators.push_back(Generator{GeneratorFamily::omega_bar, i});
        ct_wb_dual.push_back(
            LambdaPoly::generator(Generator{GeneratorFamily::omega_bar, i}).scaled((i % 2 == 0) ? 1 : -1));
    }
    rel.relations = chern_product_relations(ct_w, ct_wb_dual);
    return rel;
}

std::vector<LambdaMonomial> monomials_of_degree(const std::vector<Generator>& generators,
                                                int degree) {
    std::vector<LambdaMonomial> out;
    std::map<Generator, int> current;
    // generators are enumerated in a fixed order; exponents fill recursively
    auto recurse = [&](auto&& self, size_t pos, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(LambdaMonomial(current));
            return;
        }
        if (pos == generators.size()) return;
        const Generator& gen = generators[pos];
        int max_e = remaining / gen.index;
        for (int e = max_e; e >= 0; --e) {
            if (e > 0) current[gen] = e;
            else current.erase(gen);
            self(self, pos + 1, remaining - e * gen.index);
        }
        current.erase(gen);
    };
    recurse(recurse, 0, degree);
    std::sort(out.begin(), out.end(),
              [](const LambdaMonomial& a, const LambdaMonomial& b) {
                  return compare_monomials(a, b) > 0;
              });
    return out;
}

namespace {

using Row = std::vector<Rational>;

// Unique reduced row echelon form; depends only on the row space.
void rref(std::vector<Row>& rows) {
    if (rows.empty()) return;
    const size_t cols = rows.front().size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        Rational inv = Rational(1) / rows[pivot_row][col];
        for (size_t c = col; c < cols; ++c) rows[pivot_row][c] *= inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == pivot_row || rows[r][col] == 0) continue;
            Rational factor = rows[r][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[pivot_row][c];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);  // drop zero rows
}

LambdaPoly reduce_homogeneous(const LambdaPoly& piece, int degree, const RelationSet& rel) {
    std::vector<LambdaMonomial> basis = monomials_of_degree(rel.generators, degree);
    std::map<LambdaMonomial, size_t, MonomialLess> column;
    for (size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;

    // Terms over generators outside the relation set cannot meet the ideal.
    LambdaPoly untouched;
    Row vec(basis.size(), Rational(0));
    for (const auto& [m, c] : piece.terms()) {
        auto it = column.find(m);
        if (it == column.end()) untouched.add_term(m, c);
        else vec[it->second] = c;
    }

    std::vector<Row> rows;
    for (const auto& r : rel.relations) {
        int dr = r.terms().begin()->first.degree();
        if (dr > degree) continue;
        for (const auto& m : monomials_of_degree(rel.generators, degree - dr)) {
            LambdaPoly rm = r * LambdaPoly::term(m, 1);
            Row row(basis.size(), Rational(0));
            for (const auto& [mono, c] : rm.terms()) row[column.at(mono)] = c;
            rows.push_back(std::move(row));
        }
    }
    rref(rows);

    for (const Row& row : rows) {
        size_t lead = 0;
        while (lead < row.size() && row[lead] == 0) ++lead;
        if (lead == row.size() || vec[lead] == 0) continue;
        Rational factor = vec[lead];
        for (size_t c = lead; c < row.size(); ++c) vec[c] -= factor * row[c];
    }

    LambdaPoly out = untouched;
    for (size_t i = 0; i < basis.size(); ++i) out.add_term(basis[i], vec[i]);
    return out;
}

}  // namespace

LambdaPoly reduce(const LambdaPoly& p, const RelationSet& rel) {
    LambdaPoly out;
    for (const auto& [degree, piece] : p.homogeneous_pieces()) {
        out = out + reduce_homogeneous(piece, degree, rel);
    }
    return out;
}

bool is_zero_in_quotient(const LambdaPoly& p, const RelationSet& rel) {
    return reduce(p, rel).is_zero();
}

}  // namespace orbgw
