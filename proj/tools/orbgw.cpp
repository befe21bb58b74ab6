// orbgw: exact computations around the orbifold Gromov-Witten theory of
// C^3/Z3. Every value is printed as an exact rational; output is available
// as plain text, CSV, or a JSON object, and identical invocations produce
// byte-identical output.
//
// Exit codes: 0 success, 1 honest "unsupported" outcomes (values the
// underlying mathematics does not determine here), 2 usage errors.

#include "orbgw/anomaly.hpp"
#include "orbgw/hodge.hpp"
#include "orbgw/lambda_algebra.hpp"
#include "orbgw/mirror.hpp"
#include "orbgw/picard_fuchs.hpp"
#include "orbgw/rational.hpp"
#include "orbgw/reference.hpp"
#include "orbgw/series.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using orbgw::Rational;
using orbgw::to_string;

constexpr int kExitUnsupported = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<int> working_order;
    std::vector<std::pair<std::string, std::string>> results;
    std::vector<std::string> plain_lines;
    int exit_code = 0;

    void row(std::string label, std::string value, bool also_plain = false) {
        if (also_plain) plain_lines.push_back(label + " " + value);
        results.emplace_back(std::move(label), std::move(value));
    }
};

void print_output(const Output& out, const std::string& format) {
    if (format == "plain") {
        if (out.working_order) {
            std::cout << "# working_order=" << *out.working_order << "\n";
        }
        for (const auto& line : out.plain_lines) std::cout << line << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "label,value\n";
        for (const auto& [label, value] : out.results) {
            std::cout << label << "," << value << "\n";
        }
        return;
    }
    nlohmann::ordered_json doc;
    doc["command"] = out.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : out.params) params[key] = value;
    doc["params"] = params;
    doc["working_order"] = out.working_order ? nlohmann::ordered_json(*out.working_order)
                                             : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [label, value] : out.results) {
        rows.push_back({{"label", label}, {"value", value}});
    }
    doc["results"] = rows;
    std::cout << doc.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string status_string(bool ok) { return ok ? "pass" : "FAIL"; }

constexpr const char* kConnUnsupportedMessage = "Unsupported: nonzero Z3-Hodge integral";
constexpr const char* kNonProportionalMessage =
    "Unsupported: disc reduction is not proportional to the Faber-Pandharipande class";

Output run_pf_series(int k, int order) {
    Output out;
    out.command = "pf series";
    out.params = {{"k", std::to_string(k)}, {"order", std::to_string(order)},
                  {"variable", orbgw::kPsiVariable}};
    out.working_order = order;
    orbgw::Series b = orbgw::bk_series(k, order);
    for (int m = 0; m <= order; ++m) {
        if (b.coeff(m) != 0) out.row(std::to_string(m), to_string(b.coeff(m)), true);
    }
    return out;
}

Output run_pf_verify(int order) {
    Output out;
    out.command = "pf verify";
    out.params = {{"order", std::to_string(order)}};
    out.working_order = order;
    bool all_ok = true;
    for (int k : {1, 2}) {
        bool annihilated = orbgw::apply_pf_operator(orbgw::bk_series(k, order)).is_zero();
        bool cross_checked =
            orbgw::bk_series(k, order) == orbgw::bk_via_recurrence(k, order);
        bool ok = annihilated && cross_checked;
        all_ok = all_ok && ok;
        out.row("k=" + std::to_string(k), ok ? "PASS" : "FAIL", true);
    }
    out.exit_code = all_ok ? 0 : kExitUnsupported;
    return out;
}

Output run_mirror_genus0(int kmax, int order, bool compare_to_reference) {
    Output out;
    out.command = "mirror genus0";
    out.params = {{"kmax", std::to_string(kmax)},
                  {"order", std::to_string(order)},
                  {"compare", compare_to_reference ? "true" : "false"}};
    out.working_order = order;
    orbgw::MirrorFrame frame = orbgw::make_mirror_frame(order);
    std::vector<Rational> inv = orbgw::genus0_invariants(frame, kmax);
    for (int k = 1; k <= kmax; ++k) {
        std::string label = "k=" + std::to_string(k);
        std::string value = to_string(inv[static_cast<size_t>(k - 1)]);
        if (!compare_to_reference) {
            out.row(label, value, true);
            continue;
        }
        std::string verdict = "no reference";
        if (k <= orbgw::InvariantTable::kMaxMarks) {
            verdict = status_string(orbgw::compare(inv[static_cast<size_t>(k - 1)], 0, k).pass);
        }
        out.results.emplace_back(label, value);
        out.results.emplace_back("compare " + label, verdict);
        out.plain_lines.push_back(label + " " + value + " " + verdict);
    }
    return out;
}

Output run_hodge_fp(int g) {
    Output out;
    out.command = "hodge fp";
    out.params = {{"g", std::to_string(g)}};
    out.plain_lines.push_back(to_string(orbgw::fp_integral(g)));
    out.results.emplace_back("fp", to_string(orbgw::fp_integral(g)));
    return out;
}

Output run_hodge_disc(int g) {
    Output out;
    out.command = "hodge disc";
    out.params = {{"g", std::to_string(g)}};
    orbgw::DiscReduction d = orbgw::disc_integrand_reduction(g);
    orbgw::UnpointedResult u = orbgw::unpointed_invariant(g);
    out.row("pre_reduction", d.pre_reduction.to_string(), true);
    out.row("reduced", d.reduced.to_string(), true);
    bool proportional = u.status != orbgw::UnpointedResult::Status::non_proportional;
    out.row("coefficient", proportional ? to_string(u.disc_coefficient) : "n/a", true);
    out.row("weight_check", status_string(d.weight_check), true);
    out.row("discarded_above", std::to_string(d.discarded_above), true);
    out.row("discarded_below", std::to_string(d.discarded_below), true);
    return out;
}

Output run_hodge_conn(int g) {
    Output out;
    out.command = "hodge conn";
    out.params = {{"g", std::to_string(g)}};
    std::optional<Rational> conn = orbgw::conn_contribution(g);
    if (conn) {
        out.row("conn", to_string(*conn));
        out.plain_lines.push_back(to_string(*conn));
    } else {
        out.row("conn", kConnUnsupportedMessage);
        out.plain_lines.push_back(kConnUnsupportedMessage);
        out.exit_code = kExitUnsupported;
    }
    return out;
}

Output run_hodge_unpointed(int g, const std::string& chi_text, bool chi_given) {
    Output out;
    out.command = "hodge unpointed";
    out.params = {{"g", std::to_string(g)}, {"chi", chi_text}};
    orbgw::UnpointedResult u = orbgw::unpointed_invariant(g);
    switch (u.status) {
        case orbgw::UnpointedResult::Status::value:
            out.row("invariant", to_string(u.value));
            out.plain_lines.push_back(to_string(u.value));
            break;
        case orbgw::UnpointedResult::Status::unsupported_connected:
            out.row("invariant", kConnUnsupportedMessage);
            out.plain_lines.push_back(kConnUnsupportedMessage);
            out.exit_code = kExitUnsupported;
            break;
        case orbgw::UnpointedResult::Status::non_proportional:
            out.row("invariant", kNonProportionalMessage);
            out.plain_lines.push_back(kNonProportionalMessage);
            out.exit_code = kExitUnsupported;
            break;
    }
    if (chi_given && g >= orbgw::InvariantTable::kUnmarkedMinGenus &&
        g <= orbgw::InvariantTable::kUnmarkedMaxGenus) {
        Rational chi = orbgw::parse_rational(chi_text);
        Rational reference = orbgw::InvariantTable::instance().n_g0_formula(g, chi);
        out.row("reference", to_string(reference), true);
    }
    return out;
}

Output run_algebra_relations(const std::string& kind, int g) {
    Output out;
    out.command = "algebra relations";
    out.params = {{"kind", kind}, {"g", std::to_string(g)}};
    orbgw::RelationSet rel =
        kind == "mumford" ? orbgw::mumford_relations(g) : orbgw::g_mumford_relations(g);
    std::string gens;
    for (const auto& gen : rel.generators) {
        if (!gens.empty()) gens += " ";
        gens += gen.name();
    }
    out.row("generators", gens, true);
    for (size_t i = 0; i < rel.relations.size(); ++i) {
        out.row("r" + std::to_string(i), rel.relations[i].to_string(), true);
    }
    return out;
}

Output run_algebra_reduce(const std::string& kind, int g, const std::string& poly_path) {
    Output out;
    out.command = "algebra reduce";
    out.params = {{"kind", kind}, {"g", std::to_string(g)}, {"poly", poly_path}};
    orbgw::LambdaPoly p = orbgw::parse_lambda_poly(read_file(poly_path));
    orbgw::RelationSet rel =
        kind == "mumford" ? orbgw::mumford_relations(g) : orbgw::g_mumford_relations(g);
    orbgw::LambdaPoly normal_form = orbgw::reduce(p, rel);
    out.row("input", p.to_string());
    out.row("normal_form", normal_form.to_string());
    out.plain_lines.push_back(normal_form.to_string());
    return out;
}

Output run_anomaly_gamma2(const std::string& input_path) {
    Output out;
    out.command = "anomaly gamma2";
    out.params = {{"input", input_path}};
    orbgw::AmplitudeData data = orbgw::parse_amplitude_data(read_file(input_path));
    out.row("gamma2", to_string(orbgw::gamma2(data)));
    out.plain_lines.push_back(to_string(orbgw::gamma2(data)));
    return out;
}

Output run_reference_table() {
    Output out;
    out.command = "reference table";
    const auto& table = orbgw::InvariantTable::instance();
    out.plain_lines.push_back("g k=1 k=2 k=3 k=4");
    for (int g = 0; g <= orbgw::InvariantTable::kMaxGenus; ++g) {
        std::string line = std::to_string(g);
        for (int k = 1; k <= orbgw::InvariantTable::kMaxMarks; ++k) {
            std::string value = to_string(table.ngk(g, k));
            out.results.emplace_back(
                "N_{" + std::to_string(g) + "," + std::to_string(k) + "}", value);
            line += " " + value;
        }
        out.plain_lines.push_back(line);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact orbifold Gromov-Witten invariants of C^3/Z3"};
    app.require_subcommand(1);

    std::string format = "plain";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();

    std::optional<Output> output;

    // pf
    auto* pf = app.add_subcommand("pf", "Picard-Fuchs solutions at the orbifold point");
    pf->require_subcommand(1);
    pf->fallthrough();
    int pf_k = 1;
    int pf_order = 60;
    auto* pf_series = pf->add_subcommand("series", "print B_k coefficients");
    pf_series->fallthrough();
    pf_series->add_option("--k", pf_k, "solution index")->required()->check(CLI::Range(1, 2));
    pf_series->add_option("--order", pf_order, "truncation order")
        ->check(CLI::Range(1, 2000))
        ->capture_default_str();
    pf_series->callback([&] { output = run_pf_series(pf_k, pf_order); });

    int pf_verify_order = 60;
    auto* pf_verify = pf->add_subcommand("verify", "annihilation check for both B_k");
    pf_verify->fallthrough();
    pf_verify->add_option("--order", pf_verify_order, "truncation order")
        ->check(CLI::Range(2, 2000))
        ->capture_default_str();
    pf_verify->callback([&] { output = run_pf_verify(pf_verify_order); });

    // mirror
    auto* mirror = app.add_subcommand("mirror", "orbifold mirror map and prepotential");
    mirror->require_subcommand(1);
    mirror->fallthrough();
    int mirror_kmax = 1;
    int mirror_order = 60;
    bool mirror_compare = false;
    auto* mirror_genus0 = mirror->add_subcommand("genus0", "genus-0 invariants N_{0,k}");
    mirror_genus0->fallthrough();
    mirror_genus0->add_option("--kmax", mirror_kmax, "largest k")
        ->required()
        ->check(CLI::Range(1, 200));
    mirror_genus0->add_option("--order", mirror_order, "working order in psi")
        ->check(CLI::Range(3, 2000))
        ->capture_default_str();
    mirror_genus0->add_flag("--compare", mirror_compare, "diff against the reference table");
    mirror_genus0->callback(
        [&] { output = run_mirror_genus0(mirror_kmax, mirror_order, mirror_compare); });

    // hodge
    auto* hodge = app.add_subcommand("hodge", "Hodge-integral route");
    hodge->require_subcommand(1);
    hodge->fallthrough();
    int hodge_g = 2;
    std::string hodge_chi = "3";

    auto* hodge_fp = hodge->add_subcommand("fp", "Faber-Pandharipande integral");
    hodge_fp->fallthrough();
    hodge_fp->add_option("--g", hodge_g, "genus")->required()->check(CLI::Range(2, 300));
    hodge_fp->callback([&] { output = run_hodge_fp(hodge_g); });

    auto* hodge_disc = hodge->add_subcommand("disc", "disconnected-cover reduction");
    hodge_disc->fallthrough();
    hodge_disc->add_option("--g", hodge_g, "genus")->required()->check(CLI::Range(2, 10));
    hodge_disc->callback([&] { output = run_hodge_disc(hodge_g); });

    auto* hodge_conn = hodge->add_subcommand("conn", "connected-cover contribution");
    hodge_conn->fallthrough();
    hodge_conn->add_option("--g", hodge_g, "genus")->required()->check(CLI::Range(2, 10));
    hodge_conn->callback([&] { output = run_hodge_conn(hodge_g); });

    auto* hodge_unpointed = hodge->add_subcommand("unpointed", "unpointed invariant");
    hodge_unpointed->fallthrough();
    hodge_unpointed->add_option("--g", hodge_g, "genus")->required()->check(CLI::Range(2, 10));
    auto* chi_opt = hodge_unpointed->add_option(
        "--chi", hodge_chi, "also print the reference value at this Euler number");
    hodge_unpointed->callback([&] {
        output = run_hodge_unpointed(hodge_g, hodge_chi, chi_opt->count() > 0);
    });

    // algebra
    auto* algebra = app.add_subcommand("algebra", "lambda-class relation ideals");
    algebra->require_subcommand(1);
    algebra->fallthrough();
    std::string algebra_kind;
    int algebra_g = 2;
    std::string algebra_poly_path;

    auto* algebra_relations = algebra->add_subcommand("relations", "emit a relation set");
    algebra_relations->fallthrough();
    algebra_relations->add_option("--kind", algebra_kind, "mumford | gmumford")
        ->required()
        ->check(CLI::IsMember({"mumford", "gmumford"}));
    algebra_relations->add_option("--g", algebra_g, "genus")->required()->check(CLI::Range(1, 12));
    algebra_relations->callback([&] { output = run_algebra_relations(algebra_kind, algebra_g); });

    auto* algebra_reduce = algebra->add_subcommand("reduce", "normal form of a polynomial");
    algebra_reduce->fallthrough();
    algebra_reduce->add_option("--kind", algebra_kind, "mumford | gmumford")
        ->required()
        ->check(CLI::IsMember({"mumford", "gmumford"}));
    algebra_reduce->add_option("--g", algebra_g, "genus")->required()->check(CLI::Range(1, 12));
    algebra_reduce->add_option("--poly", algebra_poly_path, "file holding the polynomial")
        ->required();
    algebra_reduce->callback(
        [&] { output = run_algebra_reduce(algebra_kind, algebra_g, algebra_poly_path); });

    // anomaly
    auto* anomaly = app.add_subcommand("anomaly", "holomorphic-anomaly functionals");
    anomaly->require_subcommand(1);
    anomaly->fallthrough();
    std::string anomaly_input;
    auto* anomaly_gamma2 = anomaly->add_subcommand("gamma2", "evaluate the genus-2 functional");
    anomaly_gamma2->fallthrough();
    anomaly_gamma2->add_option("--input", anomaly_input, "AmplitudeData document")->required();
    anomaly_gamma2->callback([&] { output = run_anomaly_gamma2(anomaly_input); });

    // reference
    auto* reference = app.add_subcommand("reference", "published values");
    reference->require_subcommand(1);
    reference->fallthrough();
    auto* reference_table = reference->add_subcommand("table", "the embedded N_{g,k} table");
    reference_table->fallthrough();
    reference_table->callback([&] { output = run_reference_table(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!output) {
        std::cerr << "error: no command selected\n";
        return kExitUsage;
    }
    print_output(*output, format);
    return output->exit_code;
}
