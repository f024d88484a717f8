#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratsign/algebra.hpp"
#include "ratsign/alternations.hpp"
#include "ratsign/bwgraphs.hpp"
#include "ratsign/profiles.hpp"
#include "ratsign/snumbers.hpp"
#include "ratsign/verify.hpp"

using namespace ratsign;
using nlohmann::json;

namespace {

struct Report {
    json data = json::object();
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
    int status = 0;
};

void print_csv(const Report& r) {
    auto line = [](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::cout << (i ? "," : "");
            if (cells[i].find_first_of(",\"") == std::string::npos) std::cout << cells[i];
            else std::cout << std::quoted(cells[i], '"', '"');
        }
        std::cout << '\n';
    };
    if (!r.header.empty()) line(r.header);
    for (const auto& row : r.rows) line(row);
}

void print_text(const Report& r) {
    for (const auto& n : r.notes) std::cout << n << '\n';
    if (r.header.empty()) return;
    std::vector<std::size_t> width(r.header.size());
    for (std::size_t i = 0; i < width.size(); ++i) width[i] = r.header[i].size();
    for (const auto& row : r.rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const bool last = i + 1 == cells.size();
            std::cout << (i ? "  " : "") << std::left << std::setw(last ? 0 : static_cast<int>(width[i])) << cells[i];
        }
        std::cout << '\n';
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
}

std::string str(const Integer& z) { return z.get_str(); }

Report alternations_report(int max, bool bruteforce) {
    Report r;
    const auto t = count_recursive(max);
    r.header = {"n", "A", "B"};
    json rows = json::array();
    for (int n = 1; n <= max; ++n) {
        json row = {{"n", n}, {"A", str(t.A[n])}, {"B", str(t.B[n])}};
        std::vector<std::string> cells{std::to_string(n), str(t.A[n]), str(t.B[n])};
        if (bruteforce && n <= kBruteForceLimit) {
            const auto b = count_bruteforce(n);
            bool agree = b.A == t.A[n] && b.B == t.B[n];
            for (int j = 1; j <= n; ++j) agree = agree && b.by_pos[j] == t.B_by_pos[n][j];
            row["bruteforce_agrees"] = agree;
            if (!agree) r.status = 1;
        }
        json by_pos = json::array();
        for (int j = 1; j <= n; ++j) by_pos.push_back(str(t.B_by_pos[n][j]));
        row["B_by_pos"] = by_pos;
        rows.push_back(row);
        r.rows.push_back(cells);
    }
    r.data = {{"command", "alternations"}, {"max", max}, {"rows", rows}};
    return r;
}

Report series_report(const std::string& name, int c, int order) {
    Report r;
    GElement a;
    if (name == "f" || name == "g" || name == "u" || name == "v") {
        static const std::map<std::string, BaseSeries> base{
            {"f", BaseSeries::f}, {"g", BaseSeries::g}, {"u", BaseSeries::u}, {"v", BaseSeries::v}};
        a = base_series(base.at(name));
    } else {
        a = family(parse_family(name), c);
    }
    const auto s = expand(a, order);
    const auto d = degrees(a);
    r.data = {{"command", "series"}, {"series", name}, {"element", to_json(a)}, {"deg_f", to_string(d.deg_f)},
              {"deg_g", to_string(d.deg_g)}, {"expansion", to_json(s)}};
    if (name != "f" && name != "g" && name != "u" && name != "v") r.data["c"] = c;
    r.notes = {"element: " + to_string(a), "deg_f: " + to_string(d.deg_f) + "  deg_g: " + to_string(d.deg_g)};
    r.header = {"k", "coefficient of q^k"};
    for (int k = 0; k <= order; ++k) r.rows.push_back({std::to_string(k), to_string(s.coeffs[k])});
    return r;
}

Report bwgraphs_report(const std::string& white, const std::string& black, bool list) {
    Report r;
    const Partition w = parse_partition(white), b = parse_partition(black);
    const auto graphs = enumerate(w, b);
    std::int64_t sw = 0, sb = 0;
    json items = json::array();
    r.header = {"graph", "white_sided", "lev", "pol", "sign"};
    for (const auto& g : graphs) {
        const auto s = sign(g);
        (g.white_sided() ? sw : sb) += s.sign;
        if (!list) continue;
        json j = to_json(g);
        j["lev"] = s.lev;
        j["pol"] = s.pol;
        j["sign"] = s.sign;
        items.push_back(j);
        r.rows.push_back({j.at("vertices").dump(), g.white_sided() ? "yes" : "no", std::to_string(s.lev),
                          std::to_string(s.pol), std::to_string(s.sign)});
    }
    r.data = {{"command", "bwgraphs"}, {"white", to_string(w)}, {"black", to_string(b)},
              {"graphs", graphs.size()}, {"S_white", sw}, {"S_black", sb}};
    if (list) r.data["items"] = items;
    r.notes = {"white " + to_string(w) + "  black " + to_string(b), "graphs " + std::to_string(graphs.size()),
               "S_white = " + std::to_string(sw) + "  S_black = " + std::to_string(sb)};
    if (!list) {
        r.header = {"graphs", "S_white", "S_black"};
        r.rows = {{std::to_string(graphs.size()), std::to_string(sw), std::to_string(sb)}};
    }
    return r;
}

Report profiles_report(const std::string& profiles, const std::string& parity_name, bool bases) {
    Report r;
    const ReducedProfiles l{parse_profiles(profiles), parse_parity(parity_name)};
    const auto st = stats(l);
    const auto why = trivially_vanishes(l);
    json j = {{"command", "profiles"}, {"lambda", to_json(l)}, {"c", st.c_frak}, {"o", st.o_frak},
              {"e", st.e_frak}, {"b", st.b_frak}, {"A", str(st.A)}, {"nonvanishing", nonvanishing(l)},
              {"vanishing_reason", why ? json(*why) : json(nullptr)}};
    r.notes = {"lambda " + to_string(l.partitions) + " parity " + to_string(l.parity),
               "c=" + std::to_string(st.c_frak) + " o=" + std::to_string(st.o_frak) + " e=" +
                   std::to_string(st.e_frak) + " b=" + std::to_string(st.b_frak) + " A=" + str(st.A),
               std::string("nonvanishing: ") + (nonvanishing(l) ? "yes" : "no") + (why ? " (" + *why + ")" : "")};
    if (nonvanishing(l)) {
        const auto bounds = degree_bounds(l);
        j["deg_f"] = to_string(Degree(bounds.deg_f));
        j["deg_g"] = to_string(Degree(bounds.deg_g));
        r.notes.push_back("degree bounds: deg_f " + to_string(Degree(bounds.deg_f)) + "  deg_g " +
                          to_string(Degree(bounds.deg_g)));
        json lead = json::array();
        r.header = {"parity", "side", "monomial", "coefficient"};
        for (const auto& t : leading_coefficients(l)) {
            const std::string side = t.side == Side::f_side ? "f" : "g";
            lead.push_back({{"parity", to_string(t.parity)}, {"side", side},
                            {"monomial", to_string(Degree(t.monomial))}, {"coefficient", to_string(t.coefficient)}});
            r.rows.push_back({to_string(t.parity), side, to_string(Degree(t.monomial)), to_string(t.coefficient)});
        }
        j["leading_coefficients"] = lead;
        if (bases) {
            json sb = json::object();
            for (BaseType type : {BaseType::C, BaseType::B}) {
                const auto s = summarize_simple_bases(l, type);
                const auto p = predicted_signed_sum(l, type);
                sb[to_string(type)] = {{"signed_sum", str(s.signed_sum)}, {"bases", s.bases}, {"classes", s.classes},
                                       {"predicted", p ? json(str(*p)) : json(nullptr)}};
                r.notes.push_back("type " + to_string(type) + " bases: " + std::to_string(s.bases) + " (" +
                                  std::to_string(s.classes) + " classes), signed sum " + str(s.signed_sum) +
                                  (p ? ", predicted " + str(*p) : ""));
            }
            j["simple_bases"] = sb;
        }
    }
    r.data = j;
    return r;
}

Report snumbers_report(const std::string& parity_name, int max_m, bool asymptotics) {
    Report r;
    const auto rep = s_numbers_empty(max_m, parse_parity(parity_name));
    r.data = to_json(rep);
    r.data["command"] = "snumbers";
    r.header = {"m", "S"};
    for (const auto& [m, s] : rep.values) r.rows.push_back({std::to_string(m), str(s)});
    r.notes = {"lambda = empty, parity " + parity_name, "series: " + to_string(rep.series_used)};
    if (asymptotics) {
        const auto a = asymptotic_report(rep);
        r.data["asymptotics"] = to_json(a);
        std::ostringstream os;
        os << "radius estimate " << a.radius_estimate << ", corrected " << a.corrected_radius_estimate;
        r.notes.push_back(os.str());
    }
    if (!rep.diagnostics.value("matches_broken_alternations", false)) r.status = 1;
    return r;
}

Report fb_report(const std::string& path) {
    Report r;
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json input;
    try {
        input = json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
    const auto b = descriptor_from_json(input);
    const auto F = assemble_FB(b);
    const auto d = degrees(F);
    const auto tab = tabulated_shape(b);
    json j = {{"command", "fb"}, {"descriptor", to_json(b)}, {"epsilon", epsilon_base(b)}, {"F_B", to_json(F)},
              {"deg_f", to_string(d.deg_f)}, {"deg_g", to_string(d.deg_g)}};
    r.notes = {"epsilon = " + std::to_string(epsilon_base(b)), "F_B = " + to_string(F),
               "deg_f " + to_string(d.deg_f) + "  deg_g " + to_string(d.deg_g)};
    r.header = {"side", "degree", "leading", "tabulated"};
    for (Side side : {Side::f_side, Side::g_side}) {
        const bool f = side == Side::f_side;
        const Degree deg = f ? d.deg_f : d.deg_g;
        const auto& expect = f ? tab.lead_f : tab.lead_g;
        const std::string lead = deg ? to_string(leading_coefficient(F, side)) : "";
        const std::string name = f ? "f" : "g";
        j["lead_" + name] = deg ? json(lead) : json(nullptr);
        j["tabulated_lead_" + name] = expect ? json(to_string(*expect)) : json(nullptr);
        r.rows.push_back({name, to_string(deg), lead, expect ? to_string(*expect) : ""});
    }
    try {
        const auto s = extract_s_numbers(F, 12);
        json vals = json::array();
        for (std::size_t m = 0; m < s.size(); ++m) vals.push_back({m, str(s[m])});
        j["s_numbers"] = vals;
    } catch (const NonIntegralCoefficient& e) {
        j["s_numbers_error"] = e.what();
        r.status = 1;
    }
    r.data = j;
    return r;
}

Report verify_report(std::uint64_t seed, int only) {
    Report r;
    VerifyOptions o;
    o.seed = seed;
    json checks = json::array();
    r.header = {"criterion", "name", "result", "seconds", "detail"};
    for (int id = 1; id <= kCheckCount; ++id) {
        if (only && id != only) continue;
        const auto c = run_check(id, o);
        if (!c.passed) r.status = 1;
        std::ostringstream secs;
        secs << std::fixed << std::setprecision(2) << c.seconds;
        checks.push_back({{"criterion", c.id}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        r.rows.push_back({std::to_string(c.id), c.name, c.passed ? "PASS" : "FAIL", secs.str(), c.detail});
    }
    r.data = {{"command", "verify-all"}, {"seed", seed}, {"checks", checks}, {"passed", r.status == 0}};
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed counts of real rational functions: alternations, bw-graphs, profiles and S-numbers"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    std::uint64_t seed = VerifyOptions{}.seed;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

    int alt_max = 12;
    bool alt_brute = false;
    auto* alt = app.add_subcommand("alternations", "Zigzag and broken-alternation counts");
    alt->add_option("--max", alt_max, "Largest n")->check(CLI::Range(1, 500))->capture_default_str();
    alt->add_flag("--bruteforce", alt_brute, "Compare with permutation enumeration for n <= 10");

    std::string ser_name = "u";
    int ser_c = 0, ser_order = 10;
    auto* ser = app.add_subcommand("series", "Elements of Q[q,f,g] and their expansions");
    ser->add_option("--family", ser_name, "f, g, u, v or one of f_c, g_c, gt_c, u_c, v_c")->capture_default_str();
    ser->add_option("--c", ser_c, "Family index")->check(CLI::Range(0, 200))->capture_default_str();
    ser->add_option("--order", ser_order, "Expansion order")->check(CLI::Range(0, 2000))->capture_default_str();

    std::string bw_white, bw_black;
    bool bw_list = false;
    auto* bw = app.add_subcommand("bwgraphs", "Signed real bw-graph counts");
    bw->add_option("--white", bw_white, "White partition, e.g. 3,2,1,1")->required();
    bw->add_option("--black", bw_black, "Black partition, e.g. 3,2,2")->required();
    bw->add_flag("--list", bw_list, "List every graph with its sign");

    std::string pr_lambda, pr_parity = "odd";
    bool pr_bases = false;
    auto* pr = app.add_subcommand("profiles", "Statistics, vanishing and leading coefficients of reduced profiles");
    pr->add_option("--lambda", pr_lambda, "Partitions separated by ';', '-' for none")->required();
    pr->add_option("--parity", pr_parity, "odd or even")->check(CLI::IsMember({"odd", "even"}))->capture_default_str();
    pr->add_flag("--bases", pr_bases, "Enumerate simple bases");

    bool sn_empty = false, sn_asym = false;
    std::string sn_parity = "odd";
    int sn_max = 21;
    auto* sn = app.add_subcommand("snumbers", "S-numbers for the empty profile list");
    sn->add_flag("--empty", sn_empty, "Use the empty profile list (the only supported case)");
    sn->add_option("--parity", sn_parity, "odd or even")->check(CLI::IsMember({"odd", "even"}))->capture_default_str();
    sn->add_option("--max-m", sn_max, "Largest m")->check(CLI::Range(0, 400))->capture_default_str();
    sn->add_flag("--asymptotics", sn_asym, "Add growth and ratio diagnostics");
    sn->add_flag("--json", [&](std::int64_t) { format = "json"; }, "Shorthand for --format json");

    std::string fb_path;
    auto* fb = app.add_subcommand("fb", "Assemble F_B for a base descriptor");
    fb->add_option("--descriptor", fb_path, "JSON descriptor file")->required();

    int only = 0;
    auto* va = app.add_subcommand("verify-all", "Run the acceptance suite");
    va->add_option("--check", only, "Run a single criterion")->check(CLI::Range(1, kCheckCount));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report report;
    try {
        if (alt->parsed()) report = alternations_report(alt_max, alt_brute);
        else if (ser->parsed()) report = series_report(ser_name, ser_c, ser_order);
        else if (bw->parsed()) report = bwgraphs_report(bw_white, bw_black, bw_list);
        else if (pr->parsed()) report = profiles_report(pr_lambda, pr_parity, pr_bases);
        else if (sn->parsed()) {
            if (!sn_empty) throw std::invalid_argument("only --empty is supported");
            report = snumbers_report(sn_parity, sn_max, sn_asym);
        } else if (fb->parsed()) report = fb_report(fb_path);
        else if (va->parsed()) report = verify_report(seed, only);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    if (format == "json") std::cout << report.data.dump(2) << '\n';
    else if (format == "csv") print_csv(report);
    else print_text(report);
    return report.status;
}
