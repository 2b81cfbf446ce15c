// Command-line front end: every computation in the library, exact output as
// JSON records {"command","inputs","value","provenance"}.

#include "CLI11.hpp"
#include "json.hpp"

#include "tautkit/correlators.hpp"
#include "tautkit/errors.hpp"
#include "tautkit/faber.hpp"
#include "tautkit/graphs.hpp"
#include "tautkit/hodge.hpp"
#include "tautkit/hurwitz.hpp"
#include "tautkit/invariance.hpp"
#include "tautkit/numeric.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace tautkit;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

void emit(const std::string& command, const json& inputs, const json& value,
          const std::string& provenance) {
    json record;
    record["command"] = command;
    record["inputs"] = inputs;
    record["value"] = value;
    record["provenance"] = provenance;
    std::cout << record.dump(2) << "\n";
}

json graph_json(const DualGraph& g) {
    json jg;
    jg["genus"] = g.genus;
    jg["legs"] = json::array();
    for (const auto& leg : g.legs)
        jg["legs"].push_back({{"vertex", leg.vertex}, {"psi", leg.psi}});
    jg["edges"] = json::array();
    for (const auto& e : g.edges)
        jg["edges"].push_back({{"u", e.u}, {"v", e.v}, {"du", e.du}, {"dv", e.dv}});
    jg["codim"] = g.codim();
    jg["dim"] = g.dimension();
    jg["aut"] = g.automorphism_count().get_str();
    return jg;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Hurwitz numbers, psi/Hodge intersections and "
                 "tautological-ring combinatorics"};
    app.require_subcommand(1);

    // hurwitz
    auto* hur = app.add_subcommand("hurwitz", "Hurwitz numbers by monodromy enumeration");
    int h_genus = 0;
    std::string h_profile, h_double;
    bool h_disconnected = false;
    int h_max_degree = EnumerationCaps{}.max_degree;
    int h_max_branch = EnumerationCaps{}.max_branch_points;
    hur->add_option("--genus", h_genus)->required();
    hur->add_option("--profile", h_profile, "ramification profile a,b,c")->required();
    hur->add_flag("--disconnected", h_disconnected);
    hur->add_option("--double", h_double, "second profile for a double Hurwitz number");
    hur->add_option("--max-degree", h_max_degree);
    hur->add_option("--max-branch-points", h_max_branch);

    // psi
    auto* psi = app.add_subcommand("psi", "psi-class top intersections");
    int p_genus = 0;
    std::string p_exps, p_cache;
    psi->add_option("--genus", p_genus)->required();
    psi->add_option("--exps", p_exps, "psi exponents k1,k2,...")->required();
    psi->add_option("--cache", p_cache, "correlator cache file");

    // hodge
    auto* hod = app.add_subcommand("hodge", "Hodge integral table by ELSV interpolation");
    int hg_genus = 0, hg_points = 0;
    hod->add_option("--genus", hg_genus)->required();
    hod->add_option("--points", hg_points, "number of marked points")->required();

    // elsv
    auto* elsv = app.add_subcommand("elsv", "ELSV forward route vs brute force");
    int e_genus = 0;
    std::string e_profile;
    elsv->add_option("--genus", e_genus)->required();
    elsv->add_option("--profile", e_profile)->required();

    // faber
    auto* fab = app.add_subcommand("faber", "socle coefficients in the tautological ring");
    int f_genus = 0;
    std::string f_d;
    bool f_solve = false;
    fab->add_option("--genus", f_genus)->required();
    fab->add_option("--d", f_d, "kappa indices d1,d2,...");
    fab->add_flag("--solve", f_solve, "solve all degree g-2 kappa monomials");

    // graphs
    auto* gra = app.add_subcommand("graphs", "stable dual graph strata");
    int g_genus = 0, g_legs = 0, g_dim = -1;
    int g_max_dim = EnumerateOptions{}.max_complexity;
    bool g_disconnected = false, g_count = false;
    std::string g_dot;
    gra->add_option("--genus", g_genus)->required();
    gra->add_option("--legs", g_legs)->required();
    gra->add_option("--dim", g_dim, "keep only strata of this dimension");
    gra->add_flag("--disconnected", g_disconnected);
    gra->add_flag("--count", g_count);
    gra->add_option("--dot", g_dot, "write DOT renderings to this file");
    gra->add_option("--max-dim", g_max_dim, "cap on 3g-3+n");

    // rl
    auto* rl = app.add_subcommand("rl", "Y.-P. Lee's invariance operator");
    int r_l = 1;
    std::string r_input, r_fixture;
    rl->add_option("--l", r_l)->required();
    rl->add_option("--input", r_input, "graph sum JSON file");
    rl->add_option("--fixture", r_fixture, "named input: m05 (cross-ratio relation)");

    // euler
    auto* eul = app.add_subcommand("euler", "orbifold Euler characteristics of M_{g,n}");
    int u_genus = 0, u_legs = -1;
    eul->add_option("--genus", u_genus)->required();
    eul->add_option("--legs", u_legs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (hur->parsed()) {
        Partition alpha(parse_int_list(h_profile));
        EnumerationCaps caps{h_max_degree, h_max_branch};
        json inputs{{"genus", h_genus}, {"profile", alpha.str()}};
        Rational value;
        if (!h_double.empty()) {
            Partition beta(parse_int_list(h_double));
            inputs["double"] = beta.str();
            inputs["disconnected"] = h_disconnected;
            value = double_hurwitz_bruteforce(h_genus, alpha, beta, !h_disconnected, caps);
        } else {
            inputs["disconnected"] = h_disconnected;
            value = hurwitz_bruteforce({h_genus, alpha, !h_disconnected}, caps);
        }
        emit("hurwitz", inputs, value.str(), "bruteforce");
    } else if (psi->parsed()) {
        std::vector<int> exps = parse_int_list(p_exps);
        std::string cache = p_cache;
        if (cache.empty())
            if (const char* env = std::getenv("TAUTKIT_CACHE")) cache = env;
        IntersectionTable table;
        if (!cache.empty()) table.load_file(cache);
        Rational value = table.correlator(p_genus, exps);
        if (!cache.empty()) table.save_file(cache);
        emit("psi", json{{"genus", p_genus}, {"exps", exps}}, value.str(), "kdv");
    } else if (hod->parsed()) {
        json value = json::array();
        for (const auto& entry : hodge_from_hurwitz(hg_genus, hg_points))
            value.push_back({{"psi", entry.psi_exps},
                             {"lambda", entry.k},
                             {"value", entry.value.str()}});
        emit("hodge", json{{"genus", hg_genus}, {"points", hg_points}}, value, "elsv");
    } else if (elsv->parsed()) {
        Partition alpha(parse_int_list(e_profile));
        Rational forward =
            elsv_forward(e_genus, alpha, hodge_from_hurwitz(e_genus, alpha.length()));
        Rational brute = hurwitz_bruteforce({e_genus, alpha, true});
        json value{{"elsv", forward.str()}, {"bruteforce", brute.str()}};
        emit("elsv", json{{"genus", e_genus}, {"profile", alpha.str()}}, value, "elsv");
        if (forward != brute) {
            std::cerr << "elsv: routes disagree\n";
            return 1;
        }
    } else if (fab->parsed()) {
        if (f_solve != f_d.empty())
            throw CLI::ValidationError("faber", "need exactly one of --d or --solve");
        if (f_solve) {
            json value;
            for (const auto& [mono, coeff] : kappa_solve(f_genus))
                value[mono.str()] = coeff.str();
            emit("faber", json{{"genus", f_genus}, {"solve", true}}, value, "recursion");
        } else {
            std::vector<int> d = parse_int_list(f_d);
            emit("faber", json{{"genus", f_genus}, {"d", d}},
                 faber_coeff(f_genus, d).str(), "closed-form");
        }
    } else if (gra->parsed()) {
        EnumerateOptions opts{g_disconnected, g_dim, g_max_dim};
        auto strata = enumerate_stable(g_genus, g_legs, opts);
        json inputs{{"genus", g_genus}, {"legs", g_legs}};
        if (g_dim >= 0) inputs["dim"] = g_dim;
        inputs["disconnected"] = g_disconnected;
        if (!g_dot.empty()) {
            std::ofstream out(g_dot);
            if (!out) throw std::runtime_error("cannot write " + g_dot);
            for (const auto& g : strata) out << g.dot();
        }
        if (g_count) {
            emit("graphs", inputs, static_cast<int>(strata.size()), "recursion");
        } else {
            json value = json::array();
            for (const auto& g : strata) value.push_back(graph_json(g));
            emit("graphs", inputs, value, "recursion");
        }
    } else if (rl->parsed()) {
        GraphSum input;
        json inputs{{"l", r_l}};
        if (!r_fixture.empty()) {
            if (r_fixture != "m05")
                throw CLI::ValidationError("rl", "unknown fixture: " + r_fixture);
            input = cross_ratio_relation_m05();
            inputs["fixture"] = r_fixture;
        } else if (!r_input.empty()) {
            std::ifstream in(r_input);
            if (!in) throw std::runtime_error("cannot read " + r_input);
            std::stringstream buf;
            buf << in.rdbuf();
            input = GraphSum::from_json(buf.str());
            inputs["input"] = r_input;
        } else {
            throw CLI::ValidationError("rl", "need --input or --fixture");
        }
        GraphSum result = rl_apply(input, r_l);
        emit("rl", inputs, json::parse(result.json()), "recursion");
    } else if (eul->parsed()) {
        json inputs{{"genus", u_genus}};
        Rational value;
        if (u_legs < 0) {
            value = euler_char_mg(u_genus);
        } else {
            inputs["legs"] = u_legs;
            value = euler_char_mgn(u_genus, u_legs);
        }
        emit("euler", inputs, value.str(), "closed-form");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
