#pragma once

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xormagic/construct.hpp"
#include "xormagic/degrees.hpp"
#include "xormagic/family_parse.hpp"
#include "xormagic/json_io.hpp"
#include "xormagic/milp.hpp"
#include "xormagic/search.hpp"
#include "xormagic/snf.hpp"

namespace xormagic {

// Exit codes shared by all subcommands.
inline constexpr int exit_ok = 0;          // success / affirmative
inline constexpr int exit_negative = 10;   // certified negative (infeasible, not magic)
inline constexpr int exit_inconclusive = 20; // inconclusive / budget exhausted
inline constexpr int exit_usage = 2;       // usage error, malformed input

namespace cli_detail {

inline Mode parse_mode(const std::string& s) {
    if (s == "open")
        return Mode::open;
    if (s == "closed")
        return Mode::closed;
    throw CLI::ValidationError("--mode", "mode must be open or closed");
}

inline Parity parse_parity(const std::string& s) {
    if (s == "open-odd")
        return Parity::open_odd;
    if (s == "closed-even")
        return Parity::closed_even;
    throw CLI::ValidationError("--parity", "parity must be open-odd or closed-even");
}

inline RuleSet parse_rules(const std::string& csv) {
    RuleSet rules;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "cartesian")
            rules.cartesian = true;
        else if (item == "strong")
            rules.strong = true;
        else if (item == "complement")
            rules.complement = true;
        else if (!item.empty())
            throw CLI::ValidationError("--rules", "unknown rule: " + item);
    }
    return rules;
}

inline Graph graph_from_options(const std::string& family, const std::string& file) {
    if (!family.empty() && !file.empty())
        throw CLI::ValidationError("input", "give either --family or --graph, not both");
    if (!family.empty())
        return parse_family(family);
    if (!file.empty())
        return graph_from_json(load_json_file(file));
    throw CLI::ValidationError("input", "one of --family or --graph is required");
}

} // namespace cli_detail

inline int cli_dispatch(const std::vector<std::string>& args, std::ostream& out = std::cout,
                        std::ostream& err = std::cerr) {
    CLI::App app{"construct, verify, search for, and refute XOR-magic labelings of graphs of order 2^n"};
    app.require_subcommand(1);

    // verify
    std::string verify_cert;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "check a graph+labeling certificate file");
    verify_cmd->add_option("--cert", verify_cert, "certificate json")->required();
    verify_cmd->add_flag("--json", verify_json, "machine-readable output");

    // search
    int s_n = 2, s_d = 0;
    std::string s_mode = "open";
    bool s_connected = false, s_json = false, s_no_symmetry = false;
    double s_budget = 0.0;
    std::uint64_t s_nodes = 0, s_seed = 0;
    std::string s_out;
    auto* search_cmd = app.add_subcommand("search", "decide existence of a d-regular magic graph");
    search_cmd->add_option("--n", s_n, "power: order is 2^n")->required();
    search_cmd->add_option("--d", s_d, "required valency")->required();
    search_cmd->add_option("--mode", s_mode, "open or closed")->required();
    search_cmd->add_flag("--connected", s_connected, "require a connected witness");
    search_cmd->add_option("--budget-secs", s_budget, "wall clock budget (0 = none)");
    search_cmd->add_option("--node-limit", s_nodes, "decision node budget (0 = none)");
    search_cmd->add_option("--seed", s_seed, "branching tiebreak seed");
    search_cmd->add_flag("--no-symmetry", s_no_symmetry, "disable symmetry breaking");
    search_cmd->add_option("--out", s_out, "write the witness certificate here");
    search_cmd->add_flag("--json", s_json, "machine-readable output");

    // export-milp
    int m_n = 2, m_d = 1, m_t = 0;
    std::string m_mode = "open", m_variant = "model1", m_out;
    bool m_literal = false;
    auto* milp_cmd = app.add_subcommand("export-milp", "write an LP-format model file");
    milp_cmd->add_option("--n", m_n, "power: order is 2^n")->required();
    milp_cmd->add_option("--d", m_d, "required valency")->required();
    milp_cmd->add_option("--mode", m_mode, "open or closed")->required();
    milp_cmd->add_option("--variant", m_variant, "model1 or model2")->required();
    milp_cmd->add_option("--t", m_t, "chunk length for model2");
    milp_cmd->add_flag("--literal", m_literal, "emit both edge orientations plus symmetry rows");
    milp_cmd->add_option("--out", m_out, "output .lp path")->required();

    // algebra
    std::string a_family, a_graph;
    bool a_json = false;
    auto* algebra_cmd = app.add_subcommand("algebra", "determinant, SNF diagonal and the open-labeling screen");
    algebra_cmd->add_option("--family", a_family, "family spec, e.g. circulant:8:1,4");
    algebra_cmd->add_option("--graph", a_graph, "graph json file");
    algebra_cmd->add_flag("--json", a_json, "machine-readable output");

    // construct
    int c_power = 0;
    std::string c_parity, c_family, c_out;
    bool c_json = false;
    auto* construct_cmd = app.add_subcommand("construct", "build a graph (family spec or magic power-n graph)");
    construct_cmd->add_option("--power", c_power, "build a verified magic graph of this power");
    construct_cmd->add_option("--parity", c_parity, "open-odd or closed-even (with --power)");
    construct_cmd->add_option("--family", c_family, "family spec to materialize");
    construct_cmd->add_option("--out", c_out, "output json path");
    construct_cmd->add_flag("--json", c_json, "machine-readable output");

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "embedded verified fixtures");
    auto* catalog_list_cmd = catalog_cmd->add_subcommand("list", "list all entries");
    std::string cat_id, cat_out;
    bool cat_json = false;
    catalog_list_cmd->add_flag("--json", cat_json, "machine-readable output");
    auto* catalog_show_cmd = catalog_cmd->add_subcommand("show", "print one entry");
    catalog_show_cmd->add_option("--id", cat_id, "entry id")->required();
    catalog_show_cmd->add_flag("--json", cat_json, "machine-readable output");
    auto* catalog_export_cmd = catalog_cmd->add_subcommand("export", "write an entry as a certificate file");
    catalog_export_cmd->add_option("--id", cat_id, "entry id")->required();
    catalog_export_cmd->add_option("--out", cat_out, "output directory")->required();
    catalog_cmd->require_subcommand(1);

    // degrees
    int d_n = 8;
    std::string d_parity = "open-odd", d_rules = "cartesian,strong,complement";
    int d_trace = -1;
    bool d_json = false;
    auto* degrees_cmd = app.add_subcommand("degrees", "closure of the known degree lists under the product rules");
    degrees_cmd->add_option("--n", d_n, "target power")->required();
    degrees_cmd->add_option("--parity", d_parity, "open-odd or closed-even")->required();
    degrees_cmd->add_option("--rules", d_rules, "comma list of cartesian,strong,complement");
    degrees_cmd->add_option("--trace", d_trace, "print the derivation of this degree");
    degrees_cmd->add_flag("--json", d_json, "machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*verify_cmd) {
            const Certificate cert = certificate_from_json(load_json_file(verify_cert));
            const VerifyResult r = verify_xor_magic(cert.graph, cert.labeling, cert.mode);
            if (verify_json) {
                json j{{"mode", to_string(cert.mode)}, {"verdict", to_string(r.verdict)}};
                if (r.witness >= 0) {
                    j["witness"] = r.witness;
                    j["weight"] = r.weight->to_string();
                }
                out << j.dump() << "\n";
            } else {
                out << "verdict: " << to_string(r.verdict);
                if (r.witness >= 0)
                    out << " (vertex " << r.witness << ", weight " << r.weight->to_string() << ")";
                out << "\n";
            }
            return r.ok() ? exit_ok : exit_negative;
        }

        if (*search_cmd) {
            SearchProblem problem;
            problem.n = s_n;
            problem.d = s_d;
            problem.mode = cli_detail::parse_mode(s_mode);
            problem.require_connected = s_connected;
            problem.budget_secs = s_budget;
            problem.node_limit = s_nodes;
            problem.seed = s_seed;
            problem.symmetry_breaking = !s_no_symmetry;
            const SearchOutcome outcome = solve(problem);
            if (outcome.status == SearchStatus::feasible && !certify(outcome, problem))
                throw std::logic_error("internal soundness error: witness failed certification");
            if (s_json) {
                json j{{"status", to_string(outcome.status)},
                       {"nodes", outcome.stats.nodes},
                       {"seconds", outcome.stats.seconds},
                       {"restarts", outcome.stats.restarts}};
                if (outcome.graph) {
                    j["connected"] = outcome.connected;
                    j["graph"] = graph_to_json(*outcome.graph);
                }
                out << j.dump() << "\n";
            } else {
                out << to_string(outcome.status) << " (nodes " << outcome.stats.nodes << ", "
                    << outcome.stats.seconds << "s)\n";
            }
            if (outcome.status == SearchStatus::feasible && !s_out.empty()) {
                const Certificate cert{*outcome.graph, search_labeling(problem), problem.mode};
                save_json_file(s_out, certificate_to_json(cert));
            }
            switch (outcome.status) {
            case SearchStatus::feasible: return exit_ok;
            case SearchStatus::infeasible: return exit_negative;
            case SearchStatus::budget_exhausted: return exit_inconclusive;
            }
        }

        if (*milp_cmd) {
            const MilpVariant variant = m_variant == "model2" ? MilpVariant::model2 : MilpVariant::model1;
            if (m_variant != "model1" && m_variant != "model2")
                throw std::invalid_argument("variant must be model1 or model2");
            if (variant == MilpVariant::model2 && m_t == 0)
                throw std::invalid_argument("model2 needs --t");
            const MilpModel model = build_model(m_n, m_d, cli_detail::parse_mode(m_mode), variant,
                                                m_t, canonical_bijection(m_n), m_literal);
            save_text_file(m_out, render_lp(model));
            out << "wrote " << m_out << " (" << model.rows.size() << " rows, "
                << model.variables.size() << " variables)\n";
            return exit_ok;
        }

        if (*algebra_cmd) {
            const Graph g = cli_detail::graph_from_options(a_family, a_graph);
            const BigInt det = int_determinant(adjacency_matrix(g));
            const int det_mod2 = gf2_determinant(Gf2Matrix::adjacency(g));
            const auto snf = smith_normal_form(adjacency_matrix(g));
            const NecessaryCondition nc = necessary_condition_open(g);
            const char* verdict = nc == NecessaryCondition::fail ? "not_open_magic" : "inconclusive";
            if (a_json) {
                json diag = json::array();
                for (const BigInt& d : snf.diagonal())
                    diag.push_back(d.str());
                out << json{{"abs_det", detail::abs_big(det).str()},
                            {"det_mod_2", det_mod2},
                            {"snf_diagonal", diag},
                            {"necessary_condition_open", nc == NecessaryCondition::fail ? "fail" : "pass"},
                            {"verdict", verdict}}
                           .dump()
                    << "\n";
            } else {
                out << "|det| = " << detail::abs_big(det).str() << "\n";
                out << "det mod 2 = " << det_mod2 << "\n";
                out << "snf diagonal =";
                for (const BigInt& d : snf.diagonal())
                    out << " " << d.str();
                out << "\n";
                out << "necessary condition (open): " << (nc == NecessaryCondition::fail ? "fail" : "pass")
                    << " -> " << verdict << "\n";
            }
            return nc == NecessaryCondition::fail ? exit_negative : exit_inconclusive;
        }

        if (*construct_cmd) {
            if ((c_power > 0) == !c_family.empty())
                throw std::invalid_argument("give exactly one of --power or --family");
            if (c_power > 0) {
                const Parity parity = cli_detail::parse_parity(c_parity);
                const LabeledGraph lg = build_power_n_graph(c_power, parity);
                const Certificate cert{lg.graph, lg.labeling,
                                       parity == Parity::open_odd ? Mode::open : Mode::closed};
                if (!c_out.empty())
                    save_json_file(c_out, certificate_to_json(cert));
                if (c_json)
                    out << json{{"order", lg.graph.order()},
                                {"degree", *lg.graph.regularity()},
                                {"mode", to_string(cert.mode)}}
                               .dump()
                        << "\n";
                else
                    out << "built " << *lg.graph.regularity() << "-regular " << to_string(cert.mode)
                        << " XOR-magic graph of order " << lg.graph.order() << "\n";
            } else {
                const Graph g = parse_family(c_family);
                if (!c_out.empty())
                    save_json_file(c_out, graph_to_json(g));
                if (c_json)
                    out << json{{"order", g.order()},
                                {"edges", g.edge_count()},
                                {"connected", g.is_connected()}}
                               .dump()
                        << "\n";
                else
                    out << "built graph: order " << g.order() << ", " << g.edge_count() << " edges\n";
            }
            return exit_ok;
        }

        if (*catalog_cmd) {
            if (*catalog_list_cmd) {
                if (cat_json) {
                    json j = json::array();
                    for (const auto& e : catalog_list())
                        j.push_back({{"id", e.id},
                                     {"order", e.graph.order()},
                                     {"degree", e.degree},
                                     {"mode", to_string(e.mode)},
                                     {"provenance", e.provenance}});
                    out << j.dump() << "\n";
                } else {
                    for (const auto& e : catalog_list())
                        out << e.id << ": order " << e.graph.order() << ", " << e.degree << "-regular, "
                            << to_string(e.mode) << " (" << e.provenance << ")\n";
                }
            } else if (*catalog_show_cmd) {
                const CatalogEntry e = catalog_load(cat_id);
                const Certificate cert{e.graph, e.labeling, e.mode};
                if (cat_json)
                    out << certificate_to_json(cert).dump() << "\n";
                else {
                    out << e.id << ": order " << e.graph.order() << ", " << e.degree << "-regular, "
                        << to_string(e.mode) << ", expected verdict " << to_string(e.expected) << "\n";
                    for (const auto& [u, v] : e.graph.edges())
                        out << u << " " << v << "\n";
                }
            } else if (*catalog_export_cmd) {
                const CatalogEntry e = catalog_load(cat_id);
                std::filesystem::create_directories(cat_out);
                const std::string path = (std::filesystem::path(cat_out) / (e.id + ".json")).string();
                save_json_file(path, certificate_to_json(Certificate{e.graph, e.labeling, e.mode}));
                out << "wrote " << path << "\n";
            }
            return exit_ok;
        }

        if (*degrees_cmd) {
            const Parity parity = cli_detail::parse_parity(d_parity);
            const RuleSet rules = cli_detail::parse_rules(d_rules);
            const ReachableDegrees reach = reachable_degrees(d_n, parity, rules);
            if (d_json) {
                json j{{"n", d_n}, {"parity", d_parity}, {"degrees", reach.degrees}};
                if (d_trace >= 0)
                    j["trace"] = format_trace(reach.table, {d_n, parity, d_trace});
                out << j.dump() << "\n";
            } else {
                for (int deg : reach.degrees)
                    out << deg << " ";
                out << "\n";
                if (d_trace >= 0)
                    out << format_trace(reach.table, {d_n, parity, d_trace}) << "\n";
            }
            return exit_ok;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

} // namespace xormagic
