#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "osint/engine.hpp"
#include "osint/errors.hpp"
#include "osint/report.hpp"
#include "osint/scenario.hpp"

namespace {

using namespace osint;

std::string read_text(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw IoError("write failed for '" + path + "'");
}

nlohmann::json cell_json(const Matrix2x2::Cell& c) {
    return nlohmann::json::array({c.a, c.b});
}

nlohmann::json game_to_json(const EquilibriumResult& r) {
    nlohmann::json pure = nlohmann::json::array();
    for (const auto& [sa, sb] : r.pure)
        pure.push_back({strategy_name(sa), strategy_name(sb)});
    nlohmann::json doc = {
        {"matrix",
         {{"publish_publish", cell_json(r.matrix.at(Strategy::Publish, Strategy::Publish))},
          {"publish_wait", cell_json(r.matrix.at(Strategy::Publish, Strategy::Wait))},
          {"wait_publish", cell_json(r.matrix.at(Strategy::Wait, Strategy::Publish))},
          {"wait_wait", cell_json(r.matrix.at(Strategy::Wait, Strategy::Wait))}}},
        {"pure_nash", std::move(pure)},
        {"dominant_a", r.dominant_a ? nlohmann::json(strategy_name(*r.dominant_a)) : nullptr},
        {"dominant_b", r.dominant_b ? nlohmann::json(strategy_name(*r.dominant_b)) : nullptr},
        {"mixed_exists", r.mixed_exists}};
    doc["mixed"] = r.mixed ? nlohmann::json({{"p_a", r.mixed->first}, {"p_b", r.mixed->second}})
                           : nlohmann::json(nullptr);
    doc["closed_form"] = r.closed_form
                             ? nlohmann::json({{"value", r.closed_form->value},
                                               {"in_range", r.closed_form->in_range}})
                             : nlohmann::json(nullptr);
    return doc;
}

void print_game_text(const EquilibriumResult& r, std::ostream& out) {
    auto cell = [&](Strategy sa, Strategy sb) {
        const auto& c = r.matrix.at(sa, sb);
        std::ostringstream s;
        s << '(' << c.a << ", " << c.b << ')';
        return s.str();
    };
    out << "payoff matrix (A, B):\n";
    out << "                 B: publish        B: wait\n";
    out << "  A: publish     " << cell(Strategy::Publish, Strategy::Publish) << "  "
        << cell(Strategy::Publish, Strategy::Wait) << "\n";
    out << "  A: wait        " << cell(Strategy::Wait, Strategy::Publish) << "  "
        << cell(Strategy::Wait, Strategy::Wait) << "\n";
    out << "pure Nash equilibria:";
    if (r.pure.empty()) out << " none";
    for (const auto& [sa, sb] : r.pure)
        out << " (" << strategy_name(sa) << ", " << strategy_name(sb) << ")";
    out << "\n";
    out << "dominant strategy A: " << (r.dominant_a ? strategy_name(*r.dominant_a) : "none")
        << "\n";
    out << "dominant strategy B: " << (r.dominant_b ? strategy_name(*r.dominant_b) : "none")
        << "\n";
    if (r.closed_form)
        out << "closed-form p*: " << r.closed_form->value
            << (r.closed_form->in_range ? " (in range)" : " (out of range)") << "\n";
    else
        out << "closed-form p*: degenerate denominator\n";
    if (r.mixed)
        out << "indifference mixed equilibrium: p_A = " << r.mixed->first
            << ", p_B = " << r.mixed->second << "\n";
    else
        out << "indifference mixed equilibrium: none\n";
}

struct GlobalOpts {
    std::optional<std::uint64_t> seed;
    std::string out = "out";
    std::string format = "csv";
    bool quiet = false;
};

ScenarioConfig load_with_seed(const std::string& path, const GlobalOpts& opts) {
    ScenarioConfig config = load_scenario(path);
    if (opts.seed) config.seed = *opts.seed;
    return config;
}

void run_simulate(const std::string& scenario_path, bool figures, const GlobalOpts& opts) {
    const ScenarioConfig config = load_with_seed(scenario_path, opts);
    const SimulationTrace trace = run(config);

    std::filesystem::create_directories(opts.out);
    const auto dir = std::filesystem::path(opts.out);
    write_text((dir / "scenario_echo.json").string(), serialize_scenario(config));
    emit_csv(trace, (dir / "trace.csv").string());
    emit_summary_json(trace.summary, (dir / "summary.json").string());
    if (figures) {
        emit_virality_figure(trace, (dir / "virality.svg").string());
        std::map<std::string, double> rewards;
        for (const ActorSummary& a : trace.summary.actors) rewards[a.id] = a.reward;
        emit_heatmap_figure(config.actors, rewards, (dir / "heatmap.svg").string());
    }
    if (!opts.quiet) {
        std::cout << "wrote " << (dir / "trace.csv").string() << " (" << trace.rows.size()
                  << " rows), summary.json, scenario_echo.json";
        if (figures) std::cout << ", virality.svg, heatmap.svg";
        std::cout << "\n";
    }
}

void run_figures(const std::string& scenario_path, const GlobalOpts& opts) {
    const ScenarioConfig config = load_with_seed(scenario_path, opts);
    const SimulationTrace trace = run(config);
    std::filesystem::create_directories(opts.out);
    const auto dir = std::filesystem::path(opts.out);
    emit_virality_figure(trace, (dir / "virality.svg").string());
    std::map<std::string, double> rewards;
    for (const ActorSummary& a : trace.summary.actors) rewards[a.id] = a.reward;
    emit_heatmap_figure(config.actors, rewards, (dir / "heatmap.svg").string());
    if (!opts.quiet)
        std::cout << "wrote " << (dir / "virality.svg").string() << " and heatmap.svg\n";
}

nlohmann::json* navigate(nlohmann::json& doc, const std::string& dotted) {
    nlohmann::json* node = &doc;
    std::string part;
    std::istringstream path(dotted);
    std::vector<std::string> parts;
    while (std::getline(path, part, '.')) parts.push_back(part);
    if (parts.empty()) throw ValidationError("sweep: empty --param path");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        if (!node->is_object()) throw ValidationError("sweep: '" + parts[i] + "' is not an object");
        node = &(*node)[parts[i]];
        if (node->is_null()) *node = nlohmann::json::object();
    }
    if (!node->is_object())
        throw ValidationError("sweep: cannot set '" + dotted + "' on a non-object");
    return &(*node)[parts.back()];
}

void run_sweep(const std::string& scenario_path, const std::string& param, double from,
               double to, int steps, const GlobalOpts& opts) {
    if (steps < 1) throw ValidationError("sweep: --steps must be >= 1");
    const std::string base_text = read_text(scenario_path);

    std::filesystem::create_directories(opts.out);
    const auto out_path = std::filesystem::path(opts.out) / "sweep.csv";
    std::ostringstream csv;
    csv << "param,value,seed,events,publications,verified_fraction,misinformation_rate,"
           "attention_gini,total_attention\n";
    for (int i = 0; i < steps; ++i) {
        const double value = steps == 1 ? from : from + (to - from) * i / (steps - 1);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(base_text);
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError(std::string("scenario parse error: ") + e.what());
        }
        *navigate(doc, param) = value;
        ScenarioConfig config = parse_scenario(doc.dump());
        if (opts.seed) config.seed = *opts.seed;  // common random numbers across the sweep
        const SimulationTrace trace = run(config);
        const RunSummary& s = trace.summary;
        csv << param << ',' << value << ',' << config.seed << ',' << s.events << ','
            << s.publications << ',' << s.verified_fraction << ',' << s.misinformation_rate
            << ',' << s.attention_gini << ',' << s.total_attention << '\n';
    }
    write_text(out_path.string(), csv.str());
    if (!opts.quiet) std::cout << "wrote " << out_path.string() << " (" << steps << " runs)\n";
}

void run_centrality(const std::string& graph_path, const NetworkParams& params,
                    const GlobalOpts& opts) {
    const SocialGraph g = read_edge_list(graph_path);
    if (g.node_count() < 2) throw ValidationError("centrality: graph needs at least two nodes");
    if (opts.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < g.node_count(); ++i) {
            const double c = closeness(g, i);
            rows.push_back({{"node", g.id_of(i)},
                            {"degree", g.degree(i)},
                            {"closeness", c},
                            {"degree_effect", degree_effect(g.degree(i), c, params)}});
        }
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "node,degree,closeness,degree_effect\n";
        for (int i = 0; i < g.node_count(); ++i) {
            const double c = closeness(g, i);
            std::cout << g.id_of(i) << ',' << g.degree(i) << ',' << c << ','
                      << degree_effect(g.degree(i), c, params) << '\n';
        }
    }
}

void run_utility_curve(const std::string& scenario_path, const std::string& actor_id,
                       const std::string& role, const std::string& variant_str, double e_lo,
                       double e_hi, int points, double attention_scale, double rho, double drho,
                       const GlobalOpts& opts) {
    if (points < 2) throw ValidationError("utility: --points must be >= 2");
    if (!(e_hi > e_lo) || e_lo < 0) throw ValidationError("utility: invalid effort range");

    ActorProfile profile;
    UtilityForms forms;
    if (!scenario_path.empty()) {
        const ScenarioConfig config = load_scenario(scenario_path);
        forms = config.forms;
        if (actor_id.empty()) {
            profile = config.actors.front();
        } else {
            bool found = false;
            for (const ActorProfile& a : config.actors)
                if (a.id == actor_id) {
                    profile = a;
                    found = true;
                }
            if (!found) throw ValidationError("utility: unknown actor '" + actor_id + "'");
        }
    } else {
        profile = default_profile(role_from_name(role));
    }
    const UtilityVariant variant = variant_from_name(variant_str);

    std::ostringstream csv;
    csv << "effort,utility\n";
    UtilityInputs in;
    in.profile = profile;
    in.forms = forms;
    in.reputation = rho;
    in.drho = drho;
    for (int i = 0; i < points; ++i) {
        const double e = e_lo + (e_hi - e_lo) * i / (points - 1);
        in.effort = e;
        in.attention = attention_scale * e;
        csv << e << ',' << utility_value(variant, in) << '\n';
    }
    const EffortOptimum best = optimize_effort(
        profile, [&](double e) { return attention_scale * e; }, e_lo, e_hi, forms, variant, rho,
        drho);

    if (opts.out == "-") {
        std::cout << csv.str();
    } else {
        std::filesystem::create_directories(opts.out);
        const auto path = std::filesystem::path(opts.out) / "utility_curve.csv";
        write_text(path.string(), csv.str());
        if (!opts.quiet) std::cout << "wrote " << path.string() << "\n";
    }
    if (!opts.quiet)
        std::cout << "optimum: E* = " << best.effort << ", U* = " << best.utility << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"osintsim: agent-based simulator of the OSINT attention economy"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts opts;
    app.add_option("--seed", opts.seed, "override the scenario seed");
    app.add_option("--out", opts.out, "output directory ('-' prints to stdout where supported)");
    app.add_option("--format", opts.format, "output format for tabular commands")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--quiet", opts.quiet, "suppress informational output");

    // solve-game
    auto* solve = app.add_subcommand("solve-game", "solve the publish/wait game");
    PayoffSpec spec;
    bool arbitrary = false;
    solve->add_option("--H", spec.levels.high, "payoff: publish first and alone");
    solve->add_option("--M", spec.levels.medium, "payoff: simultaneous publish");
    solve->add_option("--L", spec.levels.low, "payoff: wait while the other publishes");
    solve->add_option("--B", spec.levels.baseline, "payoff: both wait");
    solve->add_flag("--arbitrary", arbitrary, "allow non-canonical payoff orderings");
    solve->add_option("--cf", spec.false_report_cost, "false-reporting cost");
    solve->add_option("--q0", spec.prior_true, "prior probability the information is true");
    solve->add_option("--delta", spec.reputation_discount, "reputation discount factor");
    solve->add_option("--drho-pub-both", spec.drho_pub_both);
    solve->add_option("--drho-pub-solo", spec.drho_pub_solo);
    solve->add_option("--drho-wait-solo", spec.drho_wait_solo);
    solve->add_option("--drho-wait-both-a", spec.drho_wait_both_a);
    solve->add_option("--drho-wait-both-b", spec.drho_wait_both_b);

    // utility
    auto* util = app.add_subcommand("utility", "evaluate a utility curve U(E)");
    std::string util_scenario;
    std::string util_actor;
    std::string util_role = "remote_analyst";
    std::string util_variant = "base";
    double util_lo = 0.0;
    double util_hi = 10.0;
    int util_points = 101;
    double util_scale = 1.0;
    double util_rho = 1.0;
    double util_drho = 0.0;
    util->add_option("--scenario", util_scenario, "take profile and forms from a scenario file");
    util->add_option("--actor", util_actor, "actor id inside the scenario");
    util->add_option("--role", util_role, "role preset when no scenario is given");
    util->add_option("--variant", util_variant, "base|reputation|monetized|role_weighted");
    util->add_option("--e-min", util_lo);
    util->add_option("--e-max", util_hi);
    util->add_option("--points", util_points);
    util->add_option("--attention-scale", util_scale, "attention produced per unit effort");
    util->add_option("--rho", util_rho, "reputation for the reputation variant");
    util->add_option("--drho", util_drho, "reputation change for the reputation variant");

    // centrality
    auto* cent = app.add_subcommand("centrality", "degree, closeness, and attention position");
    std::string graph_path;
    NetworkParams net_params;
    cent->add_option("--graph", graph_path, "edge list file, one 'u v' pair per line")
        ->required();
    cent->add_option("--theta0", net_params.theta0);
    cent->add_option("--theta1", net_params.theta1);
    cent->add_option("--theta2", net_params.theta2);

    // simulate
    auto* sim = app.add_subcommand("simulate", "run a scenario and write the trace");
    std::string sim_scenario;
    bool sim_figures = false;
    sim->add_option("--scenario", sim_scenario, "scenario file")->required();
    sim->add_flag("--figures", sim_figures, "also emit the SVG figures");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run a scenario across one parameter range");
    std::string sweep_scenario;
    std::string sweep_param;
    double sweep_from = 0.0;
    double sweep_to = 1.0;
    int sweep_steps = 5;
    sweep->add_option("--scenario", sweep_scenario)->required();
    sweep->add_option("--param", sweep_param, "dotted path, e.g. virality.decay")->required();
    sweep->add_option("--from", sweep_from)->required();
    sweep->add_option("--to", sweep_to)->required();
    sweep->add_option("--steps", sweep_steps);

    // figures
    auto* figs = app.add_subcommand("figures", "emit the SVG figures for a scenario run");
    std::string figs_scenario;
    figs->add_option("--scenario", figs_scenario)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) {
            spec.levels.canonical = !arbitrary;
            validate(spec);
            const EquilibriumResult result = analyze_game(spec);
            if (opts.format == "json")
                std::cout << game_to_json(result).dump(2) << "\n";
            else
                print_game_text(result, std::cout);
        } else if (util->parsed()) {
            run_utility_curve(util_scenario, util_actor, util_role, util_variant, util_lo,
                              util_hi, util_points, util_scale, util_rho, util_drho, opts);
        } else if (cent->parsed()) {
            run_centrality(graph_path, net_params, opts);
        } else if (sim->parsed()) {
            run_simulate(sim_scenario, sim_figures, opts);
        } else if (sweep->parsed()) {
            run_sweep(sweep_scenario, sweep_param, sweep_from, sweep_to, sweep_steps, opts);
        } else if (figs->parsed()) {
            run_figures(figs_scenario, opts);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
