#include "osint/scenario.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "osint/errors.hpp"

namespace osint {

using nlohmann::json;

const char* intervention_name(InterventionKind k) {
    switch (k) {
        case InterventionKind::VerificationSubsidy: return "verification_subsidy";
        case InterventionKind::ReputationBanking: return "reputation_banking";
        case InterventionKind::NetworkGovernance: return "network_governance";
    }
    return "verification_subsidy";
}

InterventionKind intervention_from_name(const std::string& name) {
    if (name == "verification_subsidy") return InterventionKind::VerificationSubsidy;
    if (name == "reputation_banking") return InterventionKind::ReputationBanking;
    if (name == "network_governance") return InterventionKind::NetworkGovernance;
    throw ValidationError("unknown intervention kind '" + name + "'");
}

const char* strategy_mode_name(StrategyMode m) {
    switch (m) {
        case StrategyMode::DominantOrPure: return "dominant_or_pure";
        case StrategyMode::MixedIndifference: return "mixed_indifference";
        case StrategyMode::UtilityBestResponse: return "utility_best_response";
        case StrategyMode::FixedProbability: return "fixed_probability";
    }
    return "dominant_or_pure";
}

StrategyMode strategy_mode_from_name(const std::string& name) {
    if (name == "dominant_or_pure") return StrategyMode::DominantOrPure;
    if (name == "mixed_indifference") return StrategyMode::MixedIndifference;
    if (name == "utility_best_response") return StrategyMode::UtilityBestResponse;
    if (name == "fixed_probability") return StrategyMode::FixedProbability;
    throw ValidationError("unknown strategy mode '" + name + "'");
}

namespace {

void check_keys(const json& obj, const std::string& ctx,
                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* key : allowed) {
            if (it.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) throw ValidationError(ctx + ": unknown key '" + it.key() + "'");
    }
}

const json* find(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double get_num(const json& obj, const char* key, double fallback, const std::string& ctx) {
    const json* v = find(obj, key);
    if (!v) return fallback;
    if (!v->is_number()) throw ValidationError(ctx + "." + key + ": expected a number");
    return v->get<double>();
}

int get_int(const json& obj, const char* key, int fallback, const std::string& ctx) {
    const json* v = find(obj, key);
    if (!v) return fallback;
    if (!v->is_number_integer()) throw ValidationError(ctx + "." + key + ": expected an integer");
    return v->get<int>();
}

bool get_bool(const json& obj, const char* key, bool fallback, const std::string& ctx) {
    const json* v = find(obj, key);
    if (!v) return fallback;
    if (!v->is_boolean()) throw ValidationError(ctx + "." + key + ": expected a boolean");
    return v->get<bool>();
}

std::string get_str(const json& obj, const char* key, const std::string& fallback,
                    const std::string& ctx) {
    const json* v = find(obj, key);
    if (!v) return fallback;
    if (!v->is_string()) throw ValidationError(ctx + "." + key + ": expected a string");
    return v->get<std::string>();
}

ActorProfile parse_actor(const json& obj, const std::string& ctx) {
    if (!obj.is_object()) throw ValidationError(ctx + ": expected an object");
    check_keys(obj, ctx,
               {"id", "role", "alpha", "beta", "gamma", "delta", "tau", "eta", "zeta",
                "platform_affordance", "risk_exposure"});
    const json* id = find(obj, "id");
    if (!id || !id->is_string()) throw ValidationError(ctx + ": 'id' (string) is required");

    ActorProfile p = default_profile(role_from_name(get_str(obj, "role", "remote_analyst", ctx)));
    p.id = id->get<std::string>();
    p.platform_affordance = get_num(obj, "platform_affordance", p.platform_affordance, ctx);
    p.risk_exposure = get_num(obj, "risk_exposure", p.risk_exposure, ctx);
    // Keep the affine typology mapping in step with overridden coordinates;
    // explicit gamma/delta still win below.
    p.gamma = 0.05 * p.risk_exposure;
    p.delta = 0.05 * p.platform_affordance;
    p.alpha = get_num(obj, "alpha", p.alpha, ctx);
    p.beta = get_num(obj, "beta", p.beta, ctx);
    p.gamma = get_num(obj, "gamma", p.gamma, ctx);
    p.delta = get_num(obj, "delta", p.delta, ctx);
    p.tau = get_num(obj, "tau", p.tau, ctx);
    p.eta = get_num(obj, "eta", p.eta, ctx);
    p.zeta = get_num(obj, "zeta", p.zeta, ctx);
    return p;
}

PayoffSpec parse_game(const json& obj) {
    const std::string ctx = "game";
    check_keys(obj, ctx,
               {"H", "M", "L", "B", "canonical", "c_f", "q0", "delta", "drho_pub_both",
                "drho_pub_solo", "drho_wait_solo", "drho_wait_both_a", "drho_wait_both_b"});
    PayoffSpec spec;
    spec.levels.high = get_num(obj, "H", spec.levels.high, ctx);
    spec.levels.medium = get_num(obj, "M", spec.levels.medium, ctx);
    spec.levels.low = get_num(obj, "L", spec.levels.low, ctx);
    spec.levels.baseline = get_num(obj, "B", spec.levels.baseline, ctx);
    spec.levels.canonical = get_bool(obj, "canonical", spec.levels.canonical, ctx);
    spec.false_report_cost = get_num(obj, "c_f", spec.false_report_cost, ctx);
    spec.prior_true = get_num(obj, "q0", spec.prior_true, ctx);
    spec.reputation_discount = get_num(obj, "delta", spec.reputation_discount, ctx);
    spec.drho_pub_both = get_num(obj, "drho_pub_both", spec.drho_pub_both, ctx);
    spec.drho_pub_solo = get_num(obj, "drho_pub_solo", spec.drho_pub_solo, ctx);
    spec.drho_wait_solo = get_num(obj, "drho_wait_solo", spec.drho_wait_solo, ctx);
    spec.drho_wait_both_a = get_num(obj, "drho_wait_both_a", spec.drho_wait_both_a, ctx);
    spec.drho_wait_both_b = get_num(obj, "drho_wait_both_b", spec.drho_wait_both_b, ctx);
    return spec;
}

ViralityParams parse_virality(const json& obj) {
    const std::string ctx = "virality";
    check_keys(obj, ctx, {"v0", "decay", "classes"});
    ViralityParams p;
    p.v0 = get_num(obj, "v0", p.v0, ctx);
    p.decay = get_num(obj, "decay", p.decay, ctx);
    if (const json* classes = find(obj, "classes")) {
        if (!classes->is_array()) throw ValidationError("virality.classes: expected an array");
        p.classes.clear();
        for (const auto& c : *classes) {
            if (!c.is_string()) throw ValidationError("virality.classes: expected strings");
            p.classes.push_back(c.get<std::string>());
        }
    }
    return p;
}

UtilityForms parse_forms(const json& obj) {
    const std::string ctx = "forms";
    check_keys(obj, ctx, {"attention_benefit", "time_cost", "risk_cost", "monetization"});
    UtilityForms f;
    f.attention_benefit =
        form_from_name(get_str(obj, "attention_benefit", form_name(f.attention_benefit), ctx));
    f.time_cost = form_from_name(get_str(obj, "time_cost", form_name(f.time_cost), ctx));
    f.risk_cost = form_from_name(get_str(obj, "risk_cost", form_name(f.risk_cost), ctx));
    f.monetization = form_from_name(get_str(obj, "monetization", form_name(f.monetization), ctx));
    return f;
}

StrategySpec parse_strategy(const json& obj, const std::string& ctx) {
    if (!obj.is_object()) throw ValidationError(ctx + ": expected an object");
    check_keys(obj, ctx, {"mode", "publish_probability"});
    StrategySpec s;
    s.mode = strategy_mode_from_name(get_str(obj, "mode", strategy_mode_name(s.mode), ctx));
    s.publish_probability = get_num(obj, "publish_probability", s.publish_probability, ctx);
    return s;
}

EngineParams parse_engine(const json& obj) {
    const std::string ctx = "engine";
    check_keys(obj, ctx,
               {"strategy", "strategy_overrides", "belief_publish_prob", "verification_delay",
                "arrival", "effort_publish", "effort_verify", "forced_delay"});
    EngineParams e;
    if (const json* strat = find(obj, "strategy")) e.strategy = parse_strategy(*strat, "engine.strategy");
    if (const json* overrides = find(obj, "strategy_overrides")) {
        if (!overrides->is_object())
            throw ValidationError("engine.strategy_overrides: expected an object");
        for (auto it = overrides->begin(); it != overrides->end(); ++it)
            e.strategy_overrides[it.key()] =
                parse_strategy(it.value(), "engine.strategy_overrides." + it.key());
    }
    e.belief_publish_prob = get_num(obj, "belief_publish_prob", e.belief_publish_prob, ctx);
    e.verification_delay = get_int(obj, "verification_delay", e.verification_delay, ctx);
    const std::string arrival = get_str(obj, "arrival", "fixed", ctx);
    if (arrival == "fixed")
        e.arrival = ArrivalKind::Fixed;
    else if (arrival == "poisson")
        e.arrival = ArrivalKind::Poisson;
    else
        throw ValidationError("engine.arrival: expected 'fixed' or 'poisson'");
    e.effort_publish = get_num(obj, "effort_publish", e.effort_publish, ctx);
    e.effort_verify = get_num(obj, "effort_verify", e.effort_verify, ctx);
    if (const json* delays = find(obj, "forced_delay")) {
        if (!delays->is_object()) throw ValidationError("engine.forced_delay: expected an object");
        for (auto it = delays->begin(); it != delays->end(); ++it) {
            if (!it.value().is_number_integer())
                throw ValidationError("engine.forced_delay." + it.key() + ": expected an integer");
            e.forced_delay[it.key()] = it.value().get<int>();
        }
    }
    return e;
}

ReputationParams parse_reputation(const json& obj) {
    const std::string ctx = "reputation";
    check_keys(obj, ctx, {"lambda", "initial_rho", "initial_overrides", "isolated"});
    ReputationParams r;
    r.lambda = get_num(obj, "lambda", r.lambda, ctx);
    r.initial_rho = get_num(obj, "initial_rho", r.initial_rho, ctx);
    if (const json* overrides = find(obj, "initial_overrides")) {
        if (!overrides->is_object())
            throw ValidationError("reputation.initial_overrides: expected an object");
        for (auto it = overrides->begin(); it != overrides->end(); ++it) {
            if (!it.value().is_number())
                throw ValidationError("reputation.initial_overrides." + it.key() +
                                      ": expected a number");
            r.initial_overrides[it.key()] = it.value().get<double>();
        }
    }
    const std::string isolated = get_str(obj, "isolated", "self_mean", ctx);
    if (isolated == "self_mean")
        r.isolated = IsolatedRule::SelfMean;
    else if (isolated == "zero_coupling")
        r.isolated = IsolatedRule::ZeroCoupling;
    else
        throw ValidationError("reputation.isolated: expected 'self_mean' or 'zero_coupling'");
    return r;
}

std::vector<std::pair<std::string, std::string>> parse_edges(const json& arr) {
    if (!arr.is_array()) throw ValidationError("network.edges: expected an array of pairs");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ValidationError("network.edges: each edge must be a [\"u\", \"v\"] pair");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return edges;
}

std::uint64_t default_seed_from_env() {
    if (const char* env = std::getenv("OSINTSIM_SEED")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0')
            throw ValidationError("OSINTSIM_SEED: expected an unsigned integer");
        return static_cast<std::uint64_t>(value);
    }
    return ScenarioConfig{}.seed;
}

ScenarioConfig parse_scenario_impl(const std::string& text,
                                   const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("scenario parse error: ") + e.what());
    }
    if (!doc.is_object()) throw ValidationError("scenario: top level must be an object");
    check_keys(doc, "scenario",
               {"actors", "game", "network", "virality", "forms", "reputation", "engine",
                "horizon", "seed", "event_rate", "interventions"});

    ScenarioConfig config;

    const json* actors = find(doc, "actors");
    if (!actors || !actors->is_array())
        throw ValidationError("scenario: 'actors' (array) is required");
    int i = 0;
    for (const auto& a : *actors)
        config.actors.push_back(parse_actor(a, "actors[" + std::to_string(i++) + "]"));

    if (const json* game = find(doc, "game")) config.game = parse_game(*game);

    if (const json* net = find(doc, "network")) {
        const std::string ctx = "network";
        check_keys(*net, ctx,
                   {"theta0", "theta1", "theta2", "kappa", "q_max", "q0", "edges", "edge_file"});
        config.network.theta0 = get_num(*net, "theta0", config.network.theta0, ctx);
        config.network.theta1 = get_num(*net, "theta1", config.network.theta1, ctx);
        config.network.theta2 = get_num(*net, "theta2", config.network.theta2, ctx);
        config.network.kappa = get_num(*net, "kappa", config.network.kappa, ctx);
        config.network.q_max = get_num(*net, "q_max", config.network.q_max, ctx);
        config.network.q0 = get_num(*net, "q0", config.network.q0, ctx);
        const json* edges = find(*net, "edges");
        const json* edge_file = find(*net, "edge_file");
        if (edges && edge_file)
            throw ValidationError("network: give either 'edges' or 'edge_file', not both");
        if (edges) config.edges = parse_edges(*edges);
        if (edge_file) {
            if (!edge_file->is_string())
                throw ValidationError("network.edge_file: expected a string path");
            const std::filesystem::path resolved =
                base_dir / edge_file->get<std::string>();
            const SocialGraph g = read_edge_list(resolved.string());
            std::vector<std::pair<std::string, std::string>> pairs;
            for (int u = 0; u < g.node_count(); ++u)
                for (int v : g.neighbors(u))
                    if (u < v) pairs.emplace_back(g.id_of(u), g.id_of(v));
            config.edges = std::move(pairs);
        }
    }

    if (const json* vir = find(doc, "virality")) config.virality = parse_virality(*vir);
    if (const json* forms = find(doc, "forms")) config.forms = parse_forms(*forms);
    if (const json* rep = find(doc, "reputation")) config.reputation = parse_reputation(*rep);
    if (const json* eng = find(doc, "engine")) config.engine = parse_engine(*eng);

    config.horizon = get_int(doc, "horizon", config.horizon, "scenario");
    if (const json* seed = find(doc, "seed")) {
        if (!seed->is_number_unsigned())
            throw ValidationError("scenario.seed: expected a nonnegative integer");
        config.seed = seed->get<std::uint64_t>();
    } else {
        config.seed = default_seed_from_env();
    }
    config.event_rate = get_num(doc, "event_rate", config.event_rate, "scenario");

    if (const json* ivs = find(doc, "interventions")) {
        if (!ivs->is_array()) throw ValidationError("interventions: expected an array");
        int k = 0;
        for (const auto& iv : *ivs) {
            const std::string ctx = "interventions[" + std::to_string(k++) + "]";
            if (!iv.is_object()) throw ValidationError(ctx + ": expected an object");
            check_keys(iv, ctx, {"kind", "magnitude", "rho_threshold"});
            Intervention out;
            out.kind = intervention_from_name(get_str(iv, "kind", "", ctx));
            out.magnitude = get_num(iv, "magnitude", out.magnitude, ctx);
            out.rho_threshold = get_num(iv, "rho_threshold", out.rho_threshold, ctx);
            config.interventions.push_back(out);
        }
    }

    validate(config);
    return config;
}

}  // namespace

void validate_for_run(const ScenarioConfig& config) {
    if (config.actors.empty()) throw ValidationError("scenario: at least one actor required");
    std::set<std::string> ids;
    for (const ActorProfile& actor : config.actors) {
        validate_profile(actor);
        if (!ids.insert(actor.id).second)
            throw ValidationError("scenario: duplicate actor id '" + actor.id + "'");
    }
    validate(config.game);
    validate(config.network);
    validate(config.virality);
    validate(config.forms);

    const ReputationParams& rep = config.reputation;
    if (rep.lambda < 0.0) throw ValidationError("reputation: lambda must be >= 0");
    if (rep.initial_rho < 0.0 || rep.initial_rho > 1.0)
        throw ValidationError("reputation: initial_rho must lie in [0, 1]");
    for (const auto& [id, rho] : rep.initial_overrides) {
        if (!ids.count(id))
            throw ValidationError("reputation.initial_overrides: unknown actor '" + id + "'");
        if (rho < 0.0 || rho > 1.0)
            throw ValidationError("reputation.initial_overrides." + id + ": must lie in [0, 1]");
    }

    const EngineParams& eng = config.engine;
    auto check_strategy = [](const StrategySpec& s, const std::string& ctx) {
        if (s.publish_probability < 0.0 || s.publish_probability > 1.0)
            throw ValidationError(ctx + ".publish_probability must lie in [0, 1]");
    };
    check_strategy(eng.strategy, "engine.strategy");
    for (const auto& [id, s] : eng.strategy_overrides) {
        if (!ids.count(id))
            throw ValidationError("engine.strategy_overrides: unknown actor '" + id + "'");
        check_strategy(s, "engine.strategy_overrides." + id);
    }
    if (eng.belief_publish_prob < 0.0 || eng.belief_publish_prob > 1.0)
        throw ValidationError("engine.belief_publish_prob must lie in [0, 1]");
    if (eng.verification_delay < 0)
        throw ValidationError("engine.verification_delay must be >= 0");
    if (eng.effort_publish < 0.0 || eng.effort_verify < 0.0)
        throw ValidationError("engine: efforts must be >= 0");
    for (const auto& [id, d] : eng.forced_delay) {
        if (!ids.count(id))
            throw ValidationError("engine.forced_delay: unknown actor '" + id + "'");
        if (d < 0) throw ValidationError("engine.forced_delay." + id + ": must be >= 0");
    }

    if (config.horizon < 0) throw ValidationError("scenario: horizon must be >= 0");
    if (!(config.event_rate > 0.0)) throw ValidationError("scenario: event_rate must be > 0");

    for (const Intervention& iv : config.interventions) {
        if (iv.magnitude < 0.0)
            throw ValidationError("interventions: magnitude must be >= 0");
        if (iv.rho_threshold < 0.0 || iv.rho_threshold > 1.0)
            throw ValidationError("interventions: rho_threshold must lie in [0, 1]");
    }

    if (config.edges) {
        for (const auto& [u, v] : *config.edges)
            if (u == v) throw ValidationError("network.edges: self-loop on '" + u + "'");
    }
}

void validate(const ScenarioConfig& config) {
    validate_for_run(config);
    if (config.horizon < 1) throw ValidationError("scenario: horizon must be >= 1");
}

ScenarioConfig parse_scenario(const std::string& text) {
    return parse_scenario_impl(text, std::filesystem::current_path());
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open scenario '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::filesystem::path dir = std::filesystem::path(path).parent_path();
    return parse_scenario_impl(buffer.str(), dir.empty() ? "." : dir);
}

std::string serialize_scenario(const ScenarioConfig& config) {
    json doc;

    json actors = json::array();
    for (const ActorProfile& p : config.actors) {
        actors.push_back({{"id", p.id},
                          {"role", role_name(p.role)},
                          {"alpha", p.alpha},
                          {"beta", p.beta},
                          {"gamma", p.gamma},
                          {"delta", p.delta},
                          {"tau", p.tau},
                          {"eta", p.eta},
                          {"zeta", p.zeta},
                          {"platform_affordance", p.platform_affordance},
                          {"risk_exposure", p.risk_exposure}});
    }
    doc["actors"] = std::move(actors);

    doc["game"] = {{"H", config.game.levels.high},
                   {"M", config.game.levels.medium},
                   {"L", config.game.levels.low},
                   {"B", config.game.levels.baseline},
                   {"canonical", config.game.levels.canonical},
                   {"c_f", config.game.false_report_cost},
                   {"q0", config.game.prior_true},
                   {"delta", config.game.reputation_discount},
                   {"drho_pub_both", config.game.drho_pub_both},
                   {"drho_pub_solo", config.game.drho_pub_solo},
                   {"drho_wait_solo", config.game.drho_wait_solo},
                   {"drho_wait_both_a", config.game.drho_wait_both_a},
                   {"drho_wait_both_b", config.game.drho_wait_both_b}};

    json network = {{"theta0", config.network.theta0}, {"theta1", config.network.theta1},
                    {"theta2", config.network.theta2}, {"kappa", config.network.kappa},
                    {"q_max", config.network.q_max},   {"q0", config.network.q0}};
    if (config.edges) {
        json edges = json::array();
        for (const auto& [u, v] : *config.edges) edges.push_back(json::array({u, v}));
        network["edges"] = std::move(edges);
    }
    doc["network"] = std::move(network);

    doc["virality"] = {{"v0", config.virality.v0},
                       {"decay", config.virality.decay},
                       {"classes", config.virality.classes}};

    doc["forms"] = {{"attention_benefit", form_name(config.forms.attention_benefit)},
                    {"time_cost", form_name(config.forms.time_cost)},
                    {"risk_cost", form_name(config.forms.risk_cost)},
                    {"monetization", form_name(config.forms.monetization)}};

    doc["reputation"] = {
        {"lambda", config.reputation.lambda},
        {"initial_rho", config.reputation.initial_rho},
        {"initial_overrides", json(config.reputation.initial_overrides)},
        {"isolated",
         config.reputation.isolated == IsolatedRule::SelfMean ? "self_mean" : "zero_coupling"}};

    json overrides = json::object();
    for (const auto& [id, s] : config.engine.strategy_overrides)
        overrides[id] = {{"mode", strategy_mode_name(s.mode)},
                         {"publish_probability", s.publish_probability}};
    doc["engine"] = {
        {"strategy",
         {{"mode", strategy_mode_name(config.engine.strategy.mode)},
          {"publish_probability", config.engine.strategy.publish_probability}}},
        {"strategy_overrides", std::move(overrides)},
        {"belief_publish_prob", config.engine.belief_publish_prob},
        {"verification_delay", config.engine.verification_delay},
        {"arrival", config.engine.arrival == ArrivalKind::Fixed ? "fixed" : "poisson"},
        {"effort_publish", config.engine.effort_publish},
        {"effort_verify", config.engine.effort_verify},
        {"forced_delay", json(config.engine.forced_delay)}};

    doc["horizon"] = config.horizon;
    doc["seed"] = config.seed;
    doc["event_rate"] = config.event_rate;

    json interventions = json::array();
    for (const Intervention& iv : config.interventions)
        interventions.push_back({{"kind", intervention_name(iv.kind)},
                                 {"magnitude", iv.magnitude},
                                 {"rho_threshold", iv.rho_threshold}});
    doc["interventions"] = std::move(interventions);

    return doc.dump(2) + "\n";
}

SocialGraph build_graph(const ScenarioConfig& config) {
    SocialGraph g;
    for (const ActorProfile& actor : config.actors) g.add_node(actor.id);
    if (config.edges) {
        for (const auto& [u, v] : *config.edges) g.add_edge(u, v);
    } else {
        for (std::size_t i = 0; i < config.actors.size(); ++i)
            for (std::size_t j = i + 1; j < config.actors.size(); ++j)
                g.add_edge(config.actors[i].id, config.actors[j].id);
    }
    return g;
}

}  // namespace osint
