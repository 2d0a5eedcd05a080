#include "osint/engine.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "osint/errors.hpp"
#include "osint/virality.hpp"

namespace osint {

namespace {

Strategy dominant_or_pure(const EquilibriumResult& game) {
    if (game.dominant_a) return *game.dominant_a;
    // pure_nash enumerates in publish-first lexicographic order already.
    if (!game.pure.empty()) return game.pure.front().first;
    return Strategy::Publish;
}

}  // namespace

Strategy choose_action(const ActorProfile& actor, const StrategySpec& strategy,
                       const DecisionContext& ctx, Rng& decisions_rng) {
    // One draw per decision in every mode keeps paired runs aligned when only
    // the strategy rule differs.
    const double u = decisions_rng.uniform01();
    switch (strategy.mode) {
        case StrategyMode::FixedProbability:
            return u < strategy.publish_probability ? Strategy::Publish : Strategy::Wait;
        case StrategyMode::MixedIndifference:
            if (ctx.game->mixed) {
                const double p_publish = ctx.game->mixed->first;  // row-player view
                return u < p_publish ? Strategy::Publish : Strategy::Wait;
            }
            return dominant_or_pure(*ctx.game);
        case StrategyMode::DominantOrPure:
            return dominant_or_pure(*ctx.game);
        case StrategyMode::UtilityBestResponse: {
            const Matrix2x2& m = ctx.game->matrix;
            const double belief = ctx.belief_publish_prob;
            auto effort_cost = [&](double effort) {
                return ctx.effective_beta * form_value(ctx.forms.time_cost, effort) +
                       actor.gamma * form_value(ctx.forms.risk_cost, effort);
            };
            const double eu_publish =
                belief * m.at(Strategy::Publish, Strategy::Publish).a +
                (1.0 - belief) * m.at(Strategy::Publish, Strategy::Wait).a -
                effort_cost(ctx.effort_publish);
            const double eu_wait = belief * m.at(Strategy::Wait, Strategy::Publish).a +
                                   (1.0 - belief) * m.at(Strategy::Wait, Strategy::Wait).a -
                                   effort_cost(ctx.effort_verify);
            return eu_publish >= eu_wait ? Strategy::Publish : Strategy::Wait;
        }
    }
    return Strategy::Publish;
}

void apply_intervention(EngineState& state, const Intervention& iv,
                        const std::vector<std::string>& actor_order,
                        Rng& interventions_rng) {
    const double magnitude = std::min(iv.magnitude, 1.0);
    switch (iv.kind) {
        case InterventionKind::VerificationSubsidy:
            for (const std::string& id : actor_order)
                if (state.rho.at(id) >= iv.rho_threshold)
                    state.beta_effective.at(id) *= (1.0 - magnitude);
            break;
        case InterventionKind::ReputationBanking:
            for (const std::string& id : actor_order)
                state.attention_weight.at(id) *= (1.0 + iv.magnitude * state.rho.at(id));
            break;
        case InterventionKind::NetworkGovernance: {
            const bool fire = interventions_rng.uniform01() < magnitude;
            if (!fire || !state.graph || state.graph->node_count() < 2) break;
            // Rank actors by current closeness; connect the most central to
            // the most peripheral pair not already adjacent.
            std::vector<std::pair<double, int>> ranked;
            for (const std::string& id : actor_order) {
                const int idx = state.graph->index_of(id);
                if (idx >= 0) ranked.emplace_back(closeness(*state.graph, idx), idx);
            }
            if (ranked.size() < 2) break;
            std::vector<std::pair<double, int>> by_high = ranked;
            std::stable_sort(by_high.begin(), by_high.end(),
                             [](const auto& a, const auto& b) { return a.first > b.first; });
            std::vector<std::pair<double, int>> by_low = ranked;
            std::stable_sort(by_low.begin(), by_low.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            for (const auto& [ch, hub] : by_high) {
                for (const auto& [cl, periph] : by_low) {
                    if (hub == periph || state.graph->has_edge(hub, periph)) continue;
                    state.graph->add_edge(hub, periph);
                    return;
                }
            }
            break;
        }
    }
}

double gini(const std::vector<double>& values) {
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    double total = 0.0;
    for (double v : values) total += v;
    if (total <= 0.0) return 0.0;
    double abs_diff_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) abs_diff_sum += std::abs(values[i] - values[j]);
    return abs_diff_sum / (2.0 * static_cast<double>(n) * total);
}

RunSummary aggregate_metrics(const std::vector<TraceRow>& rows, const ScenarioConfig& config,
                             const std::map<std::string, double>& final_rho) {
    RunSummary summary;
    summary.horizon = config.horizon;

    std::map<std::string, ActorSummary> per_actor;
    std::map<std::string, int> money_counted_step;
    for (const ActorProfile& actor : config.actors) {
        ActorSummary s;
        s.id = actor.id;
        s.role = actor.role;
        auto it = final_rho.find(actor.id);
        s.final_rho = it != final_rho.end() ? it->second : config.reputation.initial_rho;
        per_actor[actor.id] = s;
        money_counted_step[actor.id] = -1;
    }

    std::set<int> event_ids;
    int verified = 0;
    int misinformation = 0;
    for (const TraceRow& row : rows) {
        event_ids.insert(row.event_id);
        ActorSummary& s = per_actor.at(row.actor);
        s.total_attention += row.alloc_attention;
        s.penalty += row.penalty;
        s.publications += 1;
        s.verified_publications += row.verified ? 1 : 0;
        s.misinformation += row.error;
        verified += row.verified ? 1 : 0;
        misinformation += row.error;
        // money is a step-level value repeated per event row; count it once
        int& counted = money_counted_step.at(row.actor);
        if (counted != row.step) {
            s.money += row.money;
            counted = row.step;
        }
    }

    summary.events = static_cast<int>(event_ids.size());
    summary.publications = static_cast<int>(rows.size());
    if (!rows.empty()) {
        summary.verified_fraction = static_cast<double>(verified) / rows.size();
        summary.misinformation_rate = static_cast<double>(misinformation) / rows.size();
    }

    std::vector<double> attention_totals;
    for (const ActorProfile& actor : config.actors) {
        ActorSummary& s = per_actor.at(actor.id);
        s.reward = s.total_attention + s.money - s.penalty;
        summary.total_attention += s.total_attention;
        attention_totals.push_back(s.total_attention);
    }
    summary.attention_gini = gini(attention_totals);
    for (const ActorProfile& actor : config.actors) {
        ActorSummary& s = per_actor.at(actor.id);
        s.attention_share =
            summary.total_attention > 0.0 ? s.total_attention / summary.total_attention : 0.0;
        summary.actors.push_back(s);
    }
    return summary;
}

SimulationTrace run(const ScenarioConfig& config) {
    validate_for_run(config);

    SocialGraph graph = build_graph(config);
    const EquilibriumResult game = analyze_game(config.game);
    RngStreams streams = RngStreams::from_seed(config.seed);

    std::vector<std::string> actor_order;
    for (const ActorProfile& actor : config.actors) actor_order.push_back(actor.id);

    ReputationLedger ledger(&graph, config.reputation.lambda, config.reputation.isolated);
    for (const ActorProfile& actor : config.actors) {
        auto it = config.reputation.initial_overrides.find(actor.id);
        ledger.set(actor.id,
                   it != config.reputation.initial_overrides.end() ? it->second
                                                                   : config.reputation.initial_rho);
    }

    EventClassCounter counter(config.virality.classes);
    const int classes = static_cast<int>(config.virality.classes.size());

    SimulationTrace trace;
    int next_event_id = 0;

    for (int step = 0; step < config.horizon; ++step) {
        // Interventions act on the current step from current reputation.
        EngineState state;
        state.graph = &graph;
        for (const ActorProfile& actor : config.actors) {
            state.rho[actor.id] = ledger.get(actor.id);
            state.beta_effective[actor.id] = actor.beta;
            state.attention_weight[actor.id] = 1.0;
        }
        for (const Intervention& iv : config.interventions)
            apply_intervention(state, iv, actor_order, streams.interventions);

        // Event arrivals; the fixed arrival mode consumes no randomness.
        int arrivals = 0;
        if (config.engine.arrival == ArrivalKind::Fixed)
            arrivals = static_cast<int>(std::llround(config.event_rate));
        else
            arrivals = streams.events.poisson(config.event_rate);

        std::vector<Event> events;
        for (int k = 0; k < arrivals; ++k) {
            Event ev;
            ev.id = next_event_id++;
            ev.event_class = config.virality.classes[streams.events.uniform_int(classes)];
            ev.step_born = step;
            ev.true_info = streams.events.bernoulli(config.game.prior_true);
            events.push_back(ev);
        }

        // Per-step network position, recomputed because governance may rewire.
        const bool has_paths = graph.node_count() >= 2;
        std::map<std::string, double> g_value;
        for (const ActorProfile& actor : config.actors) {
            const int idx = graph.index_of(actor.id);
            const double c = has_paths ? closeness(graph, idx) : 0.0;
            g_value[actor.id] = degree_effect(graph.degree(idx), c, config.network);
        }

        std::map<std::string, double> step_attention;
        std::map<std::string, double> step_accuracy;
        std::map<std::string, double> step_errors;
        for (const std::string& id : actor_order) {
            step_attention[id] = 0.0;
            step_accuracy[id] = 0.0;
            step_errors[id] = 0.0;
        }

        const std::size_t rows_before = trace.rows.size();
        for (const Event& ev : events) {
            const int prior_count = counter.record(ev.event_class);
            const double novelty = novelty_value(prior_count, config.virality);
            const double pool = novelty;

            std::vector<Decision> decisions;
            std::vector<double> raw(config.actors.size(), 0.0);
            for (std::size_t i = 0; i < config.actors.size(); ++i) {
                const ActorProfile& actor = config.actors[i];
                auto ov = config.engine.strategy_overrides.find(actor.id);
                const StrategySpec& strategy = ov != config.engine.strategy_overrides.end()
                                                   ? ov->second
                                                   : config.engine.strategy;
                DecisionContext ctx;
                ctx.game = &game;
                ctx.belief_publish_prob = config.engine.belief_publish_prob;
                ctx.effective_beta = state.beta_effective.at(actor.id);
                ctx.effort_publish = config.engine.effort_publish;
                ctx.effort_verify = config.engine.effort_verify;
                ctx.forms = config.forms;

                Decision d;
                d.actor = actor.id;
                d.event_id = ev.id;
                d.action = choose_action(actor, strategy, ctx, streams.decisions);
                d.verified = d.action == Strategy::Wait;
                int delay = d.verified ? config.engine.verification_delay : 0;
                auto fd = config.engine.forced_delay.find(actor.id);
                if (fd != config.engine.forced_delay.end()) delay += fd->second;
                d.publish_step = ev.step_born + delay;
                decisions.push_back(d);

                raw[i] = attention(g_value.at(actor.id), d.verified,
                                   static_cast<double>(delay), config.network) *
                         state.attention_weight.at(actor.id);
            }

            const std::vector<double> alloc = split_attention(raw, pool);

            for (std::size_t i = 0; i < config.actors.size(); ++i) {
                const ActorProfile& actor = config.actors[i];
                const Decision& d = decisions[i];
                TraceRow row;
                row.step = step;
                row.event_id = ev.id;
                row.event_class = ev.event_class;
                row.class_count = prior_count;
                row.novelty = novelty;
                row.actor = actor.id;
                row.action = d.action;
                row.publish_step = d.publish_step;
                row.verified = d.verified;
                row.true_info = ev.true_info;
                row.raw_attention = raw[i];
                row.alloc_attention = alloc[i];
                row.accurate = (d.verified || ev.true_info) ? 1 : 0;
                row.error = (!d.verified && !ev.true_info) ? 1 : 0;
                row.penalty = row.error ? config.game.false_report_cost : 0.0;
                trace.rows.push_back(row);

                step_attention[actor.id] += alloc[i];
                step_accuracy[actor.id] += row.accurate;
                step_errors[actor.id] += row.error;
            }
        }

        std::map<std::string, double> drho_map;
        std::map<std::string, double> money_step;
        for (const ActorProfile& actor : config.actors) {
            drho_map[actor.id] = delta_rho(actor.eta, step_accuracy.at(actor.id), actor.zeta,
                                           step_errors.at(actor.id));
            money_step[actor.id] =
                actor.delta * form_value(config.forms.monetization, step_attention.at(actor.id));
        }
        ledger.step_all(drho_map);

        for (std::size_t r = rows_before; r < trace.rows.size(); ++r) {
            TraceRow& row = trace.rows[r];
            row.drho = drho_map.at(row.actor);
            row.rho = ledger.get(row.actor);
            row.money = money_step.at(row.actor);
        }
    }

    trace.summary = aggregate_metrics(trace.rows, config, ledger.values());
    return trace;
}

}  // namespace osint
