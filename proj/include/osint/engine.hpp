#pragma once

#include <map>
#include <string>
#include <vector>

#include "osint/game.hpp"
#include "osint/rng.hpp"
#include "osint/scenario.hpp"

namespace osint {

struct Event {
    int id = 0;
    std::string event_class;
    int step_born = 0;
    bool true_info = true;  // drawn with probability q0 (the game prior)
};

struct Decision {
    std::string actor;
    int event_id = 0;
    Strategy action = Strategy::Publish;
    int publish_step = 0;  // waiters defer by the verification delay
    bool verified = false;  // true iff the actor waited
};

/// One row per (step, actor, event). The step-level fields (drho, rho, money)
/// are repeated across an actor's rows within the same step.
struct TraceRow {
    int step = 0;
    int event_id = 0;
    std::string event_class;
    int class_count = 0;  // prior same-class events; prices this event's novelty
    double novelty = 0.0;
    std::string actor;
    Strategy action = Strategy::Publish;
    int publish_step = 0;
    bool verified = false;
    bool true_info = true;
    double raw_attention = 0.0;
    double alloc_attention = 0.0;
    int accurate = 0;  // 1 when the publication turned out accurate
    int error = 0;     // 1 when unverified and the information was false
    double penalty = 0.0;  // realized false-reporting cost this row
    double drho = 0.0;  // step-level
    double rho = 0.0;   // step-level, post-update
    double money = 0.0;  // step-level accrual delta * M(step attention)
};

struct ActorSummary {
    std::string id;
    Role role = Role::RemoteAnalyst;
    double total_attention = 0.0;
    double attention_share = 0.0;
    double money = 0.0;
    double penalty = 0.0;
    int publications = 0;
    int verified_publications = 0;
    int misinformation = 0;
    double final_rho = 0.5;
    double reward = 0.0;  // total_attention + money - penalty
};

struct RunSummary {
    int horizon = 0;
    int events = 0;
    int publications = 0;
    double verified_fraction = 0.0;
    double misinformation_rate = 0.0;
    double attention_gini = 0.0;
    double total_attention = 0.0;
    std::vector<ActorSummary> actors;
};

/// Deterministic given (scenario, seed): identical inputs produce
/// byte-identical trace CSV.
struct SimulationTrace {
    std::vector<TraceRow> rows;
    RunSummary summary;
};

/// Inputs a single publish/wait decision depends on.
struct DecisionContext {
    const EquilibriumResult* game = nullptr;
    double belief_publish_prob = 0.5;
    double effective_beta = 0.5;  // after any verification subsidy
    double effort_publish = 0.0;
    double effort_verify = 1.0;
    UtilityForms forms;
};

/// One actor's publish/wait choice. DominantOrPure plays a dominant strategy
/// when one exists, else its side of the first pure equilibrium in
/// publish-first lexicographic order; MixedIndifference samples the interior
/// solution when it exists and falls back to DominantOrPure; UtilityBestResponse
/// compares expected payoffs net of effort costs under the actor's beliefs;
/// FixedProbability publishes with the configured probability. Exactly one
/// decision draw is consumed per call in every mode, so runs stay aligned
/// across strategy changes.
Strategy choose_action(const ActorProfile& actor, const StrategySpec& strategy,
                       const DecisionContext& ctx, Rng& decisions_rng);

/// The per-step quantities interventions act on.
struct EngineState {
    SocialGraph* graph = nullptr;
    std::map<std::string, double> rho;
    std::map<std::string, double> beta_effective;    // starts at each actor's beta
    std::map<std::string, double> attention_weight;  // starts at 1
};

/// Applies one intervention in place. NetworkGovernance draws from the
/// interventions stream; the other levers are deterministic.
void apply_intervention(EngineState& state, const Intervention& iv,
                        const std::vector<std::string>& actor_order,
                        Rng& interventions_rng);

/// Gini coefficient of a nonnegative distribution; 0 for an empty or all-zero
/// input.
double gini(const std::vector<double>& values);

/// Recomputes the run summary from trace rows (used both by run() and as a
/// consistency oracle in tests).
RunSummary aggregate_metrics(const std::vector<TraceRow>& rows,
                             const ScenarioConfig& config,
                             const std::map<std::string, double>& final_rho);

SimulationTrace run(const ScenarioConfig& config);

}  // namespace osint
