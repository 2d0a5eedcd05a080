#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osint/actor.hpp"
#include "osint/game.hpp"
#include "osint/network.hpp"
#include "osint/reputation.hpp"
#include "osint/utility.hpp"
#include "osint/virality.hpp"

namespace osint {

enum class InterventionKind { VerificationSubsidy, ReputationBanking, NetworkGovernance };

const char* intervention_name(InterventionKind k);
InterventionKind intervention_from_name(const std::string& name);

/// One policy lever. VerificationSubsidy scales effective time-cost weights
/// down by `magnitude` for actors at or above `rho_threshold`;
/// ReputationBanking multiplies raw attention weights by (1 + magnitude*rho);
/// NetworkGovernance adds, with probability `magnitude` per step, an edge
/// between the highest- and lowest-closeness unconnected actors.
struct Intervention {
    InterventionKind kind = InterventionKind::VerificationSubsidy;
    double magnitude = 0.0;
    double rho_threshold = 0.0;

    bool operator==(const Intervention&) const = default;
};

enum class StrategyMode { DominantOrPure, MixedIndifference, UtilityBestResponse, FixedProbability };

const char* strategy_mode_name(StrategyMode m);
StrategyMode strategy_mode_from_name(const std::string& name);

struct StrategySpec {
    StrategyMode mode = StrategyMode::DominantOrPure;
    double publish_probability = 0.5;  // FixedProbability only

    bool operator==(const StrategySpec&) const = default;
};

enum class ArrivalKind { Fixed, Poisson };

/// Engine knobs that are not part of the economic model proper.
struct EngineParams {
    StrategySpec strategy;
    std::map<std::string, StrategySpec> strategy_overrides;  // per actor id
    double belief_publish_prob = 0.5;  // opponent model for utility best response
    int verification_delay = 1;        // steps a waiter defers publication
    ArrivalKind arrival = ArrivalKind::Fixed;
    double effort_publish = 0.0;  // effort charged to an immediate publish
    double effort_verify = 1.0;   // effort charged to a verified publish
    std::map<std::string, int> forced_delay;  // extra publication delay per actor

    bool operator==(const EngineParams&) const = default;
};

struct ReputationParams {
    double lambda = 0.1;
    double initial_rho = 0.5;
    std::map<std::string, double> initial_overrides;
    IsolatedRule isolated = IsolatedRule::SelfMean;

    bool operator==(const ReputationParams&) const = default;
};

/// Fully-resolved scenario. Immutable after load; safe to share read-only
/// across concurrently running simulations.
struct ScenarioConfig {
    std::vector<ActorProfile> actors;
    PayoffSpec game;
    NetworkParams network;
    ViralityParams virality;
    UtilityForms forms;
    ReputationParams reputation;
    EngineParams engine;
    /// Social graph edges; absent means a complete graph over the actors.
    std::optional<std::vector<std::pair<std::string, std::string>>> edges;
    int horizon = 10;
    std::uint64_t seed = 12345;
    double event_rate = 1.0;  // expected events per step
    std::vector<Intervention> interventions;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Full validation as applied to scenario files (horizon >= 1 included).
void validate(const ScenarioConfig& config);
/// The subset of checks the engine needs; permits horizon 0 (an empty run).
void validate_for_run(const ScenarioConfig& config);

/// Parses a scenario document (JSON, nested sections mirroring the type
/// tree). Unknown keys are errors. Omitted sections and fields take the
/// documented defaults; when the document omits `seed`, the OSINTSIM_SEED
/// environment variable (when set) overrides the built-in default.
ScenarioConfig parse_scenario(const std::string& text);

/// Reads and parses a scenario file. A `network.edge_file` reference is
/// resolved relative to the scenario file's directory and inlined, so the
/// returned config is self-contained.
ScenarioConfig load_scenario(const std::string& path);

/// Serializes the fully-resolved config; parse_scenario(serialize(c)) == c.
std::string serialize_scenario(const ScenarioConfig& config);

/// The scenario's social graph: configured edges, or a complete graph over
/// the actors when no edges were given. Every actor is present as a node.
SocialGraph build_graph(const ScenarioConfig& config);

}  // namespace osint
