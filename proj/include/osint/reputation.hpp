#pragma once

#include <map>
#include <string>

#include "osint/network.hpp"

namespace osint {

/// Neighbor-mean rule for actors with an empty verification neighborhood:
/// either the actor's own reputation stands in for the mean, or the coupling
/// term is dropped entirely.
enum class IsolatedRule { SelfMean, ZeroCoupling };

/// eta * accuracy - zeta * errors; may be negative.
double delta_rho(double eta, double accuracy, double zeta, double errors);

/// Per-actor reputation stock on the [0, 1] scale, evolving as
///   rho' = clamp(rho + lambda * mean(neighbor rho) * drho)
/// with the neighbor mean taken over the verification network. Batch updates
/// are synchronous: all means are computed from the pre-step snapshot.
class ReputationLedger {
public:
    ReputationLedger(const SocialGraph* graph, double lambda,
                     IsolatedRule isolated = IsolatedRule::SelfMean);

    void set(const std::string& actor, double rho);  // clamps into [0, 1]
    double get(const std::string& actor) const;      // throws on unknown actor
    bool has(const std::string& actor) const;

    /// Mean reputation over the actor's graph neighbors that are themselves
    /// tracked in the ledger; falls back to the isolated rule otherwise.
    double neighbor_mean(const std::string& actor) const;

    /// Single-actor update; returns the new clamped value.
    double update(const std::string& actor, double drho);

    /// Synchronous batch update. drho_map must cover all tracked actors.
    void step_all(const std::map<std::string, double>& drho_map);

    const std::map<std::string, double>& values() const { return rho_; }
    double lambda() const { return lambda_; }

private:
    const SocialGraph* graph_;
    double lambda_;
    IsolatedRule isolated_;
    std::map<std::string, double> rho_;
};

}  // namespace osint
