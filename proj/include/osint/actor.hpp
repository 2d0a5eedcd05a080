#pragma once

#include <string>

namespace osint {

enum class Role { FrontlineSoldier, RemoteAnalyst, Aggregator };

const char* role_name(Role role);
Role role_from_name(const std::string& name);  // throws ValidationError

/// One OSINT actor's preference and exposure parameters. All weights are
/// dimensionless on a common utility scale.
struct ActorProfile {
    std::string id;
    Role role = Role::RemoteAnalyst;
    double alpha = 1.0;  // symbolic-attention weight
    double beta = 0.5;   // time-cost weight
    double gamma = 0.2;  // risk-cost weight
    double delta = 0.3;  // monetization weight
    double tau = 1.8;    // reputation elasticity, must exceed 1
    double eta = 1.0;    // accuracy reward rate
    double zeta = 1.0;   // error penalty rate
    double platform_affordance = 6.0;  // 0-10 scale (monetization, reach)
    double risk_exposure = 4.0;        // 0-10 scale (operational exposure)

    bool operator==(const ActorProfile&) const = default;
};

/// Preset for a role. Places the actor at the role's typology coordinates and
/// derives the risk and monetization weights affinely from them:
/// gamma = 0.05 * risk_exposure, delta = 0.05 * platform_affordance.
ActorProfile default_profile(Role role);

void validate_profile(const ActorProfile& p);  // throws ValidationError

}  // namespace osint
