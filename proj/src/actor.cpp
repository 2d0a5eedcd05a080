#include "osint/actor.hpp"

#include "osint/errors.hpp"

namespace osint {

const char* role_name(Role role) {
    switch (role) {
        case Role::FrontlineSoldier: return "frontline_soldier";
        case Role::RemoteAnalyst: return "remote_analyst";
        case Role::Aggregator: return "aggregator";
    }
    return "remote_analyst";
}

Role role_from_name(const std::string& name) {
    if (name == "frontline_soldier") return Role::FrontlineSoldier;
    if (name == "remote_analyst") return Role::RemoteAnalyst;
    if (name == "aggregator") return Role::Aggregator;
    throw ValidationError("unknown role '" + name +
                          "' (expected frontline_soldier, remote_analyst, or aggregator)");
}

ActorProfile default_profile(Role role) {
    ActorProfile p;
    p.id = role_name(role);
    p.role = role;
    switch (role) {
        case Role::FrontlineSoldier:
            p.platform_affordance = 2.0;
            p.risk_exposure = 9.0;
            break;
        case Role::RemoteAnalyst:
            p.platform_affordance = 6.0;
            p.risk_exposure = 4.0;
            break;
        case Role::Aggregator:
            p.platform_affordance = 8.0;
            p.risk_exposure = 2.0;
            break;
    }
    p.gamma = 0.05 * p.risk_exposure;
    p.delta = 0.05 * p.platform_affordance;
    return p;
}

void validate_profile(const ActorProfile& p) {
    const std::string who = "actor '" + p.id + "': ";
    if (p.id.empty()) throw ValidationError("actor id must be non-empty");
    if (p.alpha < 0) throw ValidationError(who + "alpha must be >= 0");
    if (p.beta < 0) throw ValidationError(who + "beta must be >= 0");
    if (p.gamma < 0) throw ValidationError(who + "gamma must be >= 0");
    if (p.delta < 0) throw ValidationError(who + "delta must be >= 0");
    if (p.eta < 0) throw ValidationError(who + "eta must be >= 0");
    if (p.zeta < 0) throw ValidationError(who + "zeta must be >= 0");
    if (!(p.tau > 1.0)) throw ValidationError(who + "tau must exceed 1");
    if (p.platform_affordance < 0 || p.platform_affordance > 10)
        throw ValidationError(who + "platform_affordance must lie in [0, 10]");
    if (p.risk_exposure < 0 || p.risk_exposure > 10)
        throw ValidationError(who + "risk_exposure must lie in [0, 10]");
}

}  // namespace osint
