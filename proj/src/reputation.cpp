#include "osint/reputation.hpp"

#include <algorithm>

#include "osint/errors.hpp"

namespace osint {

double delta_rho(double eta, double accuracy, double zeta, double errors) {
    return eta * accuracy - zeta * errors;
}

namespace {
double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }
}  // namespace

ReputationLedger::ReputationLedger(const SocialGraph* graph, double lambda,
                                   IsolatedRule isolated)
    : graph_(graph), lambda_(lambda), isolated_(isolated) {
    if (lambda < 0.0) throw ValidationError("reputation: lambda must be >= 0");
}

void ReputationLedger::set(const std::string& actor, double rho) {
    rho_[actor] = clamp01(rho);
}

double ReputationLedger::get(const std::string& actor) const {
    auto it = rho_.find(actor);
    if (it == rho_.end()) throw ValidationError("reputation: unknown actor '" + actor + "'");
    return it->second;
}

bool ReputationLedger::has(const std::string& actor) const {
    return rho_.count(actor) > 0;
}

double ReputationLedger::neighbor_mean(const std::string& actor) const {
    const double own = get(actor);
    const int idx = graph_ ? graph_->index_of(actor) : -1;
    double sum = 0.0;
    int count = 0;
    if (idx >= 0) {
        for (int nbr : graph_->neighbors(idx)) {
            auto it = rho_.find(graph_->id_of(nbr));
            if (it != rho_.end()) {
                sum += it->second;
                ++count;
            }
        }
    }
    if (count == 0) return isolated_ == IsolatedRule::SelfMean ? own : 0.0;
    return sum / count;
}

double ReputationLedger::update(const std::string& actor, double drho) {
    const double next = clamp01(get(actor) + lambda_ * neighbor_mean(actor) * drho);
    rho_[actor] = next;
    return next;
}

void ReputationLedger::step_all(const std::map<std::string, double>& drho_map) {
    // Neighbor means from the pre-step snapshot, then one synchronous write.
    std::map<std::string, double> next;
    for (const auto& [actor, rho] : rho_) {
        auto it = drho_map.find(actor);
        if (it == drho_map.end())
            throw ValidationError("reputation: step_all missing drho for '" + actor + "'");
        next[actor] = clamp01(rho + lambda_ * neighbor_mean(actor) * it->second);
    }
    rho_ = std::move(next);
}

}  // namespace osint
