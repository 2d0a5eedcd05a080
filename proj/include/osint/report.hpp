#pragma once

#include <map>
#include <string>
#include <vector>

#include "osint/engine.hpp"

namespace osint {

/// Trace CSV: fixed column order, numbers rendered with 12 significant
/// digits. Re-running the same (scenario, seed) yields byte-identical output.
std::string trace_to_csv(const SimulationTrace& trace);
void emit_csv(const SimulationTrace& trace, const std::string& path);  // throws IoError

std::string summary_to_json(const RunSummary& summary);
void emit_summary_json(const RunSummary& summary, const std::string& path);

/// Least-squares fit of y = exp(intercept_log - decay * x); requires all
/// y > 0 and at least two points.
struct ExpFit {
    double intercept_log = 0.0;
    double decay = 0.0;
    double r_squared = 0.0;
    int points = 0;
};
ExpFit fit_exponential(const std::vector<double>& x, const std::vector<double>& y);

/// Scatter of per-event total attention against the cumulative event index of
/// the trace's most frequent event class, with the fitted exponential
/// overlaid. Throws ValidationError when no class has at least two events.
void emit_virality_figure(const SimulationTrace& trace, const std::string& path);

/// Actor typology scatter over (platform_affordance, risk_exposure), with
/// markers colored by realized reward and labeled by role.
void emit_heatmap_figure(const std::vector<ActorProfile>& profiles,
                         const std::map<std::string, double>& rewards,
                         const std::string& path);

}  // namespace osint
