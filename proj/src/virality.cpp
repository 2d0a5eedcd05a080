#include "osint/virality.hpp"

#include <cmath>

#include "osint/errors.hpp"

namespace osint {

void validate(const ViralityParams& p) {
    if (!(p.v0 > 0.0)) throw ValidationError("virality: v0 must be > 0");
    if (p.decay < 0.0) throw ValidationError("virality: decay must be >= 0");
    if (p.classes.empty()) throw ValidationError("virality: at least one event class required");
}

double novelty_value(int class_count, const ViralityParams& p) {
    return p.v0 * std::exp(-p.decay * class_count);
}

EventClassCounter::EventClassCounter(const std::vector<std::string>& classes) {
    for (const auto& c : classes) register_class(c);
}

void EventClassCounter::register_class(const std::string& event_class) {
    counts_.emplace(event_class, 0);
}

bool EventClassCounter::known(const std::string& event_class) const {
    return counts_.count(event_class) > 0;
}

int EventClassCounter::count(const std::string& event_class) const {
    auto it = counts_.find(event_class);
    if (it == counts_.end())
        throw ValidationError("virality: unknown event class '" + event_class + "'");
    return it->second;
}

int EventClassCounter::record(const std::string& event_class) {
    auto it = counts_.find(event_class);
    if (it == counts_.end())
        throw ValidationError("virality: unknown event class '" + event_class + "'");
    return it->second++;
}

}  // namespace osint
