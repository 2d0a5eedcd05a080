#pragma once

#include <map>
#include <string>
#include <vector>

namespace osint {

/// Novelty-saturation parameters: per-item attention decays exponentially in
/// the cumulative count of prior same-class events.
struct ViralityParams {
    double v0 = 3.5;     // initial views-per-item scale
    double decay = 0.4;  // saturation rate per cumulative event
    std::vector<std::string> classes{"event"};

    bool operator==(const ViralityParams&) const = default;
};

void validate(const ViralityParams& p);  // throws ValidationError

/// v0 * exp(-decay * class_count), where class_count is the number of prior
/// events of the same class.
double novelty_value(int class_count, const ViralityParams& p);

/// Cumulative per-class event counts; counts never reset within a run. A
/// class first seen mid-run simply starts from zero, which is how a novel
/// event class regains full novelty.
class EventClassCounter {
public:
    explicit EventClassCounter(const std::vector<std::string>& classes);

    void register_class(const std::string& event_class);
    bool known(const std::string& event_class) const;
    int count(const std::string& event_class) const;  // throws on unknown class

    /// Increments the class count and returns the prior count (the n that
    /// prices this event's novelty).
    int record(const std::string& event_class);

private:
    std::map<std::string, int> counts_;
};

}  // namespace osint
