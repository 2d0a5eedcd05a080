#include "osint/utility.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "osint/errors.hpp"

namespace osint {

const char* form_name(FormKind k) {
    switch (k) {
        case FormKind::Linear: return "linear";
        case FormKind::Log1p: return "log1p";
        case FormKind::Sqrt: return "sqrt";
        case FormKind::Quadratic: return "quadratic";
    }
    return "linear";
}

FormKind form_from_name(const std::string& name) {
    if (name == "linear") return FormKind::Linear;
    if (name == "log1p") return FormKind::Log1p;
    if (name == "sqrt") return FormKind::Sqrt;
    if (name == "quadratic") return FormKind::Quadratic;
    throw ValidationError("unknown functional form '" + name +
                          "' (expected linear, log1p, sqrt, or quadratic)");
}

double form_value(FormKind k, double x) {
    switch (k) {
        case FormKind::Linear: return x;
        case FormKind::Log1p: return std::log1p(x);
        case FormKind::Sqrt: return std::sqrt(x);
        case FormKind::Quadratic: return x * x;
    }
    return x;
}

double form_deriv(FormKind k, double x) {
    switch (k) {
        case FormKind::Linear: return 1.0;
        case FormKind::Log1p: return 1.0 / (1.0 + x);
        case FormKind::Sqrt: return x > 0.0 ? 0.5 / std::sqrt(x) : 0.0;
        case FormKind::Quadratic: return 2.0 * x;
    }
    return 1.0;
}

void validate(const UtilityForms& forms) {
    // f must be concave and increasing on [0, inf) with f(0) = 0.
    if (forms.attention_benefit == FormKind::Quadratic)
        throw ValidationError("forms: attention benefit must be concave (quadratic is not)");
    // R must be convex; linear and quadratic qualify, the concave forms do not.
    if (forms.risk_cost == FormKind::Sqrt || forms.risk_cost == FormKind::Log1p)
        throw ValidationError("forms: risk cost must be convex");
}

const char* variant_name(UtilityVariant v) {
    switch (v) {
        case UtilityVariant::Base: return "base";
        case UtilityVariant::Reputation: return "reputation";
        case UtilityVariant::Monetized: return "monetized";
        case UtilityVariant::RoleWeighted: return "role_weighted";
    }
    return "base";
}

UtilityVariant variant_from_name(const std::string& name) {
    if (name == "base") return UtilityVariant::Base;
    if (name == "reputation") return UtilityVariant::Reputation;
    if (name == "monetized") return UtilityVariant::Monetized;
    if (name == "role_weighted") return UtilityVariant::RoleWeighted;
    throw ValidationError("unknown utility variant '" + name + "'");
}

namespace {

double cost_terms(const UtilityInputs& in) {
    return in.profile.beta * form_value(in.forms.time_cost, in.effort) +
           in.profile.gamma * form_value(in.forms.risk_cost, in.effort);
}

}  // namespace

double utility_base(const UtilityInputs& in) {
    return in.profile.alpha * form_value(in.forms.attention_benefit, in.attention) -
           cost_terms(in);
}

double utility_reputation(const UtilityInputs& in, double delta, double tau) {
    const double weight = std::pow(in.reputation, tau);
    return in.profile.alpha * weight * form_value(in.forms.attention_benefit, in.attention) -
           cost_terms(in) + delta * in.drho;
}

double utility_monetized(const UtilityInputs& in) {
    return utility_base(in) +
           in.profile.delta * form_value(in.forms.monetization, in.attention);
}

double utility_value(UtilityVariant v, const UtilityInputs& in) {
    switch (v) {
        case UtilityVariant::Base: return utility_base(in);
        case UtilityVariant::Reputation:
            return utility_reputation(in, in.profile.delta, in.profile.tau);
        case UtilityVariant::Monetized:
        case UtilityVariant::RoleWeighted: return utility_monetized(in);
    }
    return utility_base(in);
}

double utility_deriv_effort(UtilityVariant v, const UtilityInputs& in, double dA_dE) {
    const double df = form_deriv(in.forms.attention_benefit, in.attention) * dA_dE;
    const double dcost = in.profile.beta * form_deriv(in.forms.time_cost, in.effort) +
                         in.profile.gamma * form_deriv(in.forms.risk_cost, in.effort);
    switch (v) {
        case UtilityVariant::Base: return in.profile.alpha * df - dcost;
        case UtilityVariant::Reputation:
            return in.profile.alpha * std::pow(in.reputation, in.profile.tau) * df - dcost;
        case UtilityVariant::Monetized:
        case UtilityVariant::RoleWeighted:
            return in.profile.alpha * df +
                   in.profile.delta * form_deriv(in.forms.monetization, in.attention) * dA_dE -
                   dcost;
    }
    return 0.0;
}

double numeric_gradient(const std::function<double(double)>& u, double at, double h) {
    if (!(h > 0.0)) throw ValidationError("numeric_gradient: step must be positive");
    return (u(at + h) - u(at - h)) / (2.0 * h);
}

EffortOptimum optimize_effort(const ActorProfile& profile,
                              const std::function<double(double)>& attention_of_effort,
                              double effort_lo, double effort_hi,
                              const UtilityForms& forms, UtilityVariant variant,
                              double reputation, double drho) {
    if (!(effort_lo >= 0.0) || !(effort_hi >= effort_lo) || !std::isfinite(effort_lo) ||
        !std::isfinite(effort_hi))
        throw ValidationError("optimize_effort: invalid bounds");

    UtilityInputs in;
    in.profile = profile;
    in.forms = forms;
    in.reputation = reputation;
    in.drho = drho;
    auto objective = [&](double effort) {
        in.effort = effort;
        in.attention = attention_of_effort(effort);
        return utility_value(variant, in);
    };

    if (effort_hi == effort_lo) return {effort_lo, objective(effort_lo)};

    // Coarse scan to bracket the global maximum; golden-section search alone
    // assumes unimodality the configured forms do not guarantee.
    constexpr int kScanPoints = 512;
    double best_x = effort_lo;
    double best_u = objective(effort_lo);
    for (int i = 1; i <= kScanPoints; ++i) {
        const double x = effort_lo + (effort_hi - effort_lo) * i / kScanPoints;
        const double u = objective(x);
        if (u > best_u) {
            best_u = u;
            best_x = x;
        }
    }
    const double cell = (effort_hi - effort_lo) / kScanPoints;
    double a = std::max(effort_lo, best_x - cell);
    double b = std::min(effort_hi, best_x + cell);

    constexpr double kGolden = 0.6180339887498949;  // 1/phi
    constexpr double kTol = 1e-8;
    double c = b - kGolden * (b - a);
    double d = a + kGolden * (b - a);
    double uc = objective(c);
    double ud = objective(d);
    while (b - a > kTol) {
        if (uc > ud) {
            b = d;
            d = c;
            ud = uc;
            c = b - kGolden * (b - a);
            uc = objective(c);
        } else {
            a = c;
            c = d;
            uc = ud;
            d = a + kGolden * (b - a);
            ud = objective(d);
        }
    }
    const double mid = 0.5 * (a + b);
    const double umid = objective(mid);
    if (umid >= best_u) return {mid, umid};
    return {best_x, best_u};
}

}  // namespace osint
