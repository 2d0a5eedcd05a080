#pragma once

#include <functional>
#include <string>

#include "osint/actor.hpp"

namespace osint {

/// Functional forms for the abstract pieces of the utility model. Shape
/// requirements: the attention benefit must be concave and increasing with
/// f(0) = 0, time and risk costs increasing with value 0 at 0, and the risk
/// cost convex.
enum class FormKind { Linear, Log1p, Sqrt, Quadratic };

const char* form_name(FormKind k);
FormKind form_from_name(const std::string& name);  // throws ValidationError

double form_value(FormKind k, double x);
double form_deriv(FormKind k, double x);

struct UtilityForms {
    FormKind attention_benefit = FormKind::Log1p;  // f
    FormKind time_cost = FormKind::Linear;         // T
    FormKind risk_cost = FormKind::Quadratic;      // R
    FormKind monetization = FormKind::Linear;      // M

    bool operator==(const UtilityForms&) const = default;
};

void validate(const UtilityForms& forms);  // enforces the shape requirements

struct UtilityInputs {
    double attention = 0.0;   // A >= 0 (views/followers aggregate)
    double effort = 0.0;      // E >= 0
    double reputation = 1.0;  // rho in [0, 1]
    double drho = 0.0;        // reputation change this period
    ActorProfile profile;
    UtilityForms forms;
};

/// The four variants of the model:
///   Base          alpha*f(A) - beta*T(E) - gamma*R(E)
///   Reputation    alpha*rho^tau*f(A) - beta*T(E) - gamma*R(E) + delta*drho
///   Monetized     alpha*f(A) + delta*M(A) - beta*T(E) - gamma*R(E)
///   RoleWeighted  the monetized form with role-specific beta/gamma; the
///                 asymmetry enters entirely through the actor profile
enum class UtilityVariant { Base, Reputation, Monetized, RoleWeighted };

const char* variant_name(UtilityVariant v);
UtilityVariant variant_from_name(const std::string& name);

double utility_base(const UtilityInputs& in);
double utility_reputation(const UtilityInputs& in, double delta, double tau);
double utility_monetized(const UtilityInputs& in);
double utility_value(UtilityVariant v, const UtilityInputs& in);

/// dU/dE when attention is a function of effort with local slope dA_dE;
/// in.attention must hold A(E) and in.effort the evaluation point.
double utility_deriv_effort(UtilityVariant v, const UtilityInputs& in, double dA_dE);

struct EffortOptimum {
    double effort = 0.0;
    double utility = 0.0;
};

/// Maximizes the configured utility over [effort_lo, effort_hi] to an
/// absolute tolerance of 1e-6 in effort. A coarse scan locates the best
/// bracket (the fallback when the objective is not unimodal), then
/// golden-section search refines it. attention_of_effort must be monotone
/// nondecreasing.
EffortOptimum optimize_effort(const ActorProfile& profile,
                              const std::function<double(double)>& attention_of_effort,
                              double effort_lo, double effort_hi,
                              const UtilityForms& forms = {},
                              UtilityVariant variant = UtilityVariant::Base,
                              double reputation = 1.0, double drho = 0.0);

/// Central difference (u(at+h) - u(at-h)) / (2h).
double numeric_gradient(const std::function<double(double)>& u, double at, double h);

}  // namespace osint
