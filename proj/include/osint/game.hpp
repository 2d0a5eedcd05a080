#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace osint {

enum class Strategy { Publish, Wait };
enum class Player { A, B };

const char* strategy_name(Strategy s);

/// Relative payoff levels of the publish/wait game. The conventional ordering
/// is high > medium > low > baseline; arbitrary reals are allowed when the
/// `canonical` flag is off, since false-reporting costs can invert the
/// effective ordering of the assembled matrix.
struct PayoffLevels {
    double high = 3.0;      // publish first and alone
    double medium = 2.0;    // simultaneous publish, attention split
    double low = 1.0;       // wait while the other publishes
    double baseline = 0.0;  // both wait
    bool canonical = true;  // enforce high > medium > low > baseline

    bool operator==(const PayoffLevels&) const = default;
};

/// Full parameterization of the two-analyst game: base levels, the expected
/// false-reporting penalty c_F(1 - q0) on publish cells, and reputation-change
/// terms weighted by the reputation discount.
struct PayoffSpec {
    PayoffLevels levels;
    double false_report_cost = 0.0;    // c_F
    double prior_true = 0.9;           // q0, prior probability the information is true
    double reputation_discount = 0.0;  // delta, weight on the drho terms below
    double drho_pub_both = 0.0;        // per publisher when both publish
    double drho_pub_solo = 0.0;        // sole publisher
    double drho_wait_solo = 0.0;       // waiter while the other publishes
    double drho_wait_both_a = 0.0;     // components of the both-wait sum,
    double drho_wait_both_b = 0.0;     // applied to both players symmetrically

    bool operator==(const PayoffSpec&) const = default;
};

void validate(const PayoffSpec& spec);  // throws ValidationError

struct Matrix2x2 {
    struct Cell {
        double a = 0.0;  // payoff to player A
        double b = 0.0;  // payoff to player B
    };
    // cells[sa][sb], indexed by Strategy (Publish = 0, Wait = 1)
    std::array<std::array<Cell, 2>, 2> cells{};

    const Cell& at(Strategy sa, Strategy sb) const {
        return cells[static_cast<int>(sa)][static_cast<int>(sb)];
    }
    Cell& at(Strategy sa, Strategy sb) {
        return cells[static_cast<int>(sa)][static_cast<int>(sb)];
    }
    double payoff(Player pl, Strategy sa, Strategy sb) const {
        return pl == Player::A ? at(sa, sb).a : at(sa, sb).b;
    }
};

/// Assembles the symmetric game matrix:
///   (P,P): medium - c_F(1-q0) + delta*drho_pub_both, both players
///   (P,W): publisher high - c_F(1-q0) + delta*drho_pub_solo, waiter low + delta*drho_wait_solo
///   (W,W): baseline + delta*(drho_wait_both_a + drho_wait_both_b), both players
Matrix2x2 build_matrix(const PayoffSpec& spec);

/// Cells where neither player gains by unilateral deviation. Ties count.
std::vector<std::pair<Strategy, Strategy>> pure_nash(const Matrix2x2& m);

/// The strategy weakly better against both opponent strategies and strictly
/// better against at least one; empty when no such strategy exists.
std::optional<Strategy> dominant_strategy(const Matrix2x2& m, Player pl);

struct ClosedFormMixed {
    double value = 0.0;
    bool in_range = false;  // membership in [0, 1]
};

/// The closed-form publish probability
///   (B - L) / ([H - c_F(1-q0) - L] + [B - M + c_F(1-q0)])
/// evaluated verbatim and flagged for range membership. Note the c_F terms
/// cancel in the denominator. This is reported alongside mixed_indifference,
/// which is the solver the simulator actually uses; the two disagree on some
/// inputs. Throws ValidationError when |denominator| < 1e-12.
ClosedFormMixed mixed_closed_form(const PayoffSpec& spec);

/// Solves the standard indifference conditions: p_B makes A indifferent
/// between Publish and Wait, p_A symmetrically. Returns the pair only when
/// both probabilities are strictly interior, verified post-hoc by recomputing
/// both players' expected payoffs to 1e-9.
std::optional<std::pair<double, double>> mixed_indifference(const Matrix2x2& m);

/// Bilinear expectation over the four cells; p_a, p_b are publish probabilities.
double expected_payoff(const Matrix2x2& m, double p_a, double p_b, Player pl);

struct EquilibriumResult {
    Matrix2x2 matrix;
    std::vector<std::pair<Strategy, Strategy>> pure;
    std::optional<Strategy> dominant_a;
    std::optional<Strategy> dominant_b;
    std::optional<std::pair<double, double>> mixed;  // (p_A, p_B), strictly interior
    bool mixed_exists = false;
    std::optional<ClosedFormMixed> closed_form;  // absent when the denominator degenerates
};

EquilibriumResult analyze_game(const PayoffSpec& spec);

}  // namespace osint
