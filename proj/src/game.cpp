#include "osint/game.hpp"

#include <cmath>

#include "osint/errors.hpp"

namespace osint {

namespace {
constexpr double kIndifferenceTol = 1e-9;
constexpr double kDegenerateDenominator = 1e-12;
}  // namespace

const char* strategy_name(Strategy s) {
    return s == Strategy::Publish ? "publish" : "wait";
}

void validate(const PayoffSpec& spec) {
    const PayoffLevels& lv = spec.levels;
    if (lv.canonical &&
        !(lv.high > lv.medium && lv.medium > lv.low && lv.low > lv.baseline)) {
        throw ValidationError("game: canonical payoff levels require H > M > L > B");
    }
    if (spec.prior_true < 0.0 || spec.prior_true > 1.0)
        throw ValidationError("game: q0 must lie in [0, 1]");
    if (spec.false_report_cost < 0.0)
        throw ValidationError("game: c_f must be >= 0");
    if (spec.reputation_discount < 0.0)
        throw ValidationError("game: delta must be >= 0");
}

Matrix2x2 build_matrix(const PayoffSpec& spec) {
    const PayoffLevels& lv = spec.levels;
    const double penalty = spec.false_report_cost * (1.0 - spec.prior_true);
    const double d = spec.reputation_discount;

    const double pub_both = lv.medium - penalty + d * spec.drho_pub_both;
    const double pub_solo = lv.high - penalty + d * spec.drho_pub_solo;
    const double wait_solo = lv.low + d * spec.drho_wait_solo;
    const double wait_both =
        lv.baseline + d * (spec.drho_wait_both_a + spec.drho_wait_both_b);

    Matrix2x2 m;
    m.at(Strategy::Publish, Strategy::Publish) = {pub_both, pub_both};
    m.at(Strategy::Publish, Strategy::Wait) = {pub_solo, wait_solo};
    m.at(Strategy::Wait, Strategy::Publish) = {wait_solo, pub_solo};
    m.at(Strategy::Wait, Strategy::Wait) = {wait_both, wait_both};
    return m;
}

std::vector<std::pair<Strategy, Strategy>> pure_nash(const Matrix2x2& m) {
    static constexpr Strategy kAll[] = {Strategy::Publish, Strategy::Wait};
    std::vector<std::pair<Strategy, Strategy>> result;
    for (Strategy sa : kAll) {
        for (Strategy sb : kAll) {
            const Strategy oa = sa == Strategy::Publish ? Strategy::Wait : Strategy::Publish;
            const Strategy ob = sb == Strategy::Publish ? Strategy::Wait : Strategy::Publish;
            const bool a_stays = m.at(sa, sb).a >= m.at(oa, sb).a;
            const bool b_stays = m.at(sa, sb).b >= m.at(sa, ob).b;
            if (a_stays && b_stays) result.emplace_back(sa, sb);
        }
    }
    return result;
}

std::optional<Strategy> dominant_strategy(const Matrix2x2& m, Player pl) {
    static constexpr Strategy kAll[] = {Strategy::Publish, Strategy::Wait};
    for (Strategy s : kAll) {
        const Strategy other = s == Strategy::Publish ? Strategy::Wait : Strategy::Publish;
        bool weakly_better = true;
        bool strictly_somewhere = false;
        for (Strategy opp : kAll) {
            // For player B the opponent move indexes the row.
            const double mine = pl == Player::A ? m.payoff(pl, s, opp) : m.payoff(pl, opp, s);
            const double alt =
                pl == Player::A ? m.payoff(pl, other, opp) : m.payoff(pl, opp, other);
            if (mine < alt) weakly_better = false;
            if (mine > alt) strictly_somewhere = true;
        }
        if (weakly_better && strictly_somewhere) return s;
    }
    return std::nullopt;
}

ClosedFormMixed mixed_closed_form(const PayoffSpec& spec) {
    const PayoffLevels& lv = spec.levels;
    const double penalty = spec.false_report_cost * (1.0 - spec.prior_true);
    const double numerator = lv.baseline - lv.low;
    const double denominator =
        (lv.high - penalty - lv.low) + (lv.baseline - lv.medium + penalty);
    if (std::abs(denominator) < kDegenerateDenominator)
        throw ValidationError("closed-form mixed strategy: degenerate denominator");
    const double value = numerator / denominator;
    return {value, value >= 0.0 && value <= 1.0};
}

double expected_payoff(const Matrix2x2& m, double p_a, double p_b, Player pl) {
    const double qa = 1.0 - p_a;
    const double qb = 1.0 - p_b;
    return p_a * p_b * m.payoff(pl, Strategy::Publish, Strategy::Publish) +
           p_a * qb * m.payoff(pl, Strategy::Publish, Strategy::Wait) +
           qa * p_b * m.payoff(pl, Strategy::Wait, Strategy::Publish) +
           qa * qb * m.payoff(pl, Strategy::Wait, Strategy::Wait);
}

std::optional<std::pair<double, double>> mixed_indifference(const Matrix2x2& m) {
    // A is indifferent when p_B * d1 + (1 - p_B) * d2 = 0, where d1 and d2 are
    // A's publish-minus-wait gains against an opponent who publishes or waits.
    const double d1 = m.at(Strategy::Publish, Strategy::Publish).a -
                      m.at(Strategy::Wait, Strategy::Publish).a;
    const double d2 = m.at(Strategy::Publish, Strategy::Wait).a -
                      m.at(Strategy::Wait, Strategy::Wait).a;
    const double e1 = m.at(Strategy::Publish, Strategy::Publish).b -
                      m.at(Strategy::Publish, Strategy::Wait).b;
    const double e2 = m.at(Strategy::Wait, Strategy::Publish).b -
                      m.at(Strategy::Wait, Strategy::Wait).b;

    const double den_b = d2 - d1;
    const double den_a = e2 - e1;
    if (std::abs(den_b) < kDegenerateDenominator || std::abs(den_a) < kDegenerateDenominator)
        return std::nullopt;

    const double p_b = d2 / den_b;
    const double p_a = e2 / den_a;
    if (!(p_a > 0.0 && p_a < 1.0 && p_b > 0.0 && p_b < 1.0)) return std::nullopt;

    // Verify the defining property directly rather than trusting the algebra.
    const double gap_a = expected_payoff(m, 1.0, p_b, Player::A) -
                         expected_payoff(m, 0.0, p_b, Player::A);
    const double gap_b = expected_payoff(m, p_a, 1.0, Player::B) -
                         expected_payoff(m, p_a, 0.0, Player::B);
    if (std::abs(gap_a) > kIndifferenceTol || std::abs(gap_b) > kIndifferenceTol)
        return std::nullopt;

    return std::make_pair(p_a, p_b);
}

EquilibriumResult analyze_game(const PayoffSpec& spec) {
    EquilibriumResult result;
    result.matrix = build_matrix(spec);
    result.pure = pure_nash(result.matrix);
    result.dominant_a = dominant_strategy(result.matrix, Player::A);
    result.dominant_b = dominant_strategy(result.matrix, Player::B);
    result.mixed = mixed_indifference(result.matrix);
    result.mixed_exists = result.mixed.has_value();
    try {
        result.closed_form = mixed_closed_form(spec);
    } catch (const ValidationError&) {
        result.closed_form = std::nullopt;
    }
    return result;
}

}  // namespace osint
