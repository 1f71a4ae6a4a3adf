#include "sblab/betting.hpp"

namespace sblab {

void BetSpec::validate() const {
    if (cost <= Rational(0))
        throw InvalidSpecError("bet: cost must be positive, got " + cost.str());
    if (payoff < Rational(0))
        throw InvalidSpecError("bet: payoff must be nonnegative, got " + payoff.str());
}

Rational per_awakening_heads_weight(const ExperimentSpec& spec) {
    spec.validate();
    return spec.p_heads / expected_awakenings(spec);
}

Rational halfer_expected_gain(const ExperimentSpec& spec, const BetSpec& bet) {
    spec.validate();
    bet.validate();
    const Rational p = spec.p_heads;
    const Rational n{spec.tails_days};
    return p * bet.net_win() - (Rational(1) - p) * n * bet.cost;
}

Rational thirder_expected_gain(const ExperimentSpec& spec, const BetSpec& bet) {
    spec.validate();
    bet.validate();
    const Rational q = per_awakening_heads_weight(spec);
    return q * bet.net_win() - (Rational(1) - q) * bet.cost;
}

BettingReport simulate_betting(const ExperimentSpec& spec, const BetSpec& bet,
                               std::uint64_t n_trials, std::uint64_t seed) {
    bet.validate();
    const TrialCounts counts = run_counts(spec, n_trials, seed);

    // Total gain follows from the coin counts alone: every Heads trial
    // settles one winning bet, every Tails trial settles n losing ones.
    const Rational total_gain = Rational(BigInt(counts.heads_trials)) * bet.net_win() -
                                Rational(BigInt(counts.tails_trials)) *
                                    Rational(spec.tails_days) * bet.cost;

    BettingReport report;
    report.spec = spec;
    report.bet = bet;
    report.halfer_expectation = halfer_expected_gain(spec, bet);
    report.thirder_expectation = thirder_expected_gain(spec, bet);
    report.payoff_ratio = bet.payoff / bet.cost;
    report.empirical_per_trial_mean = (total_gain / Rational(BigInt(n_trials))).to_double();
    report.empirical_per_awakening_mean =
        (total_gain / Rational(BigInt(counts.awakenings))).to_double();
    report.n_trials = n_trials;
    report.seed = seed;
    report.generator = std::string(kGeneratorName);
    report.chunk_size = kChunkSize;
    report.counts = counts;
    return report;
}

} // namespace sblab
