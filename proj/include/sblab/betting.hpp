#pragma once

#include "sblab/experiments.hpp"
#include "sblab/rational.hpp"
#include "sblab/simulate.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace sblab {

/// One bet on Heads, offered (compulsorily) at every awakening: pay `cost`
/// up front, receive `payoff` gross if the coin shows Heads.
struct BetSpec {
    Rational cost;
    Rational payoff;

    /// Throws InvalidSpecError unless cost > 0 and payoff >= 0.
    void validate() const;

    Rational net_win() const { return payoff - cost; }
};

/// Displayed wherever a payoff:cost ratio appears. The same bet being
/// settled once per awakening is what moves the break-even payoff to
/// cost * (1 + n); the coin's odds for Heads stay 1:1.
inline constexpr std::string_view kPayoffRatioNote =
    "payoff ratio is not an odds ratio: the same bet is settled once per awakening";

/// Per-awakening weight of Heads: q = p / (p + (1-p)*n).
Rational per_awakening_heads_weight(const ExperimentSpec& spec);

/// Per-trial expected gain: p*(payoff-cost) - (1-p)*n*cost. The loss is
/// multiplied by n because a Tails trial settles the bet at each of its n
/// awakenings.
Rational halfer_expected_gain(const ExperimentSpec& spec, const BetSpec& bet);

/// The same bet priced with per-awakening weights:
/// q*(payoff-cost) - (1-q)*cost. This is a per-awakening quantity, not a
/// per-trial one; it equals halfer_expected_gain / expected_awakenings.
Rational thirder_expected_gain(const ExperimentSpec& spec, const BetSpec& bet);

struct BettingReport {
    ExperimentSpec spec;
    BetSpec bet;
    Rational halfer_expectation;
    Rational thirder_expectation;
    Rational payoff_ratio; // payoff / cost, see kPayoffRatioNote
    double empirical_per_trial_mean = 0.0;
    double empirical_per_awakening_mean = 0.0;
    std::uint64_t n_trials = 0;
    std::uint64_t seed = 0;
    std::string generator;
    std::uint64_t chunk_size = 0;
    TrialCounts counts;
};

/// Settles the bet once per awakening over a simulated trial stream (same
/// chunked deterministic engine as run_counts): a Heads trial wins net
/// (payoff - cost) once, a Tails trial loses cost at each of its n
/// awakenings. Both empirical means are computed from the same stream; the
/// per-awakening mean divides by the total awakening count.
BettingReport simulate_betting(const ExperimentSpec& spec, const BetSpec& bet,
                               std::uint64_t n_trials, std::uint64_t seed);

} // namespace sblab
