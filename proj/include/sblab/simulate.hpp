#pragma once

#include "sblab/experiments.hpp"
#include "sblab/prob.hpp"
#include "sblab/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace sblab {

/// Pinned default seed used by the CLI and the conformance runs.
inline constexpr std::uint64_t kDefaultSeed = 1729;

/// Trials are generated in fixed-size chunks, each with its own derived
/// seed, so runs are reproducible regardless of thread count. The chunk
/// size is part of the determinism contract and is recorded in reports.
inline constexpr std::uint64_t kChunkSize = 65536;

inline constexpr std::string_view kGeneratorName = "mt19937_64";

/// Derived seed for one chunk: splitmix64 mix of the run seed and the
/// chunk ordinal.
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk_index);

/// Seeded random source for trial sampling. Bounded draws use rejection
/// sampling, so they are unbiased; the Bernoulli draw compares a uniform
/// integer below the denominator against the numerator, which makes the
/// coin exact for any rational bias (including 0 and 1).
class TrialRng {
  public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    /// True with probability exactly p; p must lie in [0,1] and its
    /// denominator must fit in 64 bits.
    bool bernoulli(const Rational& p);

  private:
    std::mt19937_64 engine_;
};

/// One simulated trial. Draw order is fixed: the coin first, then (only on
/// Tails) one uniform day draw in [1..tails_days]; a Heads trial's current
/// state is day 1 without consuming a draw.
struct TrialRecord {
    CoinFace coin = CoinFace::Heads;
    std::vector<int> awakenings;
    std::optional<int> current_state_day;
};

TrialRecord sample_trial(TrialRng& rng, const ExperimentSpec& spec);

/// Count aggregates over a trial stream. Merging is plain addition, so
/// chunked parallel aggregation is order-independent.
struct TrialCounts {
    std::uint64_t trials = 0;
    std::uint64_t heads_trials = 0;
    std::uint64_t tails_trials = 0;
    std::uint64_t awakenings = 0;
    std::uint64_t current_day1 = 0;
    std::uint64_t heads_current_day1 = 0;
    std::uint64_t tails_current_day1 = 0;

    TrialCounts& operator+=(const TrialCounts& rhs);
};

/// Samples n_trials trials and aggregates counts. Deterministic for fixed
/// (spec, n_trials, seed): trials are split into kChunkSize-sized chunks,
/// chunk i is generated from chunk_seed(seed, i), and chunk counts are
/// summed in index order. Worker threads only affect wall time.
TrialCounts run_counts(const ExperimentSpec& spec, std::uint64_t n_trials, std::uint64_t seed);

struct FrequencyEstimate {
    std::uint64_t hits = 0;
    std::uint64_t total = 0;
    double point = 0.0;
    double std_error = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;

    bool defined() const noexcept { return total > 0; }
};

/// point = hits/total with a normal-approximation 95% interval
/// (1.96 * stderr), clamped to [0,1]. total == 0 yields an undefined
/// estimate (NaN point) that renders as null.
FrequencyEstimate make_estimate(std::uint64_t hits, std::uint64_t total);

// Estimator names. The first counts every awakening in every trial; the
// rest count current-state awakenings, which is what distinguishes the two
// frequency arguments about Heads.
inline constexpr std::string_view kHeadsAmongAllAwakenings = "heads_among_all_awakenings";
inline constexpr std::string_view kHeadsAmongCurrentStates = "heads_among_current_states";
inline constexpr std::string_view kDay1CurrentFraction = "day1_current_fraction";
inline constexpr std::string_view kHeadsGivenDay1Current = "heads_given_day1_current";
inline constexpr std::string_view kDay1SelectedAmongMondayAwakenings =
    "day1_selected_among_monday_awakenings";
inline constexpr std::string_view kDay1GivenTails = "day1_given_tails";

/// Exact counterparts of the estimators, computed from the built
/// experiments (not from the closed forms the estimators are checked
/// against elsewhere). A target is absent when it would condition on a
/// probability-zero event.
std::vector<std::pair<std::string, std::optional<Rational>>>
exact_estimator_targets(const ExperimentSpec& spec);

struct EstimatorRow {
    std::string name;
    std::optional<Rational> exact;
    FrequencyEstimate estimate;
};

struct SimulationReport {
    ExperimentSpec spec;
    std::uint64_t n_trials = 0;
    std::uint64_t seed = 0;
    std::string generator;
    std::uint64_t chunk_size = 0;
    TrialCounts counts;
    std::vector<EstimatorRow> rows;

    const EstimatorRow& row(std::string_view name) const;
};

SimulationReport run_simulation(const ExperimentSpec& spec, std::uint64_t n_trials,
                                std::uint64_t seed);

} // namespace sblab
