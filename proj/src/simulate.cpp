#include "sblab/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace sblab {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Precomputed two-stage draw shared by sample_trial and the counting loop,
/// so both consume the identical rng stream.
struct TwoStageSampler {
    std::uint64_t num = 0;  // coin: heads iff below(den) < num
    std::uint64_t den = 1;
    std::uint64_t days = 1; // tails day: 1 + below(days)

    explicit TwoStageSampler(const ExperimentSpec& spec) {
        if (spec.p_heads.den() > std::numeric_limits<std::uint64_t>::max())
            throw InvalidSpecError(
                "simulation: p_heads denominator too large for exact sampling");
        num = spec.p_heads.num().convert_to<std::uint64_t>();
        den = spec.p_heads.den().convert_to<std::uint64_t>();
        days = static_cast<std::uint64_t>(spec.tails_days);
    }

    std::pair<bool, int> draw(TrialRng& rng) const {
        const bool heads = rng.below(den) < num;
        const int day = heads ? 1 : static_cast<int>(rng.below(days)) + 1;
        return {heads, day};
    }
};

} // namespace

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk_index) {
    return splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (chunk_index + 1)));
}

std::uint64_t TrialRng::below(std::uint64_t bound) {
    if (bound == 0)
        throw std::invalid_argument("TrialRng::below: bound must be positive");
    // Accept draws in [2^64 mod bound, 2^64); that range's size is a
    // multiple of bound, so the modulus below is unbiased.
    const std::uint64_t min = (0 - bound) % bound;
    std::uint64_t draw = engine_();
    while (draw < min)
        draw = engine_();
    return draw % bound;
}

bool TrialRng::bernoulli(const Rational& p) {
    if (p < Rational(0) || p > Rational(1))
        throw std::invalid_argument("TrialRng::bernoulli: p outside [0,1]");
    if (p.den() > std::numeric_limits<std::uint64_t>::max())
        throw InvalidSpecError("bernoulli: denominator too large for exact sampling");
    const auto den = p.den().convert_to<std::uint64_t>();
    const auto num = p.num().convert_to<std::uint64_t>();
    return below(den) < num;
}

TrialRecord sample_trial(TrialRng& rng, const ExperimentSpec& spec) {
    spec.validate();
    const TwoStageSampler sampler(spec);
    const auto [heads, day] = sampler.draw(rng);

    TrialRecord record;
    record.coin = heads ? CoinFace::Heads : CoinFace::Tails;
    record.awakenings = awakening_schedule(record.coin, spec).days;
    record.current_state_day = day;
    return record;
}

TrialCounts& TrialCounts::operator+=(const TrialCounts& rhs) {
    trials += rhs.trials;
    heads_trials += rhs.heads_trials;
    tails_trials += rhs.tails_trials;
    awakenings += rhs.awakenings;
    current_day1 += rhs.current_day1;
    heads_current_day1 += rhs.heads_current_day1;
    tails_current_day1 += rhs.tails_current_day1;
    return *this;
}

TrialCounts run_counts(const ExperimentSpec& spec, std::uint64_t n_trials, std::uint64_t seed) {
    spec.validate();
    if (n_trials < 1)
        throw InvalidSpecError("simulation: n_trials must be at least 1");

    const TwoStageSampler sampler(spec);
    const std::uint64_t n = static_cast<std::uint64_t>(spec.tails_days);
    const std::uint64_t n_chunks = (n_trials + kChunkSize - 1) / kChunkSize;
    std::vector<TrialCounts> parts(n_chunks);

    std::atomic<std::uint64_t> cursor{0};
    auto worker = [&] {
        for (std::uint64_t i; (i = cursor.fetch_add(1)) < n_chunks;) {
            TrialRng rng(chunk_seed(seed, i));
            const std::uint64_t begin = i * kChunkSize;
            const std::uint64_t end = std::min(n_trials, begin + kChunkSize);
            TrialCounts c;
            for (std::uint64_t t = begin; t < end; ++t) {
                const auto [heads, day] = sampler.draw(rng);
                c.trials += 1;
                if (heads) {
                    c.heads_trials += 1;
                    c.awakenings += 1;
                } else {
                    c.tails_trials += 1;
                    c.awakenings += n;
                }
                if (day == 1) {
                    c.current_day1 += 1;
                    if (heads)
                        c.heads_current_day1 += 1;
                    else
                        c.tails_current_day1 += 1;
                }
            }
            parts[i] = c;
        }
    };

    const unsigned hw = std::thread::hardware_concurrency();
    const std::uint64_t n_workers = std::max<std::uint64_t>(
        1, std::min<std::uint64_t>(hw == 0 ? 1 : hw, n_chunks));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(n_workers);
        for (std::uint64_t w = 0; w < n_workers; ++w)
            threads.emplace_back(worker);
        for (auto& t : threads)
            t.join();
    }

    TrialCounts total;
    for (const auto& part : parts)
        total += part;
    return total;
}

FrequencyEstimate make_estimate(std::uint64_t hits, std::uint64_t total) {
    FrequencyEstimate est;
    est.hits = hits;
    est.total = total;
    if (total == 0) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        est.point = est.std_error = est.ci95_low = est.ci95_high = nan;
        return est;
    }
    est.point = static_cast<double>(hits) / static_cast<double>(total);
    est.std_error = std::sqrt(est.point * (1.0 - est.point) / static_cast<double>(total));
    est.ci95_low = std::max(0.0, est.point - 1.96 * est.std_error);
    est.ci95_high = std::min(1.0, est.point + 1.96 * est.std_error);
    return est;
}

std::vector<std::pair<std::string, std::optional<Rational>>>
exact_estimator_targets(const ExperimentSpec& spec) {
    spec.validate();
    const auto sbre = build_sbre(spec);
    const auto& s = sbre.experiment();
    const Event& heads = sbre.event("heads");
    const Event& tails = sbre.event("tails");
    const Event& day1 = sbre.day_star(1);
    // P(day1_star) = p + (1-p)/n > 0 for every valid spec, so the
    // day1-conditioned target always exists; the tails-conditioned one
    // vanishes for a degenerate always-Heads coin.
    const Rational p_day1 = s.probability(day1);

    std::vector<std::pair<std::string, std::optional<Rational>>> targets;
    targets.emplace_back(kHeadsAmongAllAwakenings,
                         expected_heads_awakenings(spec) / expected_awakenings(spec));
    targets.emplace_back(kHeadsAmongCurrentStates, s.probability(heads));
    targets.emplace_back(kDay1CurrentFraction, p_day1);
    targets.emplace_back(kHeadsGivenDay1Current, s.conditional(heads, day1));
    targets.emplace_back(kDay1SelectedAmongMondayAwakenings, p_day1);
    if (s.probability(tails).is_zero())
        targets.emplace_back(kDay1GivenTails, std::nullopt);
    else
        targets.emplace_back(kDay1GivenTails, s.conditional(day1, tails));
    return targets;
}

const EstimatorRow& SimulationReport::row(std::string_view name) const {
    for (const auto& row : rows)
        if (row.name == name)
            return row;
    throw ProbError("SimulationReport: no estimator '" + std::string(name) + "'");
}

SimulationReport run_simulation(const ExperimentSpec& spec, std::uint64_t n_trials,
                                std::uint64_t seed) {
    const TrialCounts counts = run_counts(spec, n_trials, seed);
    const auto targets = exact_estimator_targets(spec);
    const auto target = [&](std::string_view name) -> std::optional<Rational> {
        for (const auto& [target_name, value] : targets)
            if (target_name == name)
                return value;
        return std::nullopt;
    };

    SimulationReport report;
    report.spec = spec;
    report.n_trials = n_trials;
    report.seed = seed;
    report.generator = std::string(kGeneratorName);
    report.chunk_size = kChunkSize;
    report.counts = counts;

    const auto add = [&](std::string_view name, std::uint64_t hits, std::uint64_t total) {
        report.rows.push_back(
            {std::string(name), target(name), make_estimate(hits, total)});
    };
    add(kHeadsAmongAllAwakenings, counts.heads_trials, counts.awakenings);
    add(kHeadsAmongCurrentStates, counts.heads_trials, counts.trials);
    add(kDay1CurrentFraction, counts.current_day1, counts.trials);
    add(kHeadsGivenDay1Current, counts.heads_current_day1, counts.current_day1);
    // Every trial has a day-1 awakening, so the denominator is the trial
    // count; the numerator counts trials whose day-1 awakening was the one
    // selected as the current state.
    add(kDay1SelectedAmongMondayAwakenings, counts.current_day1, counts.trials);
    add(kDay1GivenTails, counts.tails_current_day1, counts.tails_trials);
    return report;
}

} // namespace sblab
