#include "sblab/betting.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <cmath>

using namespace sblab;

namespace {
const ExperimentSpec kClassic{};
const BetSpec kEvenMoney{Rational(10), Rational(30)};
const BetSpec kFiveToOne{Rational(10), Rational(60)};
} // namespace

TEST_CASE("halfer expected gain") {
    CHECK(halfer_expected_gain(kClassic, kEvenMoney) == Rational(0));
    CHECK(halfer_expected_gain(kClassic, kFiveToOne) == Rational(15));
    CHECK(halfer_expected_gain({Rational(1), 2}, kEvenMoney) == Rational(20));
    // guaranteed loss: payoff 0 forfeits the stake at every awakening
    CHECK(halfer_expected_gain(kClassic, {Rational(10), Rational(0)}) == Rational(-15));
}

TEST_CASE("thirder expected gain") {
    CHECK(thirder_expected_gain(kClassic, kEvenMoney) == Rational(0));
    CHECK(thirder_expected_gain(kClassic, kFiveToOne) == Rational(10));

    // with one awakening per trial the two formulas coincide
    const ExperimentSpec single{Rational(1, 2), 1};
    for (const auto& bet : {kEvenMoney, kFiveToOne, BetSpec{Rational(3, 2), Rational(7, 3)}})
        CHECK(thirder_expected_gain(single, bet) == halfer_expected_gain(single, bet));
}

TEST_CASE("per-awakening heads weight") {
    CHECK(per_awakening_heads_weight(kClassic) == Rational(1, 3));
    CHECK(per_awakening_heads_weight({Rational(1, 2), 1}) == Rational(1, 2));
    CHECK(per_awakening_heads_weight({Rational(1), 5}) == Rational(1));
}

TEST_CASE("zero-gain point sits at payoff = 3 * cost for the classic spec") {
    for (const auto& cost : {Rational(10), Rational(7), Rational(3, 2)}) {
        const BetSpec breakeven{cost, cost * Rational(3)};
        CHECK(halfer_expected_gain(kClassic, breakeven) == Rational(0));
        CHECK(thirder_expected_gain(kClassic, breakeven) == Rational(0));

        const BetSpec above{cost, cost * Rational(3) + Rational(1)};
        CHECK(halfer_expected_gain(kClassic, above) > Rational(0));
        const BetSpec below{cost, cost * Rational(3) - Rational(1)};
        CHECK(halfer_expected_gain(kClassic, below) < Rational(0));
    }
}

TEST_CASE("closed forms match the enumeration oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& [pn, pd] : {std::pair{1LL, 2LL}, {1LL, 3LL}, {2LL, 5LL}, {0LL, 1LL},
                                     {1LL, 1LL}}) {
            const ExperimentSpec spec{Rational(pn, pd), n};
            const BetSpec bet{Rational(10), Rational(45)};

            const auto brute = oracle::halfer_ev_by_enumeration(
                oracle::frac(pn, pd), n, oracle::frac(10, 1), oracle::frac(45, 1));
            CHECK(oracle::eq(brute, halfer_expected_gain(spec, bet)));

            const auto awakenings = oracle::expected_awakenings_by_enumeration(
                oracle::frac(pn, pd), n);
            // thirder = halfer / E[awakenings], checked against the
            // enumerated expectations rather than the closed forms
            CHECK(oracle::eq(oracle::div(brute, awakenings),
                             thirder_expected_gain(spec, bet)));
        }
    }
}

TEST_CASE("expectations scale linearly with the stake") {
    const BetSpec bet{Rational(4, 3), Rational(11, 2)};
    for (const auto& k : {Rational(2), Rational(7, 5), Rational(1, 9)}) {
        const BetSpec scaled{bet.cost * k, bet.payoff * k};
        CHECK(halfer_expected_gain(kClassic, scaled) == halfer_expected_gain(kClassic, bet) * k);
        CHECK(thirder_expected_gain(kClassic, scaled) ==
              thirder_expected_gain(kClassic, bet) * k);
    }
}

TEST_CASE("bet validation") {
    CHECK_THROWS_AS((BetSpec{Rational(0), Rational(5)}.validate()), InvalidSpecError);
    CHECK_THROWS_AS((BetSpec{Rational(-1), Rational(5)}.validate()), InvalidSpecError);
    CHECK_THROWS_AS((BetSpec{Rational(1), Rational(-5)}.validate()), InvalidSpecError);
    CHECK_NOTHROW((BetSpec{Rational(1), Rational(0)}.validate()));
    CHECK_THROWS_AS(simulate_betting(kClassic, {Rational(0), Rational(5)}, 10, 1),
                    InvalidSpecError);
}

TEST_CASE("an always-tails coin loses both bets per trial, exactly") {
    const auto report = simulate_betting({Rational(0), 2}, kFiveToOne, 500, 9);
    CHECK(report.empirical_per_trial_mean == -20.0);
    CHECK(report.empirical_per_awakening_mean == -10.0);
    CHECK(report.counts.awakenings == 1000);
}

TEST_CASE("an always-heads coin wins the single bet per trial, exactly") {
    const auto report = simulate_betting({Rational(1), 2}, kFiveToOne, 500, 9);
    CHECK(report.empirical_per_trial_mean == 50.0);
    CHECK(report.empirical_per_awakening_mean == 50.0);
}

TEST_CASE("simulated means agree with the closed forms on a pinned run") {
    const auto report = simulate_betting(kClassic, kFiveToOne, 100000, kDefaultSeed);
    // per-trial gains are ±(50|-20) with sd 35, so 5 sigma at 1e5 trials
    CHECK(std::abs(report.empirical_per_trial_mean - 15.0) < 5.0 * 35.0 / std::sqrt(100000.0));
    CHECK(std::abs(report.empirical_per_awakening_mean - 10.0) < 0.4);
    CHECK(report.halfer_expectation == Rational(15));
    CHECK(report.thirder_expectation == Rational(10));
    CHECK(report.payoff_ratio == Rational(6));
}

TEST_CASE("betting report is deterministic and reuses the trial stream") {
    const auto a = simulate_betting(kClassic, kEvenMoney, 50000, 4);
    const auto b = simulate_betting(kClassic, kEvenMoney, 50000, 4);
    CHECK(a.empirical_per_trial_mean == b.empirical_per_trial_mean);
    CHECK(a.empirical_per_awakening_mean == b.empirical_per_awakening_mean);

    // same engine, same seed: the coin counts match the plain counting run
    const auto counts = run_counts(kClassic, 50000, 4);
    CHECK(a.counts.heads_trials == counts.heads_trials);
    CHECK(a.counts.awakenings == counts.awakenings);
}
