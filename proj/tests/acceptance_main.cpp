// Acceptance gate: runs every conformance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include "property_suites.hpp"
#include "sblab/betting.hpp"
#include "sblab/experiments.hpp"
#include "sblab/reports.hpp"
#include "sblab/simulate.hpp"
#include "subprocess.hpp"

#include "json.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sblab;
using nlohmann::ordered_json;

using Failure = std::optional<std::string>;

Failure criterion_exact_conformance() {
    const auto result = testutil::run_cli("analyze --paper --format json");
    if (result.exit_code != 0)
        return "analyze --paper exited with " + std::to_string(result.exit_code);

    const auto j = ordered_json::parse(result.output, nullptr, false);
    if (j.is_discarded())
        return "analyze --paper did not emit valid json";

    const std::vector<std::pair<std::string, std::string>> expected = {
        {"P_heads_ere", "1/2"},
        {"P_heads_given_monday_ere", "1/2"},
        {"P_H1", "1/2"},
        {"P_T1", "1/4"},
        {"P_T2", "1/4"},
        {"P_monday_star", "3/4"},
        {"P_heads_given_monday_star", "2/3"},
        {"P_tails_given_monday_star", "1/3"},
        {"P_monday_star_given_tails", "1/2"},
    };
    for (const auto& [key, want] : expected) {
        if (!j["exact"].contains(key))
            return "missing row " + key;
        const auto got = j["exact"][key].get<std::string>();
        if (Rational::parse(got) != Rational::parse(want))
            return key + " = " + got + ", want " + want;
    }
    return std::nullopt;
}

Failure criterion_betting_closed_forms() {
    const ExperimentSpec spec;
    const BetSpec even{Rational(10), Rational(30)};
    const BetSpec five_to_one{Rational(10), Rational(60)};

    if (halfer_expected_gain(spec, even) != Rational(0))
        return "halfer(10,30) != 0";
    if (thirder_expected_gain(spec, even) != Rational(0))
        return "thirder(10,30) != 0";
    if (halfer_expected_gain(spec, five_to_one) != Rational(15))
        return "halfer(10,60) != 15";
    if (thirder_expected_gain(spec, five_to_one) != Rational(10))
        return "thirder(10,60) != 10";
    return std::nullopt;
}

Failure criterion_monte_carlo() {
    const auto start = std::chrono::steady_clock::now();
    const auto report = run_simulation({}, 1'000'000, kDefaultSeed);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();

    const std::vector<std::pair<std::string_view, double>> bands = {
        {kHeadsAmongAllAwakenings, 1.0 / 3.0},
        {kHeadsAmongCurrentStates, 1.0 / 2.0},
        {kDay1CurrentFraction, 3.0 / 4.0},
        {kHeadsGivenDay1Current, 2.0 / 3.0},
        {kDay1GivenTails, 1.0 / 2.0},
    };
    std::ostringstream detail;
    for (const auto& [name, target] : bands) {
        const auto& est = report.row(name).estimate;
        if (!est.defined())
            return std::string(name) + " undefined";
        if (std::abs(est.point - target) > 0.005) {
            detail << name << " = " << est.point << ", want " << target << " within 0.005";
            return detail.str();
        }
    }
    std::cout << "      note: criterion 3 ran 10^6 trials in " << elapsed << " ms\n";
    return std::nullopt;
}

Failure criterion_betting_simulation() {
    const auto report =
        simulate_betting({}, {Rational(10), Rational(60)}, 1'000'000, kDefaultSeed);
    std::ostringstream detail;
    if (std::abs(report.empirical_per_trial_mean - 15.0) > 0.15) {
        detail << "per-trial mean " << report.empirical_per_trial_mean
               << ", want 15 within 0.15";
        return detail.str();
    }
    if (std::abs(report.empirical_per_awakening_mean - 10.0) > 0.10) {
        detail << "per-awakening mean " << report.empirical_per_awakening_mean
               << ", want 10 within 0.10";
        return detail.str();
    }
    return std::nullopt;
}

Failure criterion_property_suites() {
    for (const auto& result : props::run_all(0x5EED, 250)) {
        if (result.cases < 200)
            return result.name + " ran only " + std::to_string(result.cases) + " cases";
        if (!result.ok())
            return result.name + ": " + *result.failure;
    }
    return std::nullopt;
}

Failure criterion_determinism() {
    const std::string args = "simulate --seed 42 --format json";
    const auto first = testutil::run_cli(args);
    const auto second = testutil::run_cli(args);
    if (first.exit_code != 0 || second.exit_code != 0)
        return "simulate exited nonzero";
    if (first.output.empty())
        return "simulate produced no output";
    if (first.output != second.output)
        return "two identically-seeded runs differ";
    return std::nullopt;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        std::string label;
        std::function<Failure()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "exact conformance table from analyze --paper", criterion_exact_conformance},
        {2, "betting closed forms at the headline bets", criterion_betting_closed_forms},
        {3, "monte carlo estimators within 0.005 at 10^6 trials", criterion_monte_carlo},
        {4, "betting simulation means within 0.15 / 0.10", criterion_betting_simulation},
        {5, "randomized property suites (>=200 cases each)", criterion_property_suites},
        {6, "byte-identical seeded simulate runs", criterion_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        Failure failure;
        try {
            failure = criterion.run();
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure) {
            ++failures;
            std::cout << "FAIL  criterion " << criterion.number << ": " << criterion.label
                      << " -- " << *failure << '\n';
        } else {
            std::cout << "PASS  criterion " << criterion.number << ": " << criterion.label
                      << '\n';
        }
    }

    if (failures == 0)
        std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
    else
        std::cout << failures << " of " << criteria.size() << " acceptance criteria failed\n";
    return failures == 0 ? 0 : 1;
}
