#include "sblab/reports.hpp"

#include "json.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace sblab {

namespace {

using OrderedJson = nlohmann::ordered_json;

std::string fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::string fraction_with_hint(const Rational& value) {
    return value.str() + " (" + fixed6(value.to_double()) + ")";
}

OrderedJson spec_json(const ExperimentSpec& spec) {
    return {{"p_heads", spec.p_heads.str()}, {"tails_days", spec.tails_days}};
}

OrderedJson estimate_json(const FrequencyEstimate& est) {
    OrderedJson j;
    j["hits"] = est.hits;
    j["total"] = est.total;
    if (est.defined()) {
        j["point"] = est.point;
        j["std_error"] = est.std_error;
        j["ci95"] = {est.ci95_low, est.ci95_high};
    } else {
        j["point"] = nullptr;
        j["std_error"] = nullptr;
        j["ci95"] = nullptr;
    }
    return j;
}

std::string dump(const OrderedJson& j) {
    return j.dump(2) + "\n";
}

void csv_exact_row(std::ostream& out, std::string_view name, const Rational& value) {
    out << name << ",exact," << value.str() << ",,,,\n";
}

} // namespace

OutputFormat parse_format(std::string_view text) {
    if (text == "table")
        return OutputFormat::Table;
    if (text == "json")
        return OutputFormat::Json;
    if (text == "csv")
        return OutputFormat::Csv;
    throw InvalidSpecError("unknown output format '" + std::string(text) +
                           "' (expected table|json|csv)");
}

const Rational& AnalyzeReport::value(std::string_view key) const {
    for (const auto& row : rows)
        if (row.key == key)
            return row.value;
    throw ProbError("AnalyzeReport: no row '" + std::string(key) + "'");
}

AnalyzeReport analyze(const ExperimentSpec& spec, bool paper_mode) {
    const ExperimentSpec effective = paper_mode ? ExperimentSpec{} : spec;
    effective.validate();

    const auto ere = build_ere(effective);
    const auto sbre = build_sbre(effective);
    const auto& e = ere.experiment();
    const auto& s = sbre.experiment();
    const auto table = paper_table(effective);
    const auto table_value = [&](std::string_view key) -> const Rational* {
        for (const auto& [name, value] : table)
            if (name == key)
                return &value;
        return nullptr;
    };

    AnalyzeReport report{effective, paper_mode, {}};
    const auto add = [&](std::string key, std::string label, Rational value) {
        report.rows.push_back({std::move(key), std::move(label), std::move(value)});
    };

    add("P_heads_ere", "P(Heads) [ERE]", *table_value("P_heads_ere"));
    add("P_tails_ere", "P(Tails) [ERE]", e.probability(ere.event("tails")));
    add("P_monday_occurs_ere", "P(Monday occurs) [ERE]",
        e.probability(ere.event("monday_occurs")));
    add("P_tuesday_occurs_ere", "P(Tuesday occurs) [ERE]",
        e.probability(ere.event("tuesday_occurs")));
    add("P_heads_given_monday_ere", "P(Heads | Monday) [ERE]",
        *table_value("P_heads_given_monday_ere"));

    for (const auto& o : s.outcomes())
        add("P_" + o.label(), "P(" + o.label() + ") [SBRE]", s.measure(o.label()));

    add("P_monday_star", "P(Monday*) [SBRE]", *table_value("P_monday_star"));
    add("P_heads_given_monday_star", "P(Heads | Monday*) [SBRE]",
        *table_value("P_heads_given_monday_star"));
    add("P_tails_given_monday_star", "P(Tails | Monday*) [SBRE]",
        *table_value("P_tails_given_monday_star"));
    if (const Rational* value = table_value("P_monday_star_given_tails"))
        add("P_monday_star_given_tails", "P(Monday* | Tails) [SBRE]", *value);

    if (paper_mode) {
        const BetSpec even_bet{Rational(10), Rational(30)};
        const BetSpec five_to_one{Rational(10), Rational(60)};
        add("halfer_gain_cost10_payoff30", "halfer gain (cost 10, payoff 30)",
            halfer_expected_gain(effective, even_bet));
        add("thirder_gain_cost10_payoff30", "thirder gain (cost 10, payoff 30)",
            thirder_expected_gain(effective, even_bet));
        add("halfer_gain_cost10_payoff60", "halfer gain (cost 10, payoff 60)",
            halfer_expected_gain(effective, five_to_one));
        add("thirder_gain_cost10_payoff60", "thirder gain (cost 10, payoff 60)",
            thirder_expected_gain(effective, five_to_one));
    }
    return report;
}

std::string render(const AnalyzeReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        OrderedJson j;
        j["meta"] = {{"command", "analyze"},
                     {"spec", spec_json(report.spec)},
                     {"paper", report.paper_mode}};
        auto& exact = j["exact"] = OrderedJson::object();
        for (const auto& row : report.rows)
            exact[row.key] = row.value.str();
        j["empirical"] = OrderedJson::object();
        return dump(j);
    }
    case OutputFormat::Csv: {
        std::ostringstream out;
        out << kCsvHeader << '\n';
        for (const auto& row : report.rows)
            csv_exact_row(out, row.key, row.value);
        return out.str();
    }
    case OutputFormat::Table: {
        std::ostringstream out;
        out << "exact analysis  (p_heads = " << report.spec.p_heads.str()
            << ", tails_days = " << report.spec.tails_days;
        if (report.paper_mode)
            out << ", paper values";
        out << ")\n\n";
        std::size_t width = 0;
        for (const auto& row : report.rows)
            width = std::max(width, row.label.size());
        for (const auto& row : report.rows)
            out << "  " << std::left << std::setw(static_cast<int>(width + 2)) << row.label
                << fraction_with_hint(row.value) << '\n';
        return out.str();
    }
    }
    throw ProbError("render: unreachable format");
}

std::string render(const SimulationReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        OrderedJson j;
        j["meta"] = {{"command", "simulate"}, {"spec", spec_json(report.spec)},
                     {"seed", report.seed},   {"n_trials", report.n_trials},
                     {"generator", report.generator}, {"chunk_size", report.chunk_size}};
        auto& exact = j["exact"] = OrderedJson::object();
        for (const auto& row : report.rows)
            if (row.exact)
                exact[row.name] = row.exact->str();
        auto& empirical = j["empirical"] = OrderedJson::object();
        for (const auto& row : report.rows)
            empirical[row.name] = estimate_json(row.estimate);
        return dump(j);
    }
    case OutputFormat::Csv: {
        std::ostringstream out;
        out << kCsvHeader << '\n';
        for (const auto& row : report.rows) {
            out << row.name << ",empirical,";
            if (row.exact)
                out << row.exact->str();
            out << ',';
            if (row.estimate.defined()) {
                out << fixed6(row.estimate.point) << ',' << fixed6(row.estimate.std_error)
                    << ',' << fixed6(row.estimate.ci95_low) << ','
                    << fixed6(row.estimate.ci95_high);
            } else {
                out << ",,,";
            }
            out << '\n';
        }
        return out.str();
    }
    case OutputFormat::Table: {
        std::ostringstream out;
        out << "simulation  (p_heads = " << report.spec.p_heads.str()
            << ", tails_days = " << report.spec.tails_days << ", n_trials = " << report.n_trials
            << ", seed = " << report.seed << ")\n"
            << "generator = " << report.generator << ", chunk_size = " << report.chunk_size
            << "\n\n";
        std::size_t width = 0;
        for (const auto& row : report.rows)
            width = std::max(width, row.name.size());
        out << "  " << std::left << std::setw(static_cast<int>(width + 2)) << "estimator"
            << std::setw(22) << "exact" << std::setw(12) << "point" << std::setw(12)
            << "std_error" << "95% CI\n";
        for (const auto& row : report.rows) {
            out << "  " << std::left << std::setw(static_cast<int>(width + 2)) << row.name;
            out << std::setw(22) << (row.exact ? fraction_with_hint(*row.exact) : "n/a");
            if (row.estimate.defined()) {
                out << std::setw(12) << fixed6(row.estimate.point) << std::setw(12)
                    << fixed6(row.estimate.std_error) << '[' << fixed6(row.estimate.ci95_low)
                    << ", " << fixed6(row.estimate.ci95_high) << ']';
            } else {
                out << "n/a (no samples: " << row.estimate.hits << '/' << row.estimate.total
                    << ')';
            }
            out << '\n';
        }
        return out.str();
    }
    }
    throw ProbError("render: unreachable format");
}

std::string render(const BettingReport& report, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        OrderedJson j;
        j["meta"] = {{"command", "bet"},
                     {"spec", spec_json(report.spec)},
                     {"bet",
                      {{"cost", report.bet.cost.str()},
                       {"payoff", report.bet.payoff.str()},
                       {"payoff_ratio", report.payoff_ratio.str()},
                       {"payoff_ratio_note", std::string(kPayoffRatioNote)}}},
                     {"seed", report.seed},
                     {"n_trials", report.n_trials},
                     {"generator", report.generator},
                     {"chunk_size", report.chunk_size}};
        j["exact"] = {{"halfer_expected_gain", report.halfer_expectation.str()},
                      {"thirder_expected_gain", report.thirder_expectation.str()}};
        j["empirical"] = {{"per_trial_mean",
                           {{"total", report.n_trials}, {"point", report.empirical_per_trial_mean}}},
                          {"per_awakening_mean",
                           {{"total", report.counts.awakenings},
                            {"point", report.empirical_per_awakening_mean}}}};
        return dump(j);
    }
    case OutputFormat::Csv: {
        std::ostringstream out;
        out << kCsvHeader << '\n';
        csv_exact_row(out, "halfer_expected_gain", report.halfer_expectation);
        csv_exact_row(out, "thirder_expected_gain", report.thirder_expectation);
        csv_exact_row(out, "payoff_ratio", report.payoff_ratio);
        out << "per_trial_mean,empirical," << report.halfer_expectation.str() << ','
            << fixed6(report.empirical_per_trial_mean) << ",,,\n";
        out << "per_awakening_mean,empirical," << report.thirder_expectation.str() << ','
            << fixed6(report.empirical_per_awakening_mean) << ",,,\n";
        return out.str();
    }
    case OutputFormat::Table: {
        std::ostringstream out;
        out << "betting  (p_heads = " << report.spec.p_heads.str()
            << ", tails_days = " << report.spec.tails_days << ", cost = " << report.bet.cost.str()
            << ", payoff = " << report.bet.payoff.str() << ")\n"
            << "payoff ratio = " << report.payoff_ratio.str() << "  -- " << kPayoffRatioNote
            << "\n\n"
            << "  halfer expected gain (per trial)       "
            << fraction_with_hint(report.halfer_expectation) << '\n'
            << "  thirder expected gain (per awakening)  "
            << fraction_with_hint(report.thirder_expectation) << "\n\n"
            << "simulated: n_trials = " << report.n_trials << ", seed = " << report.seed
            << ", generator = " << report.generator << ", chunk_size = " << report.chunk_size
            << '\n'
            << "  empirical per-trial mean      " << fixed6(report.empirical_per_trial_mean)
            << '\n'
            << "  empirical per-awakening mean  " << fixed6(report.empirical_per_awakening_mean)
            << "  (" << report.counts.awakenings << " awakenings)\n";
        return out.str();
    }
    }
    throw ProbError("render: unreachable format");
}

} // namespace sblab
