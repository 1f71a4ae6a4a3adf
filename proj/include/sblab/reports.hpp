#pragma once

#include "sblab/betting.hpp"
#include "sblab/experiments.hpp"
#include "sblab/simulate.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sblab {

enum class OutputFormat { Table, Json, Csv };

/// "table" | "json" | "csv"; throws InvalidSpecError otherwise.
OutputFormat parse_format(std::string_view text);

/// Fixed CSV header shared by every command's csv output. Rows for
/// exact-only quantities leave the empirical cells empty and vice versa.
inline constexpr std::string_view kCsvHeader =
    "name,kind,exact,point,std_error,ci_low,ci_high";

struct AnalyzeRow {
    std::string key;   // machine name (json/csv)
    std::string label; // display name (table)
    Rational value;
};

struct AnalyzeReport {
    ExperimentSpec spec;
    bool paper_mode = false;
    std::vector<AnalyzeRow> rows;

    const Rational& value(std::string_view key) const;
};

/// Exact conformance table: ERE probabilities, the SBRE outcome measure,
/// the headline conditionals, and (in paper mode, which pins the spec to a
/// fair coin with two Tails awakenings) the closed-form gains for the two
/// headline bets.
AnalyzeReport analyze(const ExperimentSpec& spec, bool paper_mode);

std::string render(const AnalyzeReport& report, OutputFormat format);
std::string render(const SimulationReport& report, OutputFormat format);
std::string render(const BettingReport& report, OutputFormat format);

} // namespace sblab
