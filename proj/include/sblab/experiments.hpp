#pragma once

#include "sblab/prob.hpp"
#include "sblab/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sblab {

/// Invalid experiment or bet parameters.
class InvalidSpecError : public ProbError {
  public:
    using ProbError::ProbError;
};

/// Parameters of the coin-and-awakenings setup. The default spec is the
/// classic one: a fair coin, one awakening on Heads, two on Tails.
/// Generalizing over (p_heads, tails_days) keeps the invariants testable;
/// the number of Heads awakenings stays fixed at 1.
struct ExperimentSpec {
    Rational p_heads{1, 2};
    int tails_days = 2;

    /// Throws InvalidSpecError unless 0 <= p_heads <= 1 and
    /// 1 <= tails_days <= 1'000'000.
    void validate() const;
};

/// Day indices on which an awakening occurs for a given coin face:
/// Heads -> [1], Tails -> [1..tails_days]. Day 1 is "Monday", day 2
/// "Tuesday" in display labels only.
struct AwakeningSchedule {
    CoinFace coin = CoinFace::Heads;
    std::vector<int> days;
};

AwakeningSchedule awakening_schedule(CoinFace coin, const ExperimentSpec& spec);

/// An experiment plus its canonical named events.
///
/// ERE names: heads, tails, monday_occurs, tuesday_occurs.
/// SBRE names: heads, tails, day1_star .. day<n>_star.
class BuiltExperiment {
  public:
    enum class Kind { Ere, Sbre };

    Kind kind() const noexcept { return kind_; }
    const ExperimentSpec& spec() const noexcept { return spec_; }
    const Experiment& experiment() const noexcept { return experiment_; }
    const std::vector<std::pair<std::string, Event>>& named_events() const noexcept {
        return named_;
    }

    /// Throws ProbError for an unknown name.
    const Event& event(std::string_view name) const;
    /// day_star(k): "a day-k awakening is selected as the current state".
    /// SBRE only; throws ProbError otherwise or for k outside 1..tails_days.
    const Event& day_star(int k) const;

  private:
    friend BuiltExperiment build_ere(const ExperimentSpec& spec);
    friend BuiltExperiment build_sbre(const ExperimentSpec& spec);

    BuiltExperiment(Kind kind, ExperimentSpec spec, Experiment experiment,
                    std::vector<std::pair<std::string, Event>> named)
        : kind_(kind), spec_(std::move(spec)), experiment_(std::move(experiment)),
          named_(std::move(named)) {}

    Kind kind_;
    ExperimentSpec spec_;
    Experiment experiment_;
    std::vector<std::pair<std::string, Event>> named_;
};

/// The experimenter's random experiment: a single biased coin toss.
/// Outcomes {H, T}; the day-1 awakening occurs on either face, the day-2
/// awakening occurs iff Tails.
BuiltExperiment build_ere(const ExperimentSpec& spec);

/// The awakened agent's two-stage random experiment. Stage i tosses the
/// coin; stage ii selects the current-state awakening uniformly among the
/// branch's awakenings. Outcomes {H1, T1..Tn} with P(H1) = p_heads
/// (stage-one independence) and P(Tk) = (1 - p_heads)/n (indifference
/// among subjectively indistinguishable Tails awakenings).
BuiltExperiment build_sbre(const ExperimentSpec& spec);

/// The headline exact quantities, in fixed order:
///   P_heads_ere, P_heads_given_monday_ere, P_monday_star,
///   P_heads_given_monday_star, P_tails_given_monday_star,
///   P_monday_star_given_tails.
/// The last row is omitted when P(tails) = 0 (degenerate coin), since it
/// would condition on a probability-zero event.
std::vector<std::pair<std::string, Rational>> paper_table(const ExperimentSpec& spec);

/// E[number of awakenings per trial], by enumeration of the coin branches
/// and their schedules: p*1 + (1-p)*n.
Rational expected_awakenings(const ExperimentSpec& spec);

/// E[number of Heads-branch awakenings per trial] = p*1.
Rational expected_heads_awakenings(const ExperimentSpec& spec);

} // namespace sblab
