#include "sblab/experiments.hpp"

#include <numeric>
#include <utility>

namespace sblab {

namespace {

constexpr int kMaxTailsDays = 1'000'000;

std::string day_star_name(int k) {
    return "day" + std::to_string(k) + "_star";
}

} // namespace

void ExperimentSpec::validate() const {
    if (p_heads < Rational(0) || p_heads > Rational(1))
        throw InvalidSpecError("spec: p_heads is " + p_heads.str() + ", outside [0,1]");
    if (tails_days < 1)
        throw InvalidSpecError("spec: tails_days must be at least 1, got " +
                               std::to_string(tails_days));
    if (tails_days > kMaxTailsDays)
        throw InvalidSpecError("spec: tails_days must be at most " +
                               std::to_string(kMaxTailsDays) + ", got " +
                               std::to_string(tails_days));
}

AwakeningSchedule awakening_schedule(CoinFace coin, const ExperimentSpec& spec) {
    spec.validate();
    AwakeningSchedule schedule{coin, {}};
    if (coin == CoinFace::Heads) {
        schedule.days = {1};
    } else {
        schedule.days.resize(static_cast<std::size_t>(spec.tails_days));
        std::iota(schedule.days.begin(), schedule.days.end(), 1);
    }
    return schedule;
}

const Event& BuiltExperiment::event(std::string_view name) const {
    for (const auto& [event_name, event] : named_)
        if (event_name == name)
            return event;
    throw ProbError("BuiltExperiment '" + experiment_.tag().name + "': no named event '" +
                    std::string(name) + "'");
}

const Event& BuiltExperiment::day_star(int k) const {
    if (kind_ != Kind::Sbre)
        throw ProbError("day_star: only defined for SBRE experiments");
    if (k < 1 || k > spec_.tails_days)
        throw ProbError("day_star: day index " + std::to_string(k) + " outside 1.." +
                        std::to_string(spec_.tails_days));
    return event(day_star_name(k));
}

BuiltExperiment build_ere(const ExperimentSpec& spec) {
    spec.validate();
    const Rational p_tails = Rational(1) - spec.p_heads;

    auto experiment = Experiment::create("ERE", {
                                                    {Outcome("H", CoinFace::Heads), spec.p_heads},
                                                    {Outcome("T", CoinFace::Tails), p_tails},
                                                });

    std::vector<std::pair<std::string, Event>> named;
    named.emplace_back("heads", experiment.event({"H"}));
    named.emplace_back("tails", experiment.event({"T"}));
    // A day-1 awakening occurs whatever the toss; a day-2 awakening occurs
    // iff Tails.
    named.emplace_back("monday_occurs", experiment.full_event());
    named.emplace_back("tuesday_occurs", experiment.event({"T"}));

    return BuiltExperiment(BuiltExperiment::Kind::Ere, spec, std::move(experiment),
                           std::move(named));
}

BuiltExperiment build_sbre(const ExperimentSpec& spec) {
    spec.validate();
    const int n = spec.tails_days;
    const Rational tails_share = (Rational(1) - spec.p_heads) / Rational(n);

    std::vector<std::pair<Outcome, Rational>> weighted;
    weighted.reserve(static_cast<std::size_t>(n) + 1);
    weighted.emplace_back(Outcome("H1", CoinFace::Heads, 1), spec.p_heads);
    for (int k = 1; k <= n; ++k)
        weighted.emplace_back(Outcome("T" + std::to_string(k), CoinFace::Tails, k), tails_share);

    auto experiment = Experiment::create("SBRE", std::move(weighted));

    std::vector<std::pair<std::string, Event>> named;
    named.emplace_back("heads",
                       experiment.event_where([](const Outcome& o) { return o.coin() == CoinFace::Heads; }));
    named.emplace_back("tails",
                       experiment.event_where([](const Outcome& o) { return o.coin() == CoinFace::Tails; }));
    for (int k = 1; k <= n; ++k)
        named.emplace_back(day_star_name(k),
                           experiment.event_where([k](const Outcome& o) { return o.day() == k; }));

    return BuiltExperiment(BuiltExperiment::Kind::Sbre, spec, std::move(experiment),
                           std::move(named));
}

std::vector<std::pair<std::string, Rational>> paper_table(const ExperimentSpec& spec) {
    spec.validate();
    const auto ere = build_ere(spec);
    const auto sbre = build_sbre(spec);
    const auto& e = ere.experiment();
    const auto& s = sbre.experiment();

    std::vector<std::pair<std::string, Rational>> rows;
    rows.emplace_back("P_heads_ere", e.probability(ere.event("heads")));
    rows.emplace_back("P_heads_given_monday_ere",
                      e.conditional(ere.event("heads"), ere.event("monday_occurs")));
    rows.emplace_back("P_monday_star", s.probability(sbre.day_star(1)));
    rows.emplace_back("P_heads_given_monday_star",
                      s.conditional(sbre.event("heads"), sbre.day_star(1)));
    rows.emplace_back("P_tails_given_monday_star",
                      s.conditional(sbre.event("tails"), sbre.day_star(1)));
    if (!s.probability(sbre.event("tails")).is_zero())
        rows.emplace_back("P_monday_star_given_tails",
                          s.conditional(sbre.day_star(1), sbre.event("tails")));
    return rows;
}

Rational expected_awakenings(const ExperimentSpec& spec) {
    const auto ere = build_ere(spec);
    Rational total;
    for (const auto& o : ere.experiment().outcomes()) {
        const auto schedule = awakening_schedule(o.coin(), spec);
        total += ere.experiment().measure(o.label()) *
                 Rational(static_cast<long long>(schedule.days.size()));
    }
    return total;
}

Rational expected_heads_awakenings(const ExperimentSpec& spec) {
    const auto ere = build_ere(spec);
    Rational total;
    for (const auto& o : ere.experiment().outcomes()) {
        if (o.coin() != CoinFace::Heads)
            continue;
        const auto schedule = awakening_schedule(o.coin(), spec);
        total += ere.experiment().measure(o.label()) *
                 Rational(static_cast<long long>(schedule.days.size()));
    }
    return total;
}

} // namespace sblab
