#include "sblab/prob.hpp"

#include <algorithm>
#include <atomic>
#include <iterator>
#include <utility>

namespace sblab {

namespace {

std::uint64_t next_tag_id() {
    static std::atomic<std::uint64_t> counter{0};
    return ++counter;
}

std::string tag_description(const ExperimentTag& tag) {
    return "'" + tag.name + "' (#" + std::to_string(tag.id) + ")";
}

void require_matching_tags(const Event& a, const Event& b, const char* op) {
    if (!(a.tag() == b.tag()))
        throw TagMismatchError(std::string(op) + ": events belong to different experiments " +
                               tag_description(a.tag()) + " vs " + tag_description(b.tag()));
}

} // namespace

std::string_view to_string(CoinFace face) {
    return face == CoinFace::Heads ? "Heads" : "Tails";
}

Outcome::Outcome(std::string label, CoinFace coin) : label_(std::move(label)) {
    attributes_.emplace("coin", coin);
}

Outcome::Outcome(std::string label, CoinFace coin, int day) : label_(std::move(label)) {
    if (day < 1)
        throw ProbError("Outcome: day attribute must be a positive integer");
    attributes_.emplace("coin", coin);
    attributes_.emplace("day", day);
}

CoinFace Outcome::coin() const {
    return std::get<CoinFace>(attributes_.at("coin"));
}

std::optional<int> Outcome::day() const {
    const auto it = attributes_.find("day");
    if (it == attributes_.end())
        return std::nullopt;
    return std::get<int>(it->second);
}

Event::Event(ExperimentTag tag, std::set<std::string> members)
    : tag_(std::move(tag)), members_(std::move(members)) {}

bool Event::subset_of(const Event& other) const {
    require_matching_tags(*this, other, "subset_of");
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                         members_.end());
}

Event intersect(const Event& a, const Event& b) {
    require_matching_tags(a, b, "intersect");
    std::set<std::string> members;
    std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(),
                          b.members_.end(), std::inserter(members, members.begin()));
    return Event(a.tag_, std::move(members));
}

Event unite(const Event& a, const Event& b) {
    require_matching_tags(a, b, "unite");
    std::set<std::string> members;
    std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                   std::inserter(members, members.begin()));
    return Event(a.tag_, std::move(members));
}

Experiment::Experiment(ExperimentTag tag, std::vector<Outcome> outcomes,
                       std::vector<Rational> weights, std::map<std::string, std::size_t> index)
    : tag_(std::move(tag)), outcomes_(std::move(outcomes)), weights_(std::move(weights)),
      index_(std::move(index)) {}

Experiment Experiment::create(std::string name,
                              std::vector<std::pair<Outcome, Rational>> weighted_outcomes) {
    std::vector<Outcome> outcomes;
    std::vector<Rational> weights;
    std::map<std::string, std::size_t> index;
    outcomes.reserve(weighted_outcomes.size());
    weights.reserve(weighted_outcomes.size());

    Rational total;
    for (auto& [outcome, weight] : weighted_outcomes) {
        if (index.count(outcome.label()) > 0)
            throw ProbError("Experiment '" + name + "': duplicate outcome label '" +
                            outcome.label() + "'");
        if (weight < Rational(0) || weight > Rational(1))
            throw ProbError("Experiment '" + name + "': probability of '" + outcome.label() +
                            "' is " + weight.str() + ", outside [0,1]");
        total += weight;
        index.emplace(outcome.label(), outcomes.size());
        outcomes.push_back(std::move(outcome));
        weights.push_back(std::move(weight));
    }
    if (total != Rational(1))
        throw ProbError("Experiment '" + name + "': probabilities sum to " + total.str() +
                        ", expected exactly 1");

    ExperimentTag tag{next_tag_id(), std::move(name)};
    return Experiment(std::move(tag), std::move(outcomes), std::move(weights), std::move(index));
}

const Outcome& Experiment::outcome(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end())
        throw ProbError("Experiment " + tag_description(tag_) + ": no outcome '" + label + "'");
    return outcomes_[it->second];
}

const Rational& Experiment::measure(const std::string& label) const {
    const auto it = index_.find(label);
    if (it == index_.end())
        throw ProbError("Experiment " + tag_description(tag_) + ": no outcome '" + label + "'");
    return weights_[it->second];
}

Event Experiment::event(const std::vector<std::string>& labels) const {
    std::set<std::string> members;
    for (const auto& label : labels) {
        if (!has_outcome(label))
            throw ProbError("Experiment " + tag_description(tag_) + ": no outcome '" + label +
                            "'");
        members.insert(label);
    }
    return Event(tag_, std::move(members));
}

Event Experiment::empty_event() const {
    return Event(tag_, {});
}

Event Experiment::full_event() const {
    std::set<std::string> members;
    for (const auto& o : outcomes_)
        members.insert(o.label());
    return Event(tag_, std::move(members));
}

Event Experiment::complement(const Event& e) const {
    require_same_tag(e, "complement");
    std::set<std::string> members;
    for (const auto& o : outcomes_)
        if (!e.contains(o.label()))
            members.insert(o.label());
    return Event(tag_, std::move(members));
}

Rational Experiment::probability(const Event& e) const {
    require_same_tag(e, "probability");
    Rational total;
    for (const auto& label : e.members())
        total += weights_[index_.at(label)];
    return total;
}

Rational Experiment::conditional(const Event& a, const Event& given) const {
    require_same_tag(a, "conditional");
    require_same_tag(given, "conditional");
    const Rational p_given = probability(given);
    if (p_given.is_zero())
        throw ZeroConditionError("conditional: conditioning event has probability zero in " +
                                 tag_description(tag_));
    return probability(intersect(a, given)) / p_given;
}

void Experiment::require_same_tag(const Event& e, const char* op) const {
    if (!(e.tag() == tag_))
        throw TagMismatchError(std::string(op) + ": event from experiment " +
                               tag_description(e.tag()) + " used with experiment " +
                               tag_description(tag_));
}

} // namespace sblab
