#pragma once

#include "sblab/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sblab {

class ProbError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An event was combined with, or conditioned inside, an experiment it does
/// not belong to. Events of different random experiments never mix: learning
/// "Monday" in one experiment is not evidence of "Monday*" in another, so
/// this is a hard error rather than a coercion.
class TagMismatchError : public ProbError {
  public:
    using ProbError::ProbError;
};

/// Conditioning on an event of probability zero.
class ZeroConditionError : public ProbError {
  public:
    using ProbError::ProbError;
};

enum class CoinFace { Heads, Tails };

std::string_view to_string(CoinFace face);

/// Identity of one constructed experiment. Ids are process-unique: building
/// the same experiment twice yields two distinct tags.
struct ExperimentTag {
    std::uint64_t id = 0;
    std::string name;

    friend bool operator==(const ExperimentTag& lhs, const ExperimentTag& rhs) {
        return lhs.id == rhs.id;
    }
};

using AttributeValue = std::variant<CoinFace, int>;

/// A sample-space point: a label plus attributes. Every outcome carries a
/// coin face; outcomes of the two-stage experiment also carry the selected
/// day index.
class Outcome {
  public:
    Outcome(std::string label, CoinFace coin);
    Outcome(std::string label, CoinFace coin, int day);

    const std::string& label() const noexcept { return label_; }
    CoinFace coin() const;
    std::optional<int> day() const;
    const std::map<std::string, AttributeValue>& attributes() const noexcept {
        return attributes_;
    }

  private:
    std::string label_;
    std::map<std::string, AttributeValue> attributes_;
};

/// A subset of one experiment's outcomes, identified by label. Events
/// remember which experiment they came from; every probability operation
/// checks that tag first.
class Event {
  public:
    const ExperimentTag& tag() const noexcept { return tag_; }
    const std::set<std::string>& members() const noexcept { return members_; }

    bool empty() const noexcept { return members_.empty(); }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(const std::string& label) const { return members_.count(label) > 0; }
    /// Throws TagMismatchError when the events belong to different experiments.
    bool subset_of(const Event& other) const;

    friend bool operator==(const Event& lhs, const Event& rhs) {
        return lhs.tag_ == rhs.tag_ && lhs.members_ == rhs.members_;
    }

    friend Event intersect(const Event& a, const Event& b);
    friend Event unite(const Event& a, const Event& b);

  private:
    friend class Experiment;
    Event(ExperimentTag tag, std::set<std::string> members);

    ExperimentTag tag_;
    std::set<std::string> members_;
};

Event intersect(const Event& a, const Event& b);
Event unite(const Event& a, const Event& b);

/// A finite sample space with an exact probability measure.
///
/// Construction validates the measure (unique labels, each weight in [0,1],
/// weights summing to exactly 1). Instances are immutable values afterwards
/// and safe to share across threads. Outcome order is fixed at construction
/// and used for all iteration and serialization.
class Experiment {
  public:
    static Experiment create(std::string name,
                             std::vector<std::pair<Outcome, Rational>> weighted_outcomes);

    const ExperimentTag& tag() const noexcept { return tag_; }
    const std::vector<Outcome>& outcomes() const noexcept { return outcomes_; }
    std::size_t size() const noexcept { return outcomes_.size(); }

    bool has_outcome(const std::string& label) const { return index_.count(label) > 0; }
    const Outcome& outcome(const std::string& label) const;
    const Rational& measure(const std::string& label) const;

    /// Event from explicit labels; every label must name an outcome.
    Event event(const std::vector<std::string>& labels) const;
    Event empty_event() const;
    Event full_event() const;

    template <typename Pred>
    Event event_where(Pred&& pred) const {
        std::set<std::string> members;
        for (const auto& o : outcomes_)
            if (pred(o))
                members.insert(o.label());
        return Event(tag_, std::move(members));
    }

    Event complement(const Event& e) const;

    /// Finite additivity: sum of member outcome weights.
    Rational probability(const Event& e) const;
    /// P(a | given) = P(a ∩ given) / P(given), exact.
    /// Throws ZeroConditionError when P(given) = 0.
    Rational conditional(const Event& a, const Event& given) const;

  private:
    Experiment(ExperimentTag tag, std::vector<Outcome> outcomes, std::vector<Rational> weights,
               std::map<std::string, std::size_t> index);

    void require_same_tag(const Event& e, const char* op) const;

    ExperimentTag tag_;
    std::vector<Outcome> outcomes_;
    std::vector<Rational> weights_; // parallel to outcomes_
    std::map<std::string, std::size_t> index_;
};

} // namespace sblab
