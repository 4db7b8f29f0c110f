#ifndef ATTDEL_KRIPKE_HPP
#define ATTDEL_KRIPKE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "attdel/formula.hpp"
#include "attdel/literals.hpp"
#include "attdel/signature.hpp"

namespace attdel {

// Per-agent accessibility relations stored as adjacency bitsets.
class Relations {
 public:
  Relations() = default;
  Relations(int agent_count, int state_count)
      : rows_(agent_count,
              std::vector<AtomSet>(state_count, AtomSet(state_count))) {}

  void add(AgentIndex a, int from, int to) { rows_[a][from].set(to); }
  void remove(AgentIndex a, int from, int to) { rows_[a][from].reset(to); }
  void set_row(AgentIndex a, int from, AtomSet row) {
    rows_[a][from] = std::move(row);
  }
  void clear_agent(AgentIndex a) {
    for (auto& row : rows_[a]) row.reset();
  }
  bool has(AgentIndex a, int from, int to) const {
    return rows_[a][from].test(to);
  }
  const AtomSet& successors(AgentIndex a, int from) const {
    return rows_[a][from];
  }
  int agent_count() const { return static_cast<int>(rows_.size()); }
  int state_count() const {
    return rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
  }
  std::size_t edge_count(AgentIndex a) const {
    std::size_t n = 0;
    for (const auto& row : rows_[a]) n += row.count();
    return n;
  }

  bool operator==(const Relations& other) const { return rows_ == other.rows_; }

 private:
  std::vector<std::vector<AtomSet>> rows_;  // [agent][from] -> target set
};

// Kripke model: worlds, per-agent relations, valuation over At ∪ H.
// No frame conditions are imposed.
struct KripkeModel {
  Signature sig;
  std::vector<std::string> world_ids;
  std::vector<AtomSet> valuation;  // per world, over the atom universe
  Relations rel;

  explicit KripkeModel(Signature s) : sig(std::move(s)) {}

  int world_count() const { return static_cast<int>(world_ids.size()); }
  int add_world(std::string id, AtomSet val);
  // Call once after all worlds are added, before adding edges.
  void init_relations() { rel = Relations(sig.agent_count(), world_count()); }
  int world_index(const std::string& id) const;

  bool operator==(const KripkeModel& other) const {
    return sig == other.sig && world_ids == other.world_ids &&
           valuation == other.valuation && rel == other.rel;
  }
};

struct PointedModel {
  KripkeModel model;
  int point = 0;

  const std::string& point_id() const { return model.world_ids[point]; }
};

// Event model: events with precondition formulas and per-agent relations.
// When produced by the attention constructors, preconditions are literal
// conjunctions, events are their own preconditions (pre = id) and the
// rendered precondition doubles as the event id.
struct EventModel {
  Signature sig;
  std::vector<std::string> event_ids;
  std::vector<Formula> pre;
  // Set when the precondition is a consistent conjunction of literals.
  std::vector<std::optional<LiteralConjunction>> pre_conj;
  Relations rel;

  explicit EventModel(Signature s) : sig(std::move(s)) {}

  int event_count() const { return static_cast<int>(event_ids.size()); }
  int add_event(std::string id, Formula precondition);
  void init_relations() { rel = Relations(sig.agent_count(), event_count()); }
  int event_index(const std::string& id) const;

  bool operator==(const EventModel& other) const;
};

struct MultiPointedEventModel {
  EventModel model;
  AtomSet designated;  // subset of events

  explicit MultiPointedEventModel(EventModel m)
      : model(std::move(m)), designated(model.event_count()) {}

  std::vector<int> designated_indices() const;

  bool operator==(const MultiPointedEventModel& other) const {
    return model == other.model && designated == other.designated;
  }
};

// Image of a state under an agent's relation, as state ids. Works
// uniformly for Kripke and event models.
std::vector<std::string> successors(const KripkeModel& m, AgentIndex a,
                                    const std::string& world);
std::vector<std::string> successors(const EventModel& m, AgentIndex a,
                                    const std::string& event);

}  // namespace attdel

#endif
