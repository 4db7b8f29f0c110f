#ifndef ATTDEL_SYNTACTIC_HPP
#define ATTDEL_SYNTACTIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "attdel/event_formula.hpp"
#include "attdel/kripke.hpp"

namespace attdel {

// A syntactic event model: the induced semantic model's events are the
// normal-form conjunctions satisfying psi_E, its edges are described by
// one event-language formula per agent, and psi_Ed (when present) carves
// out the designated events.
struct SyntacticEventModel {
  EventFormula psi_E;
  std::vector<EventFormula> psi_agents;  // one per agent, signature order
  std::optional<EventFormula> psi_Ed;
};

// Satisfaction of 𝓛_E formulas in a single-agent event model.
// Preconditions must be propositional.
bool event_satisfies(const EventModel& em, int event, const EventFormula& f);

// Same, reading one agent's relation of a multi-agent model (the
// single-agent view used to state per-agent validity).
bool event_satisfies_agent(const EventModel& em, int event,
                           const EventFormula& f, AgentIndex agent);

// Satisfaction at a single event with no edges: the reading of φ ⊨ ψ used
// for event-set and designated-set membership.
bool literal_event_satisfies(const LiteralConjunction& event,
                             const EventFormula& f, const Signature& sig);

// All normal-form conjunctions over At ∪ H satisfying psi_E, in a fixed
// order. The production enumerator prunes with a three-valued partial
// evaluation; the serial reference filters every candidate through
// literal_event_satisfies. `cap` bounds the candidates examined
// (EnumerationCapExceededError).
std::vector<LiteralConjunction> enumerate_events(const EventFormula& psi_E,
                                                 const Signature& sig,
                                                 long cap, bool parallel = true);
std::vector<LiteralConjunction> enumerate_events_serial(
    const EventFormula& psi_E, const Signature& sig, long cap);

// The edge-wise reading of an edge formula: (e,f) is related iff psi
// holds when ⇒-atoms read e and each Box body reads f. For formulas in
// conjunctive-principle shape this is the unique largest relation of the
// induced-model definition. Requires edge_fragment_check.
std::vector<AtomSet> edgewise_relation(
    const std::vector<LiteralConjunction>& events, const EventFormula& psi,
    const Signature& sig, bool parallel = true);

// Validity of psi over the given events and relation rows (Box reads the
// rows).
bool relation_satisfies(const std::vector<LiteralConjunction>& events,
                        const std::vector<AtomSet>& rows,
                        const EventFormula& psi, const Signature& sig);

// Whether psi is a conjunction of clauses of the shapes γ, Box β, or
// α → Box β with Box-free α, β, γ. Edge-wise maximality is guaranteed
// for this fragment.
bool is_conjunctive_principle(const EventFormula& psi);

struct InduceOptions {
  long cap = 1000000;
  // Keep the edge-wise relation when the verification pass fails instead
  // of falling back to the empty relation.
  bool keep_edgewise = false;
  bool parallel = true;
};

struct InduceResult {
  MultiPointedEventModel model;
  std::vector<std::string> warnings;
  std::vector<bool> verified;  // per agent: (E,Q_a,id) ⊨ ψ_a after induction
};

// Induces the semantic event model: enumerate events from psi_E, compute
// each Q_a edge-wise, verify validity (falling back to the empty
// relation on failure), and select designated events by psi_Ed (all
// events when absent).
InduceResult induce(const SyntacticEventModel& g, const Signature& sig,
                    const InduceOptions& options = {});

// Ground-truth largest relation by enumerating every Q ⊆ E²: keeps the
// relations valid at every event and reports the unique ⊆-maximum when
// it exists, the empty relation otherwise. |E|² must be at most 20.
struct BruteforceResult {
  bool has_unique_largest = false;
  std::vector<AtomSet> relation;
};
BruteforceResult largest_relation_bruteforce(
    const std::vector<LiteralConjunction>& events, const EventFormula& psi,
    const Signature& sig);

// The two succinct families used by the succinctness report.
struct SpecInstance {
  Signature sig;
  SyntacticEventModel model;
};

// Induces the n-agent binary-attention model (2^{n+1}+1 events) from an
// O(n)-token description.
SpecInstance binary_attention_spec(int n);

// Single-agent family over n atoms whose induced model has the positive
// subsets of the atoms as events and an edge wherever the target gains
// an atom the source lacks. The edge formula is meaningful under the
// edge-wise reading; the strict largest-relation semantics of the
// induced-model definition admits no valid relation for it.
SpecInstance subset_growth_spec(int n);

int description_size(const SyntacticEventModel& g, const Signature& sig);

enum class SuccinctFamily { BinaryAttention, SubsetGrowth };

struct SuccinctnessRow {
  int n;
  int size_tokens;
  int events;
  double millis;
};

// Per n: description size, induced event count and wall time. Checks
// that event counts are at least 2^n and that description sizes grow
// linearly (zero second differences).
std::vector<SuccinctnessRow> succinctness_report(SuccinctFamily family,
                                                 int n_max,
                                                 long cap = 4000000);

}  // namespace attdel

#endif
