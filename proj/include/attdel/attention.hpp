#ifndef ATTDEL_ATTENTION_HPP
#define ATTDEL_ATTENTION_HPP

#include <vector>

#include "attdel/kripke.hpp"

namespace attdel {

// The three binary-attention event models: the explicit construction
// with (i,J)-shaped events and a precondition map, the principle-based
// reformulation of it (Basic Attentiveness + Inertia, events are their
// own preconditions), and the truthful variant where announcements are
// true and attentive agents also learn that they were attentive.
enum class BinaryVariant { Original, Principled, Truthful };

// h_a abbreviates the conjunction of h(a,p) over all atoms of the
// signature, so binary models share the atom vocabulary of the rest of
// the toolkit. Keep At small for these.
Formula attentive_everything(const Signature& sig, AgentIndex a);

MultiPointedEventModel binary_attention_model(const Formula& announcement,
                                              BinaryVariant variant,
                                              const Signature& sig);

// The propositional-attention event model F(φ): one event per subset of
// the announced literals together with every attention pattern over it;
// edges by Attentiveness and Inertia. φ must be a non-empty consistent
// conjunction of propositional literals.
MultiPointedEventModel propositional_attention_model(
    const LiteralConjunction& announcement, const Signature& sig);

// The default-attention event model Ed(φ, d): unattended announced atoms
// are filled in by one agent's default values per event; edges by
// Attentiveness and Defaulting. A Top default constrains the target to
// leave the atom untouched.
MultiPointedEventModel default_attention_model(
    const LiteralConjunction& announcement, const DefaultMap& defaults,
    const Signature& sig);

// The skip event: a single ⊤ event with universal loops. Used as the
// model of the empty announcement.
MultiPointedEventModel skip_model(const Signature& sig);

// Whether the precondition-matching bijection exists and preserves every
// edge in both directions. Preconditions within each model must be
// pairwise distinct (canonically rendered); otherwise
// PreconditionsNotDistinctError is thrown.
bool isomorphic(const EventModel& lhs, const EventModel& rhs);

// Per agent, the set of announced atoms the agent attends to at the
// designated world: S_a = {p ∈ At(φ) : h(a,p) ∈ V(w)}.
struct AttentionConfig {
  std::vector<AtomSet> attended;  // per agent, over the atom universe slots
};
AttentionConfig attention_config(const PointedModel& pm,
                                 const LiteralConjunction& announcement);

// Builds the event model denoted by a constructor term. Empty F/Ed
// announcements elaborate to the skip model. Named terms must be
// resolved beforehand.
MultiPointedEventModel elaborate(const EventTerm& term, const Signature& sig);

}  // namespace attdel

#endif
