#ifndef ATTDEL_EVENT_FORMULA_HPP
#define ATTDEL_EVENT_FORMULA_HPP

#include <memory>
#include <string>

#include "attdel/formula.hpp"

namespace attdel {

enum class EventFormulaKind { ImpliesEvent, EventImplies, Not, Or, Box };

// AST of the event language 𝓛_E: ψ⇒e, e⇒ψ, ¬, ∨, □. Embedded ψ is
// restricted to the propositional fragment of 𝓛, which keeps the
// implication tests decidable by truth table. ∧ and → are derived.
class EventFormula {
 public:
  static EventFormula implies_event(Formula psi);  // ψ => e
  static EventFormula event_implies(Formula psi);  // e => ψ
  static EventFormula negation(EventFormula f);
  static EventFormula disjunction(EventFormula lhs, EventFormula rhs);
  static EventFormula box(EventFormula f);

  static EventFormula conjunction(EventFormula lhs, EventFormula rhs) {
    return negation(disjunction(negation(std::move(lhs)),
                                negation(std::move(rhs))));
  }
  static EventFormula implies(EventFormula lhs, EventFormula rhs) {
    return disjunction(negation(std::move(lhs)), std::move(rhs));
  }
  // e ⇔ ψ
  static EventFormula event_equiv(const Formula& psi) {
    return conjunction(implies_event(psi), event_implies(psi));
  }

  EventFormulaKind kind() const { return node_->kind; }
  const Formula& embedded() const { return node_->psi; }
  const EventFormula& child() const { return *node_->lhs; }
  const EventFormula& left() const { return *node_->lhs; }
  const EventFormula& right() const { return *node_->rhs; }

  bool operator==(const EventFormula& other) const;
  bool operator!=(const EventFormula& other) const { return !(*this == other); }

 private:
  struct Node {
    EventFormulaKind kind;
    Formula psi;
    std::shared_ptr<const EventFormula> lhs, rhs;
  };
  explicit EventFormula(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// True when no Box occurs nested inside another Box; required for
// edge-wise model induction.
bool edge_fragment_check(const EventFormula& f);

bool contains_box(const EventFormula& f);

// Total number of lexical tokens in the printed form; the size measure
// used by succinctness reports.
int token_count(const EventFormula& f, const Signature& sig);

std::string to_string(const EventFormula& f, const Signature& sig);

}  // namespace attdel

#endif
