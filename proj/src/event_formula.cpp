#include "attdel/event_formula.hpp"

#include "attdel/errors.hpp"
#include "attdel/parser.hpp"

namespace attdel {

EventFormula EventFormula::implies_event(Formula psi) {
  if (!is_propositional(psi)) {
    throw NotPropositionalError("embedded formula of =>e must be propositional");
  }
  auto node = std::make_shared<Node>();
  node->kind = EventFormulaKind::ImpliesEvent;
  node->psi = std::move(psi);
  return EventFormula{std::move(node)};
}

EventFormula EventFormula::event_implies(Formula psi) {
  if (!is_propositional(psi)) {
    throw NotPropositionalError("embedded formula of e=> must be propositional");
  }
  auto node = std::make_shared<Node>();
  node->kind = EventFormulaKind::EventImplies;
  node->psi = std::move(psi);
  return EventFormula{std::move(node)};
}

EventFormula EventFormula::negation(EventFormula f) {
  auto node = std::make_shared<Node>();
  node->kind = EventFormulaKind::Not;
  node->lhs = std::make_shared<const EventFormula>(std::move(f));
  return EventFormula{std::move(node)};
}

EventFormula EventFormula::disjunction(EventFormula lhs, EventFormula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = EventFormulaKind::Or;
  node->lhs = std::make_shared<const EventFormula>(std::move(lhs));
  node->rhs = std::make_shared<const EventFormula>(std::move(rhs));
  return EventFormula{std::move(node)};
}

EventFormula EventFormula::box(EventFormula f) {
  auto node = std::make_shared<Node>();
  node->kind = EventFormulaKind::Box;
  node->lhs = std::make_shared<const EventFormula>(std::move(f));
  return EventFormula{std::move(node)};
}

bool EventFormula::operator==(const EventFormula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case EventFormulaKind::ImpliesEvent:
    case EventFormulaKind::EventImplies:
      return embedded() == other.embedded();
    case EventFormulaKind::Not:
    case EventFormulaKind::Box:
      return child() == other.child();
    case EventFormulaKind::Or:
      return left() == other.left() && right() == other.right();
  }
  return false;
}

namespace {

bool box_ok(const EventFormula& f, bool inside_box) {
  switch (f.kind()) {
    case EventFormulaKind::ImpliesEvent:
    case EventFormulaKind::EventImplies:
      return true;
    case EventFormulaKind::Not:
      return box_ok(f.child(), inside_box);
    case EventFormulaKind::Or:
      return box_ok(f.left(), inside_box) && box_ok(f.right(), inside_box);
    case EventFormulaKind::Box:
      return !inside_box && box_ok(f.child(), true);
  }
  return false;
}

}  // namespace

bool edge_fragment_check(const EventFormula& f) { return box_ok(f, false); }

bool contains_box(const EventFormula& f) {
  switch (f.kind()) {
    case EventFormulaKind::ImpliesEvent:
    case EventFormulaKind::EventImplies:
      return false;
    case EventFormulaKind::Not:
    case EventFormulaKind::Box:
      return f.kind() == EventFormulaKind::Box || contains_box(f.child());
    case EventFormulaKind::Or:
      return contains_box(f.left()) || contains_box(f.right());
  }
  return false;
}

namespace {

// Precedence for printing: primaries 4, ~/box 3, | 1.
int precedence(const EventFormula& f) {
  switch (f.kind()) {
    case EventFormulaKind::Or:
      return 1;
    case EventFormulaKind::Not:
    case EventFormulaKind::Box:
      return 3;
    default:
      return 4;
  }
}

std::string print(const EventFormula& f, const Signature& sig, int required) {
  std::string out;
  switch (f.kind()) {
    case EventFormulaKind::ImpliesEvent:
      out = "(" + to_string(f.embedded(), sig) + ")=>e";
      break;
    case EventFormulaKind::EventImplies:
      out = "e=>(" + to_string(f.embedded(), sig) + ")";
      break;
    case EventFormulaKind::Not:
      out = "~" + print(f.child(), sig, 3);
      break;
    case EventFormulaKind::Or:
      out = print(f.left(), sig, 2) + " | " + print(f.right(), sig, 1);
      break;
    case EventFormulaKind::Box:
      out = "box " + print(f.child(), sig, 3);
      break;
  }
  if (precedence(f) < required) return "(" + out + ")";
  return out;
}

}  // namespace

std::string to_string(const EventFormula& f, const Signature& sig) {
  return print(f, sig, 0);
}

int token_count(const EventFormula& f, const Signature& sig) {
  return count_tokens(to_string(f, sig));
}

}  // namespace attdel
