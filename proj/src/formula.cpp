#include "attdel/formula.hpp"

#include "attdel/errors.hpp"
#include "attdel/kripke.hpp"

namespace attdel {

Formula Formula::top() {
  static const Formula t{std::make_shared<const Node>(FormulaKind::Top)};
  return t;
}

Formula Formula::atom(AtomIndex u) {
  auto node = std::make_shared<Node>(FormulaKind::Atom);
  node->index = u;
  return Formula{std::shared_ptr<const Node>(std::move(node))};
}

Formula Formula::negation(Formula f) {
  auto node = std::make_shared<Node>(FormulaKind::Not);
  node->lhs = std::move(f.node_);
  return Formula{std::shared_ptr<const Node>(std::move(node))};
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>(FormulaKind::And);
  node->lhs = std::move(lhs.node_);
  node->rhs = std::move(rhs.node_);
  return Formula{std::shared_ptr<const Node>(std::move(node))};
}

Formula Formula::believes(AgentIndex a, Formula body) {
  auto node = std::make_shared<Node>(FormulaKind::Believes);
  node->index = a;
  node->lhs = std::move(body.node_);
  return Formula{std::shared_ptr<const Node>(std::move(node))};
}

Formula Formula::dynamic(EventTerm term, Formula body) {
  auto node = std::make_shared<Node>(FormulaKind::Dyn);
  node->lhs = std::move(body.node_);
  node->term = std::make_shared<const EventTerm>(std::move(term));
  return Formula{std::shared_ptr<const Node>(std::move(node))};
}

bool EventTerm::operator==(const EventTerm& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Named:
      return name == other.name;
    case Kind::Inline:
      return inline_model == other.inline_model ||
             (inline_model && other.inline_model &&
              *inline_model == *other.inline_model);
    case Kind::DefaultAttention:
      if (!(defaults == other.defaults)) return false;
      [[fallthrough]];
    default:
      return announcement == other.announcement ||
             (announcement && other.announcement &&
              *announcement == *other.announcement);
  }
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case FormulaKind::Top:
      return true;
    case FormulaKind::Atom:
      return node_->index == other.node_->index;
    case FormulaKind::Not:
      return child() == other.child();
    case FormulaKind::And:
      return left() == other.left() && right() == other.right();
    case FormulaKind::Believes:
      return node_->index == other.node_->index && child() == other.child();
    case FormulaKind::Dyn:
      return *node_->term == *other.node_->term && child() == other.child();
  }
  return false;
}

Formula to_formula(const LiteralConjunction& c) {
  if (c.is_top()) return Formula::top();
  std::vector<Formula> lits;
  for (int u = 0; u < c.universe_size(); ++u) {
    if (c.has_positive(u)) {
      lits.push_back(Formula::atom(u));
    } else if (c.has_negative(u)) {
      lits.push_back(Formula::negation(Formula::atom(u)));
    }
  }
  Formula out = lits.back();
  for (auto it = std::next(lits.rbegin()); it != lits.rend(); ++it) {
    out = Formula::conjunction(*it, std::move(out));
  }
  return out;
}

namespace {

void collect_literals(const Formula& f, const Signature& sig, AtomSet& pos,
                      AtomSet& neg) {
  switch (f.kind()) {
    case FormulaKind::Top:
      return;
    case FormulaKind::Atom:
      if (neg.test(f.atom_index())) {
        throw ContradictoryError(
            "conjunction contains an atom and its negation: " +
            sig.universe_atom_name(f.atom_index()));
      }
      pos.set(f.atom_index());
      return;
    case FormulaKind::Not:
      if (f.child().kind() != FormulaKind::Atom) {
        throw NotAConjunctionError("negation of a non-atom in a conjunction");
      }
      if (pos.test(f.child().atom_index())) {
        throw ContradictoryError(
            "conjunction contains an atom and its negation: " +
            sig.universe_atom_name(f.child().atom_index()));
      }
      neg.set(f.child().atom_index());
      return;
    case FormulaKind::And:
      collect_literals(f.left(), sig, pos, neg);
      collect_literals(f.right(), sig, pos, neg);
      return;
    default:
      throw NotAConjunctionError(
          "formula is not built from literals, & and T");
  }
}

}  // namespace

LiteralConjunction normalize(const Formula& f, const Signature& sig) {
  AtomSet pos(sig.universe_size()), neg(sig.universe_size());
  collect_literals(f, sig, pos, neg);
  return LiteralConjunction(std::move(pos), std::move(neg));
}

bool is_literal_conjunction(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Atom:
      return true;
    case FormulaKind::Not:
      return f.child().kind() == FormulaKind::Atom;
    case FormulaKind::And:
      return is_literal_conjunction(f.left()) &&
             is_literal_conjunction(f.right());
    default:
      return false;
  }
}

namespace {

void collect_atoms(const Formula& f, const Signature& sig, AtomSet& out) {
  switch (f.kind()) {
    case FormulaKind::Top:
      return;
    case FormulaKind::Atom:
      out.set(sig.atom_of(f.atom_index()));
      return;
    case FormulaKind::Not:
    case FormulaKind::Believes:
      collect_atoms(f.child(), sig, out);
      return;
    case FormulaKind::And:
      collect_atoms(f.left(), sig, out);
      collect_atoms(f.right(), sig, out);
      return;
    case FormulaKind::Dyn:
      if (f.term().announcement) {
        collect_atoms(*f.term().announcement, sig, out);
      }
      collect_atoms(f.child(), sig, out);
      return;
  }
}

}  // namespace

AtomSet atoms_of(const Formula& f, const Signature& sig) {
  AtomSet out(sig.atom_count());
  collect_atoms(f, sig, out);
  return out;
}

bool is_propositional(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Atom:
      return true;
    case FormulaKind::Not:
      return is_propositional(f.child());
    case FormulaKind::And:
      return is_propositional(f.left()) && is_propositional(f.right());
    default:
      return false;
  }
}

namespace {

// Node precedence for printing: primaries 4, unary prefixes 3, & is 2.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::And:
      return 2;
    case FormulaKind::Not:
    case FormulaKind::Dyn:
      return 3;
    default:
      return 4;
  }
}

std::string print(const Formula& f, const Signature& sig, int required) {
  std::string out;
  switch (f.kind()) {
    case FormulaKind::Top:
      out = "T";
      break;
    case FormulaKind::Atom:
      out = sig.universe_atom_name(f.atom_index());
      break;
    case FormulaKind::Not:
      out = "~" + print(f.child(), sig, 3);
      break;
    case FormulaKind::And:
      out = print(f.left(), sig, 3) + " & " + print(f.right(), sig, 2);
      break;
    case FormulaKind::Believes:
      out = "B(" + sig.agent_name(f.agent()) + ", " +
            print(f.child(), sig, 0) + ")";
      break;
    case FormulaKind::Dyn:
      out = "[" + to_string(f.term(), sig) + "] " + print(f.child(), sig, 3);
      break;
  }
  if (precedence(f) < required) return "(" + out + ")";
  return out;
}

}  // namespace

std::string to_string(const Formula& f, const Signature& sig) {
  return print(f, sig, 0);
}

std::string to_string(const EventTerm& term, const Signature& sig) {
  switch (term.kind) {
    case EventTerm::Kind::Original:
      return "E(" + to_string(*term.announcement, sig) + ")";
    case EventTerm::Kind::Principled:
      return "E'(" + to_string(*term.announcement, sig) + ")";
    case EventTerm::Kind::Truthful:
      return "E''(" + to_string(*term.announcement, sig) + ")";
    case EventTerm::Kind::PropAttention:
      return "F(" + to_string(*term.announcement, sig) + ")";
    case EventTerm::Kind::DefaultAttention: {
      std::string out = "Ed(" + to_string(*term.announcement, sig) + ";";
      bool first = true;
      for (const auto& [key, value] : term.defaults.entries()) {
        out += first ? " " : ", ";
        first = false;
        out += sig.agent_name(key.first) + ":" + sig.atom_name(key.second) +
               "=" + (value == Default::Positive ? "+" : "-");
      }
      return out + ")";
    }
    case EventTerm::Kind::Named:
      return "@" + term.name;
    case EventTerm::Kind::Inline:
      return "@{inline}";
  }
  return {};
}

}  // namespace attdel
