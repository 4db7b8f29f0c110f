#ifndef ATTDEL_FORMULA_HPP
#define ATTDEL_FORMULA_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "attdel/literals.hpp"
#include "attdel/signature.hpp"

namespace attdel {

struct MultiPointedEventModel;
class Formula;

// Default value an agent adopts for an unattended announced atom:
// believe it, believe its negation, or keep the prior belief.
enum class Default { Positive, Negative, Top };

// Per (agent, atom) default values. Entries default to Top, so the map is
// total on any agent/atom rectangle by construction.
class DefaultMap {
 public:
  DefaultMap() = default;

  void set(AgentIndex a, AtomIndex p, Default d) {
    if (d == Default::Top) {
      entries_.erase({a, p});
    } else {
      entries_[{a, p}] = d;
    }
  }
  Default get(AgentIndex a, AtomIndex p) const {
    auto it = entries_.find({a, p});
    return it == entries_.end() ? Default::Top : it->second;
  }
  const std::map<std::pair<AgentIndex, AtomIndex>, Default>& entries() const {
    return entries_;
  }
  bool operator==(const DefaultMap& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::map<std::pair<AgentIndex, AtomIndex>, Default> entries_;
};

// The event-model argument of a dynamic modality: one of the five
// attention constructors, a named model resolved externally, or an
// inline multi-pointed event model supplied programmatically.
struct EventTerm {
  enum class Kind {
    Original,     // Def-3.1-style explicit model, grammar token E(...)
    Principled,   // E'(...)
    Truthful,     // E''(...)
    PropAttention,  // F(...)
    DefaultAttention,  // Ed(...; ...)
    Named,        // @name
    Inline,
  };

  Kind kind;
  // Announcement for the five constructors. The binary family (E, E', E'')
  // accepts any formula through the library; the concrete grammar only
  // produces conjunctions of literals.
  std::shared_ptr<const Formula> announcement;
  DefaultMap defaults;                        // DefaultAttention only
  std::string name;                           // Named only
  std::shared_ptr<const MultiPointedEventModel> inline_model;  // Inline only

  bool operator==(const EventTerm& other) const;
};

enum class FormulaKind { Top, Atom, Not, And, Believes, Dyn };

// Immutable AST of the language 𝓛. Atoms cover both propositional and
// attention atoms via the universe index of the ambient Signature;
// disjunction and implication are derived (¬, ∧) forms.
class Formula {
 public:
  Formula() : Formula(top()) {}

  static Formula top();
  static Formula atom(AtomIndex u);
  static Formula attention(const Signature& sig, AgentIndex a, AtomIndex p) {
    return atom(sig.attention_atom(a, p));
  }
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula believes(AgentIndex a, Formula body);
  static Formula dynamic(EventTerm term, Formula body);

  // Derived connectives.
  static Formula disjunction(Formula lhs, Formula rhs) {
    return negation(conjunction(negation(std::move(lhs)),
                                negation(std::move(rhs))));
  }
  static Formula implies(Formula lhs, Formula rhs) {
    return negation(conjunction(std::move(lhs), negation(std::move(rhs))));
  }

  FormulaKind kind() const { return node_->kind; }
  AtomIndex atom_index() const { return node_->index; }
  AgentIndex agent() const { return node_->index; }
  Formula child() const { return Formula{node_->lhs}; }  // Not, Believes, Dyn
  Formula left() const { return Formula{node_->lhs}; }   // And
  Formula right() const { return Formula{node_->rhs}; }  // And
  const EventTerm& term() const { return *node_->term; }

  bool is_top() const { return kind() == FormulaKind::Top; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    FormulaKind kind;
    int index = -1;  // atom universe index, or agent index for Believes
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::shared_ptr<const EventTerm> term;
    explicit Node(FormulaKind k) : kind(k) {}
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Folds a literal conjunction back into a formula (right-associated, in
// the fixed literal order); ⊤ for the empty conjunction.
Formula to_formula(const LiteralConjunction& c);

// The unique normal form of a formula built from literals, ∧ and ⊤.
// Throws NotAConjunctionError / ContradictoryError.
LiteralConjunction normalize(const Formula& f, const Signature& sig);

// Whether normalize would succeed.
bool is_literal_conjunction(const Formula& f);

// Set of propositional atoms occurring syntactically; the p of h(a,p)
// counts as occurring.
AtomSet atoms_of(const Formula& f, const Signature& sig);

// No Believes and no Dyn anywhere.
bool is_propositional(const Formula& f);

// Canonical concrete syntax (parse ∘ print is the identity on ASTs).
std::string to_string(const Formula& f, const Signature& sig);
std::string to_string(const EventTerm& term, const Signature& sig);

}  // namespace attdel

#endif
