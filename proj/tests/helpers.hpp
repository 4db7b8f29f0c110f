#ifndef ATTDEL_TESTS_HELPERS_HPP
#define ATTDEL_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "attdel/formula.hpp"
#include "attdel/generators.hpp"
#include "attdel/parser.hpp"
#include "attdel/prop.hpp"

namespace attdel::testing {

inline Signature sig_pq_ab() { return Signature({"a", "b"}, {"p", "q"}); }
inline Signature sig_gp_ab() { return Signature({"a", "b"}, {"g", "p"}); }

// Plain truth-table validity over the whole universe: the independent
// oracle for prop_valid.
inline bool truth_table_valid(const Formula& f, const Signature& sig) {
  const int n = sig.universe_size();
  for (long mask = 0; mask < (1L << n); ++mask) {
    AtomSet truth(n);
    for (int u = 0; u < n; ++u) {
      if ((mask >> u) & 1L) truth.set(u);
    }
    if (!eval_propositional(f, truth)) return false;
  }
  return true;
}

// Random parseable formula AST, covering every node kind including
// constructor event terms.
inline Formula random_ast(Rng& rng, const Signature& sig, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 7);
  auto rand_agent = [&] {
    return std::uniform_int_distribution<int>(0, sig.agent_count() - 1)(rng);
  };
  auto rand_atom = [&] {
    return std::uniform_int_distribution<int>(0, sig.atom_count() - 1)(rng);
  };
  switch (pick(rng)) {
    case 0:
      return Formula::top();
    case 1:
      return Formula::atom(rand_atom());
    case 2:
      return Formula::attention(sig, rand_agent(), rand_atom());
    case 3:
      return Formula::negation(random_ast(rng, sig, depth - 1));
    case 4:
      return Formula::conjunction(random_ast(rng, sig, depth - 1),
                                  random_ast(rng, sig, depth - 1));
    case 5:
      return Formula::believes(rand_agent(), random_ast(rng, sig, depth - 1));
    case 6: {
      EventTerm term;
      term.kind = EventTerm::Kind::Named;
      term.name = "saved";
      return Formula::dynamic(std::move(term),
                              random_ast(rng, sig, depth - 1));
    }
    default: {
      EventTerm term;
      std::uniform_int_distribution<int> kind(0, 4);
      switch (kind(rng)) {
        case 0: term.kind = EventTerm::Kind::Original; break;
        case 1: term.kind = EventTerm::Kind::Principled; break;
        case 2: term.kind = EventTerm::Kind::Truthful; break;
        case 3: term.kind = EventTerm::Kind::PropAttention; break;
        default: term.kind = EventTerm::Kind::DefaultAttention; break;
      }
      LiteralConjunction ann = random_conjunction(rng, sig, 2);
      if (term.kind == EventTerm::Kind::DefaultAttention) {
        term.defaults = random_defaults(rng, sig, ann);
      }
      term.announcement = std::make_shared<const Formula>(to_formula(ann));
      return Formula::dynamic(std::move(term),
                              random_ast(rng, sig, depth - 1));
    }
  }
}

inline EventFormula random_event_ast(Rng& rng, const Signature& sig,
                                     int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 4);
  auto prop = [&] {
    Formula f = random_formula(rng, sig, 1);
    while (!is_propositional(f)) f = random_formula(rng, sig, 1);
    return f;
  };
  switch (pick(rng)) {
    case 0:
      return EventFormula::implies_event(prop());
    case 1:
      return EventFormula::event_implies(prop());
    case 2:
      return EventFormula::negation(random_event_ast(rng, sig, depth - 1));
    case 3:
      return EventFormula::disjunction(random_event_ast(rng, sig, depth - 1),
                                       random_event_ast(rng, sig, depth - 1));
    default:
      return EventFormula::box(random_event_ast(rng, sig, depth - 1));
  }
}

}  // namespace attdel::testing

#endif
