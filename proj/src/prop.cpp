#include "attdel/prop.hpp"

#include "attdel/errors.hpp"

namespace attdel {

namespace {

// -1 unknown, 0 false, 1 true.
int eval3(const Formula& f, const PartialAssignment& a) {
  switch (f.kind()) {
    case FormulaKind::Top:
      return 1;
    case FormulaKind::Atom:
      return a[f.atom_index()];
    case FormulaKind::Not: {
      int v = eval3(f.child(), a);
      return v < 0 ? v : 1 - v;
    }
    case FormulaKind::And: {
      int l = eval3(f.left(), a);
      if (l == 0) return 0;
      int r = eval3(f.right(), a);
      if (r == 0) return 0;
      return (l == 1 && r == 1) ? 1 : -1;
    }
    default:
      throw NotPropositionalError("formula contains a modality");
  }
}

void collect_universe_atoms(const Formula& f, std::vector<int>& out) {
  switch (f.kind()) {
    case FormulaKind::Top:
      return;
    case FormulaKind::Atom:
      out.push_back(f.atom_index());
      return;
    case FormulaKind::Not:
      collect_universe_atoms(f.child(), out);
      return;
    case FormulaKind::And:
      collect_universe_atoms(f.left(), out);
      collect_universe_atoms(f.right(), out);
      return;
    default:
      throw NotPropositionalError("formula contains a modality");
  }
}

bool valid_rec(const Formula& f, PartialAssignment& a,
               const std::vector<int>& atoms, std::size_t next) {
  int v = eval3(f, a);
  if (v == 1) return true;
  if (v == 0) return false;
  while (next < atoms.size() && a[atoms[next]] >= 0) ++next;
  // All atoms pinned yet still unknown cannot happen for propositional f.
  int u = atoms[next];
  for (int bit : {0, 1}) {
    a[u] = static_cast<std::int8_t>(bit);
    bool ok = valid_rec(f, a, atoms, next + 1);
    a[u] = -1;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool eval_propositional(const Formula& f, const AtomSet& truth) {
  switch (f.kind()) {
    case FormulaKind::Top:
      return true;
    case FormulaKind::Atom:
      return truth.test(f.atom_index());
    case FormulaKind::Not:
      return !eval_propositional(f.child(), truth);
    case FormulaKind::And:
      return eval_propositional(f.left(), truth) &&
             eval_propositional(f.right(), truth);
    default:
      throw NotPropositionalError("formula contains a modality");
  }
}

bool prop_valid_under(const Formula& f, const PartialAssignment& partial) {
  std::vector<int> atoms;
  collect_universe_atoms(f, atoms);
  PartialAssignment a = partial;
  return valid_rec(f, a, atoms, 0);
}

bool prop_valid(const Formula& f, const Signature& sig) {
  PartialAssignment a(sig.universe_size(), -1);
  return prop_valid_under(f, a);
}

bool prop_implies(const Formula& premise, const Formula& conclusion,
                  const Signature& sig) {
  return prop_valid(Formula::implies(premise, conclusion), sig);
}

}  // namespace attdel
