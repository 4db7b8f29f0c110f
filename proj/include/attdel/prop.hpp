#ifndef ATTDEL_PROP_HPP
#define ATTDEL_PROP_HPP

#include <cstdint>
#include <vector>

#include "attdel/formula.hpp"

namespace attdel {

// Three-valued atom assignment: -1 free, 0 false, 1 true.
using PartialAssignment = std::vector<std::int8_t>;

// Truth of a propositional formula under a total assignment given as the
// set of true universe atoms.
bool eval_propositional(const Formula& f, const AtomSet& truth);

// Validity of a propositional formula with some atoms pinned; free atoms
// range over both values. Splits on free atoms with short-circuit
// evaluation rather than enumerating full rows.
bool prop_valid_under(const Formula& f, const PartialAssignment& partial);

// ⊨ ψ for propositional ψ over At ∪ H. Throws NotPropositionalError when
// ψ contains a belief or dynamic modality.
bool prop_valid(const Formula& f, const Signature& sig);

// ⊨ premise → conclusion, both propositional.
bool prop_implies(const Formula& premise, const Formula& conclusion,
                  const Signature& sig);

}  // namespace attdel

#endif
