#ifndef ATTDEL_BISIM_HPP
#define ATTDEL_BISIM_HPP

#include <string>
#include <utility>
#include <vector>

#include "attdel/kripke.hpp"

namespace attdel {

// Greatest bisimulation between two models, as a row-per-lhs-world
// bitset over rhs worlds. Computed by naive fixed-point refinement from
// the atom-agreement pairs. Both models must share the signature.
std::vector<AtomSet> greatest_bisimulation(const KripkeModel& lhs,
                                           const KripkeModel& rhs);

struct BisimResult {
  bool bisimilar = false;
  // Witnessing relation (all pairs of the greatest bisimulation) when
  // the points are linked.
  std::vector<std::pair<std::string, std::string>> witness;
};

BisimResult bisimilar(const PointedModel& lhs, const PointedModel& rhs);

}  // namespace attdel

#endif
