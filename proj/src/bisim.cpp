#include "attdel/bisim.hpp"

#include "attdel/errors.hpp"

namespace attdel {

std::vector<AtomSet> greatest_bisimulation(const KripkeModel& lhs,
                                           const KripkeModel& rhs) {
  if (!(lhs.sig == rhs.sig)) {
    throw Error("bisimulation requires a shared signature");
  }
  const int nl = lhs.world_count();
  const int nr = rhs.world_count();
  std::vector<AtomSet> z(nl, AtomSet(nr));
  for (int w = 0; w < nl; ++w) {
    for (int v = 0; v < nr; ++v) {
      if (lhs.valuation[w] == rhs.valuation[v]) z[w].set(v);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < nl; ++w) {
      for (std::size_t v = z[w].find_first(); v != AtomSet::npos;
           v = z[w].find_next(v)) {
        bool ok = true;
        for (int a = 0; a < lhs.sig.agent_count() && ok; ++a) {
          const AtomSet& ws = lhs.rel.successors(a, w);
          const AtomSet& vs = rhs.rel.successors(a, static_cast<int>(v));
          // Forth: every lhs move is matched by some related rhs move.
          for (std::size_t w2 = ws.find_first(); w2 != AtomSet::npos;
               w2 = ws.find_next(w2)) {
            if (!(z[w2] & vs).any()) {
              ok = false;
              break;
            }
          }
          // Back: every rhs move is matched.
          for (std::size_t v2 = vs.find_first(); ok && v2 != AtomSet::npos;
               v2 = vs.find_next(v2)) {
            bool matched = false;
            for (std::size_t w2 = ws.find_first(); w2 != AtomSet::npos;
                 w2 = ws.find_next(w2)) {
              if (z[w2].test(v2)) {
                matched = true;
                break;
              }
            }
            if (!matched) ok = false;
          }
        }
        if (!ok) {
          z[w].reset(v);
          changed = true;
        }
      }
    }
  }
  return z;
}

BisimResult bisimilar(const PointedModel& lhs, const PointedModel& rhs) {
  std::vector<AtomSet> z = greatest_bisimulation(lhs.model, rhs.model);
  BisimResult out;
  out.bisimilar = z[lhs.point].test(rhs.point);
  if (out.bisimilar) {
    for (int w = 0; w < lhs.model.world_count(); ++w) {
      for (std::size_t v = z[w].find_first(); v != AtomSet::npos;
           v = z[w].find_next(v)) {
        out.witness.emplace_back(lhs.model.world_ids[w],
                                 rhs.model.world_ids[v]);
      }
    }
  }
  return out;
}

}  // namespace attdel
