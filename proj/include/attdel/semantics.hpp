#ifndef ATTDEL_SEMANTICS_HPP
#define ATTDEL_SEMANTICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "attdel/formula.hpp"
#include "attdel/kripke.hpp"

namespace attdel {

// Outcome of the applicability test: the unique designated event whose
// precondition holds at the point, if there is exactly one. Zero and
// two-or-more matches both leave `event` empty; `matches` tells them
// apart for diagnostics.
struct Applicability {
  std::optional<int> event;
  int matches = 0;
};

Applicability applicability(const PointedModel& pm,
                            const MultiPointedEventModel& me);

// Spec-facing form: the unique applicable designated event id, or empty.
std::optional<std::string> applicable(const PointedModel& pm,
                                      const MultiPointedEventModel& me);

// Satisfaction per the attention-DEL semantics. A dynamic modality whose
// event model is not applicable (no unique designated match) holds
// vacuously.
bool satisfies(const PointedModel& pm, const Formula& f);

// Product update with pair provenance: origin[i] is the (world, event)
// index pair a product world came from.
struct ProductResult {
  PointedModel pm;
  std::vector<std::pair<int, int>> origin;
};

ProductResult product_update_traced(const PointedModel& pm,
                                    const MultiPointedEventModel& me);
PointedModel product_update(const PointedModel& pm,
                            const MultiPointedEventModel& me);
// Reference implementation without the OpenMP kernels; results are
// identical to product_update.
ProductResult product_update_serial(const PointedModel& pm,
                                    const MultiPointedEventModel& me);

// Restriction to the worlds reachable from the point (any agent).
PointedModel prune_reachable(const PointedModel& pm);

}  // namespace attdel

#endif
