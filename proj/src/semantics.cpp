#include "attdel/semantics.hpp"

#include "attdel/attention.hpp"
#include "attdel/errors.hpp"
#include "attdel/parallel.hpp"

namespace attdel {

namespace {

bool sat(const KripkeModel& m, int w, const Formula& f);

Applicability applicability_at(const KripkeModel& m, int w,
                               const MultiPointedEventModel& me) {
  Applicability out;
  for (int e = 0; e < me.model.event_count(); ++e) {
    if (!me.designated.test(e)) continue;
    if (sat(m, w, me.model.pre[e])) {
      ++out.matches;
      if (out.matches == 1) {
        out.event = e;
      } else {
        out.event.reset();
      }
    }
  }
  return out;
}

ProductResult product_at(const KripkeModel& m, int w,
                         const MultiPointedEventModel& me, bool parallel);

bool sat(const KripkeModel& m, int w, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top:
      return true;
    case FormulaKind::Atom:
      return m.valuation[w].test(f.atom_index());
    case FormulaKind::Not:
      return !sat(m, w, f.child());
    case FormulaKind::And:
      return sat(m, w, f.left()) && sat(m, w, f.right());
    case FormulaKind::Believes: {
      const AtomSet& succ = m.rel.successors(f.agent(), w);
      for (std::size_t v = succ.find_first(); v != AtomSet::npos;
           v = succ.find_next(v)) {
        if (!sat(m, static_cast<int>(v), f.child())) return false;
      }
      return true;
    }
    case FormulaKind::Dyn: {
      MultiPointedEventModel me = elaborate(f.term(), m.sig);
      Applicability app = applicability_at(m, w, me);
      if (!app.event) return true;  // vacuous when not applicable
      ProductResult updated = product_at(m, w, me, false);
      return sat(updated.pm.model, updated.pm.point, f.child());
    }
  }
  return false;
}

ProductResult product_at(const KripkeModel& m, int w,
                         const MultiPointedEventModel& me, bool parallel) {
  if (!(m.sig == me.model.sig)) {
    throw Error("product update: signatures differ");
  }
  Applicability app = applicability_at(m, w, me);
  if (!app.event) {
    throw NotApplicableError(
        app.matches == 0
            ? "event model not applicable: no designated precondition holds"
            : "event model not applicable: multiple designated preconditions "
              "hold");
  }

  const long nw = m.world_count();
  const long ne = me.model.event_count();
  std::vector<char> keep(nw * ne, 0);
  parallel_for(nw * ne, parallel, [&](long i) {
    const int v = static_cast<int>(i / ne);
    const int e = static_cast<int>(i % ne);
    keep[i] = sat(m, v, me.model.pre[e]) ? 1 : 0;
  });

  ProductResult out{PointedModel{KripkeModel(m.sig), 0}, {}};
  KripkeModel& pm = out.pm.model;
  std::vector<int> index(nw * ne, -1);
  for (long i = 0; i < nw * ne; ++i) {
    if (!keep[i]) continue;
    const int v = static_cast<int>(i / ne);
    const int e = static_cast<int>(i % ne);
    index[i] = pm.add_world(
        "(" + m.world_ids[v] + "," + me.model.event_ids[e] + ")",
        m.valuation[v]);
    out.origin.emplace_back(v, e);
  }
  pm.init_relations();
  const long kept = pm.world_count();
  parallel_for(kept, parallel, [&](long i) {
    const auto [v, e] = out.origin[i];
    for (long j = 0; j < kept; ++j) {
      const auto [u, f] = out.origin[j];
      for (int a = 0; a < m.sig.agent_count(); ++a) {
        if (m.rel.has(a, v, u) && me.model.rel.has(a, e, f)) {
          pm.rel.add(a, static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
  });
  out.pm.point = index[static_cast<long>(w) * ne + *app.event];
  return out;
}

}  // namespace

Applicability applicability(const PointedModel& pm,
                            const MultiPointedEventModel& me) {
  return applicability_at(pm.model, pm.point, me);
}

std::optional<std::string> applicable(const PointedModel& pm,
                                      const MultiPointedEventModel& me) {
  Applicability app = applicability(pm, me);
  if (!app.event) return std::nullopt;
  return me.model.event_ids[*app.event];
}

bool satisfies(const PointedModel& pm, const Formula& f) {
  return sat(pm.model, pm.point, f);
}

ProductResult product_update_traced(const PointedModel& pm,
                                    const MultiPointedEventModel& me) {
  return product_at(pm.model, pm.point, me, true);
}

PointedModel product_update(const PointedModel& pm,
                            const MultiPointedEventModel& me) {
  return product_update_traced(pm, me).pm;
}

ProductResult product_update_serial(const PointedModel& pm,
                                    const MultiPointedEventModel& me) {
  return product_at(pm.model, pm.point, me, false);
}

PointedModel prune_reachable(const PointedModel& pm) {
  const KripkeModel& m = pm.model;
  AtomSet reached(m.world_count());
  std::vector<int> stack{pm.point};
  reached.set(pm.point);
  while (!stack.empty()) {
    int w = stack.back();
    stack.pop_back();
    for (int a = 0; a < m.sig.agent_count(); ++a) {
      const AtomSet& succ = m.rel.successors(a, w);
      for (std::size_t v = succ.find_first(); v != AtomSet::npos;
           v = succ.find_next(v)) {
        if (!reached.test(v)) {
          reached.set(v);
          stack.push_back(static_cast<int>(v));
        }
      }
    }
  }
  PointedModel out{KripkeModel(m.sig), 0};
  std::vector<int> index(m.world_count(), -1);
  for (int w = 0; w < m.world_count(); ++w) {
    if (reached.test(w)) {
      index[w] = out.model.add_world(m.world_ids[w], m.valuation[w]);
    }
  }
  out.model.init_relations();
  for (int a = 0; a < m.sig.agent_count(); ++a) {
    for (int w = 0; w < m.world_count(); ++w) {
      if (index[w] < 0) continue;
      const AtomSet& succ = m.rel.successors(a, w);
      for (std::size_t v = succ.find_first(); v != AtomSet::npos;
           v = succ.find_next(v)) {
        out.model.rel.add(a, index[w], index[static_cast<int>(v)]);
      }
    }
  }
  out.point = index[pm.point];
  return out;
}

}  // namespace attdel
