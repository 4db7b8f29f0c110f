#include "attdel/syntactic.hpp"

#include <chrono>
#include <map>

#include "attdel/errors.hpp"
#include "attdel/parallel.hpp"
#include "attdel/prop.hpp"

namespace attdel {

namespace {

// Compiled form of an event formula: a flat node table with the distinct
// embedded ψ formulas factored out so their per-event truth can be
// precomputed.
struct Compiled {
  enum class Op { ImpliesEvent, EventImplies, Not, Or, Box };
  struct Node {
    Op op;
    int psi = -1;
    int lhs = -1, rhs = -1;
  };
  std::vector<Node> nodes;
  int root = -1;
  std::vector<Formula> psis;

  // Per embedded ψ, whether ⊨ ψ → u and ⊨ ψ → ¬u for every universe
  // atom u; decides ψ ⇒ e on conjunctive events by containment.
  std::vector<AtomSet> implies_pos, implies_neg;
  // Universe atoms occurring in each ψ.
  std::vector<std::vector<int>> psi_atoms;
};

void collect_atom_indices(const Formula& f, std::vector<int>& out) {
  switch (f.kind()) {
    case FormulaKind::Top:
      return;
    case FormulaKind::Atom:
      out.push_back(f.atom_index());
      return;
    case FormulaKind::Not:
      collect_atom_indices(f.child(), out);
      return;
    case FormulaKind::And:
      collect_atom_indices(f.left(), out);
      collect_atom_indices(f.right(), out);
      return;
    default:
      throw NotPropositionalError("embedded formula must be propositional");
  }
}

Compiled compile(const EventFormula& f, const Signature& sig) {
  Compiled c;
  std::map<std::string, int> psi_index;
  auto intern = [&](const Formula& psi) {
    std::string key = to_string(psi, sig);
    auto it = psi_index.find(key);
    if (it != psi_index.end()) return it->second;
    int idx = static_cast<int>(c.psis.size());
    psi_index[key] = idx;
    c.psis.push_back(psi);
    return idx;
  };
  auto build = [&](auto&& self, const EventFormula& g) -> int {
    Compiled::Node node;
    switch (g.kind()) {
      case EventFormulaKind::ImpliesEvent:
        node.op = Compiled::Op::ImpliesEvent;
        node.psi = intern(g.embedded());
        break;
      case EventFormulaKind::EventImplies:
        node.op = Compiled::Op::EventImplies;
        node.psi = intern(g.embedded());
        break;
      case EventFormulaKind::Not:
        node.op = Compiled::Op::Not;
        node.lhs = self(self, g.child());
        break;
      case EventFormulaKind::Or:
        node.op = Compiled::Op::Or;
        node.lhs = self(self, g.left());
        node.rhs = self(self, g.right());
        break;
      case EventFormulaKind::Box:
        node.op = Compiled::Op::Box;
        node.lhs = self(self, g.child());
        break;
    }
    c.nodes.push_back(node);
    return static_cast<int>(c.nodes.size()) - 1;
  };
  c.root = build(build, f);

  const int universe = sig.universe_size();
  for (const Formula& psi : c.psis) {
    AtomSet ip(universe), in(universe);
    for (int u = 0; u < universe; ++u) {
      if (prop_implies(psi, Formula::atom(u), sig)) ip.set(u);
      if (prop_implies(psi, Formula::negation(Formula::atom(u)), sig)) {
        in.set(u);
      }
    }
    c.implies_pos.push_back(std::move(ip));
    c.implies_neg.push_back(std::move(in));
    std::vector<int> atoms;
    collect_atom_indices(psi, atoms);
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    c.psi_atoms.push_back(std::move(atoms));
  }
  return c;
}

// ψ ⇒ e on a conjunctive event.
bool implies_event_holds(const Compiled& c, int psi,
                         const LiteralConjunction& e) {
  return e.positive().is_subset_of(c.implies_pos[psi]) &&
         e.negative().is_subset_of(c.implies_neg[psi]);
}

// e ⇒ ψ on a conjunctive event.
bool event_implies_holds(const Compiled& c, int psi,
                         const LiteralConjunction& e, const Signature& sig) {
  PartialAssignment partial(sig.universe_size(), -1);
  for (int u : c.psi_atoms[psi]) {
    if (e.has_positive(u)) partial[u] = 1;
    if (e.has_negative(u)) partial[u] = 0;
  }
  return prop_valid_under(c.psis[psi], partial);
}

// --- pruned candidate enumeration -----------------------------------------

// Per-atom states assigned by the enumerator, in universe order.
enum class AtomState : std::uint8_t { Absent, Pos, Neg };

struct Enumerator {
  const Compiled& c;
  const Signature& sig;
  long cap;
  long visited = 0;
  std::vector<AtomState> state;
  int depth = 0;
  std::vector<LiteralConjunction> out;

  Enumerator(const Compiled& comp, const Signature& s, long cap_limit)
      : c(comp), sig(s), cap(cap_limit),
        state(s.universe_size(), AtomState::Absent) {}

  // Kleene evaluation: -1 unknown, 0 false, 1 true. Sound for pruning:
  // a definite answer never changes as the suffix gets assigned.
  int eval3(int node) const {
    const Compiled::Node& n = c.nodes[node];
    switch (n.op) {
      case Compiled::Op::ImpliesEvent: {
        for (int u = 0; u < depth; ++u) {
          if (state[u] == AtomState::Pos && !c.implies_pos[n.psi].test(u)) {
            return 0;
          }
          if (state[u] == AtomState::Neg && !c.implies_neg[n.psi].test(u)) {
            return 0;
          }
        }
        return depth == sig.universe_size() ? 1 : -1;
      }
      case Compiled::Op::EventImplies: {
        PartialAssignment partial(sig.universe_size(), -1);
        bool all_assigned = true;
        for (int u : c.psi_atoms[n.psi]) {
          if (u >= depth) {
            all_assigned = false;
          } else if (state[u] == AtomState::Pos) {
            partial[u] = 1;
          } else if (state[u] == AtomState::Neg) {
            partial[u] = 0;
          }
        }
        // Literals only strengthen the event, so validity is monotone.
        if (prop_valid_under(c.psis[n.psi], partial)) return 1;
        return all_assigned ? 0 : -1;
      }
      case Compiled::Op::Not: {
        int v = eval3(n.lhs);
        return v < 0 ? v : 1 - v;
      }
      case Compiled::Op::Or: {
        int l = eval3(n.lhs);
        if (l == 1) return 1;
        int r = eval3(n.rhs);
        if (r == 1) return 1;
        return (l == 0 && r == 0) ? 0 : -1;
      }
      case Compiled::Op::Box:
        return 1;  // single event, no edges
    }
    return -1;
  }

  void run() {
    if (++visited > cap) {
      throw EnumerationCapExceededError(
          "event enumeration exceeded the candidate cap");
    }
    int v = eval3(c.root);
    if (v == 0) return;
    if (depth == sig.universe_size()) {
      AtomSet pos(sig.universe_size()), neg(sig.universe_size());
      for (int u = 0; u < sig.universe_size(); ++u) {
        if (state[u] == AtomState::Pos) pos.set(u);
        if (state[u] == AtomState::Neg) neg.set(u);
      }
      out.emplace_back(std::move(pos), std::move(neg));
      return;
    }
    const int u = depth;
    for (AtomState s : {AtomState::Absent, AtomState::Pos, AtomState::Neg}) {
      state[u] = s;
      ++depth;
      run();
      --depth;
    }
    state[u] = AtomState::Absent;
  }
};

// Generic recursive satisfaction over explicit relation rows; supports
// nested Box (used by the oracle and by event_satisfies).
bool eval_at(const Compiled& c, int node,
             const std::vector<LiteralConjunction>& events,
             const std::vector<AtomSet>& rows, int e, const Signature& sig) {
  const Compiled::Node& n = c.nodes[node];
  switch (n.op) {
    case Compiled::Op::ImpliesEvent:
      return implies_event_holds(c, n.psi, events[e]);
    case Compiled::Op::EventImplies:
      return event_implies_holds(c, n.psi, events[e], sig);
    case Compiled::Op::Not:
      return !eval_at(c, n.lhs, events, rows, e, sig);
    case Compiled::Op::Or:
      return eval_at(c, n.lhs, events, rows, e, sig) ||
             eval_at(c, n.rhs, events, rows, e, sig);
    case Compiled::Op::Box: {
      const AtomSet& succ = rows[e];
      for (std::size_t f = succ.find_first(); f != AtomSet::npos;
           f = succ.find_next(f)) {
        if (!eval_at(c, n.lhs, events, rows, static_cast<int>(f), sig)) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

// Truth bit-vector over events of a Box-free subformula.
AtomSet truth_set(const Compiled& c, int node,
                  const std::vector<AtomSet>& atom_truth, int n_events) {
  const Compiled::Node& n = c.nodes[node];
  switch (n.op) {
    case Compiled::Op::ImpliesEvent:
    case Compiled::Op::EventImplies:
      return atom_truth[node];
    case Compiled::Op::Not:
      return ~truth_set(c, n.lhs, atom_truth, n_events);
    case Compiled::Op::Or:
      return truth_set(c, n.lhs, atom_truth, n_events) |
             truth_set(c, n.rhs, atom_truth, n_events);
    case Compiled::Op::Box:
      throw FragmentViolationError("Box nested inside Box");
  }
  return AtomSet(n_events);
}

// Per ⇒-atom node, its truth at every event.
std::vector<AtomSet> atom_truth_table(const Compiled& c,
                                      const std::vector<LiteralConjunction>& events,
                                      const Signature& sig, bool parallel) {
  const int n = static_cast<int>(events.size());
  std::vector<int> anodes;
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    if (c.nodes[i].op == Compiled::Op::ImpliesEvent ||
        c.nodes[i].op == Compiled::Op::EventImplies) {
      anodes.push_back(static_cast<int>(i));
    }
  }
  std::vector<std::vector<char>> buf(anodes.size(), std::vector<char>(n, 0));
  parallel_for(n, parallel, [&](long e) {
    for (std::size_t i = 0; i < anodes.size(); ++i) {
      const Compiled::Node& node = c.nodes[anodes[i]];
      buf[i][e] = node.op == Compiled::Op::ImpliesEvent
                      ? implies_event_holds(c, node.psi, events[e])
                      : event_implies_holds(c, node.psi, events[e], sig);
    }
  });
  std::vector<AtomSet> truth(c.nodes.size());
  for (std::size_t i = 0; i < anodes.size(); ++i) {
    AtomSet bits(n);
    for (int e = 0; e < n; ++e) {
      if (buf[i][e]) bits.set(e);
    }
    truth[anodes[i]] = std::move(bits);
  }
  return truth;
}

bool edgewise_pair(const Compiled& c, int node,
                   const std::vector<AtomSet>& atom_truth, int e, int f,
                   bool in_box) {
  const Compiled::Node& n = c.nodes[node];
  switch (n.op) {
    case Compiled::Op::ImpliesEvent:
    case Compiled::Op::EventImplies:
      return atom_truth[node].test(in_box ? f : e);
    case Compiled::Op::Not:
      return !edgewise_pair(c, n.lhs, atom_truth, e, f, in_box);
    case Compiled::Op::Or:
      return edgewise_pair(c, n.lhs, atom_truth, e, f, in_box) ||
             edgewise_pair(c, n.rhs, atom_truth, e, f, in_box);
    case Compiled::Op::Box:
      return edgewise_pair(c, n.lhs, atom_truth, e, f, true);
  }
  return false;
}

// Validity of a fragment-checked formula over relation rows, using the
// per-event atom truth table: Box β turns into a subset test against β's
// truth set.
bool verify_rows(const Compiled& c, int node,
                 const std::vector<AtomSet>& atom_truth,
                 const std::vector<AtomSet>& rows, AtomSet& result_out) {
  const int n = static_cast<int>(rows.size());
  auto rec = [&](auto&& self, int idx) -> AtomSet {
    const Compiled::Node& nd = c.nodes[idx];
    switch (nd.op) {
      case Compiled::Op::ImpliesEvent:
      case Compiled::Op::EventImplies:
        return atom_truth[idx];
      case Compiled::Op::Not:
        return ~self(self, nd.lhs);
      case Compiled::Op::Or:
        return self(self, nd.lhs) | self(self, nd.rhs);
      case Compiled::Op::Box: {
        AtomSet body = truth_set(c, nd.lhs, atom_truth, n);
        AtomSet ok(n);
        for (int e = 0; e < n; ++e) {
          if (rows[e].is_subset_of(body)) ok.set(e);
        }
        return ok;
      }
    }
    return AtomSet(n);
  };
  result_out = rec(rec, node);
  return static_cast<int>(result_out.count()) == n;
}

}  // namespace

bool event_satisfies(const EventModel& em, int event, const EventFormula& f) {
  if (em.sig.agent_count() != 1) {
    throw NotSingleAgentError(
        "event-language satisfaction requires a single-agent event model");
  }
  return event_satisfies_agent(em, event, f, 0);
}

bool event_satisfies_agent(const EventModel& em, int event,
                           const EventFormula& f, AgentIndex agent) {
  for (int e = 0; e < em.event_count(); ++e) {
    if (!em.pre_conj[e] && !is_propositional(em.pre[e])) {
      throw NotPropositionalError("event preconditions must be propositional");
    }
  }
  Compiled c = compile(f, em.sig);
  std::vector<LiteralConjunction> events;
  std::vector<AtomSet> rows;
  for (int e = 0; e < em.event_count(); ++e) {
    rows.push_back(em.rel.successors(agent, e));
  }
  // Non-conjunctive propositional preconditions are handled by the
  // general formula route below.
  bool all_conj = true;
  for (int e = 0; e < em.event_count(); ++e) {
    if (!em.pre_conj[e]) {
      all_conj = false;
      break;
    }
  }
  if (all_conj) {
    for (int e = 0; e < em.event_count(); ++e) events.push_back(*em.pre_conj[e]);
    return eval_at(c, c.root, events, rows, event, em.sig);
  }
  // General preconditions: evaluate the implication tests by truth table
  // on the raw formulas.
  auto rec = [&](auto&& self, const EventFormula& g, int e) -> bool {
    switch (g.kind()) {
      case EventFormulaKind::ImpliesEvent:
        return prop_implies(g.embedded(), em.pre[e], em.sig);
      case EventFormulaKind::EventImplies:
        return prop_implies(em.pre[e], g.embedded(), em.sig);
      case EventFormulaKind::Not:
        return !self(self, g.child(), e);
      case EventFormulaKind::Or:
        return self(self, g.left(), e) || self(self, g.right(), e);
      case EventFormulaKind::Box: {
        const AtomSet& succ = rows[e];
        for (std::size_t f2 = succ.find_first(); f2 != AtomSet::npos;
             f2 = succ.find_next(f2)) {
          if (!self(self, g.child(), static_cast<int>(f2))) return false;
        }
        return true;
      }
    }
    return false;
  };
  return rec(rec, f, event);
}

bool literal_event_satisfies(const LiteralConjunction& event,
                             const EventFormula& f, const Signature& sig) {
  Compiled c = compile(f, sig);
  std::vector<LiteralConjunction> events{event};
  std::vector<AtomSet> rows{AtomSet(1)};
  return eval_at(c, c.root, events, rows, 0, sig);
}

std::vector<LiteralConjunction> enumerate_events(const EventFormula& psi_E,
                                                 const Signature& sig,
                                                 long cap, bool parallel) {
  (void)parallel;  // the pruned walk is sequential and deterministic
  Compiled c = compile(psi_E, sig);
  Enumerator en(c, sig, cap);
  en.run();
  return std::move(en.out);
}

std::vector<LiteralConjunction> enumerate_events_serial(
    const EventFormula& psi_E, const Signature& sig, long cap) {
  const int universe = sig.universe_size();
  std::vector<LiteralConjunction> out;
  std::vector<AtomState> state(universe, AtomState::Absent);
  long visited = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (++visited > cap) {
      throw EnumerationCapExceededError(
          "event enumeration exceeded the candidate cap");
    }
    if (depth == universe) {
      AtomSet pos(universe), neg(universe);
      for (int u = 0; u < universe; ++u) {
        if (state[u] == AtomState::Pos) pos.set(u);
        if (state[u] == AtomState::Neg) neg.set(u);
      }
      LiteralConjunction e(std::move(pos), std::move(neg));
      if (literal_event_satisfies(e, psi_E, sig)) out.push_back(std::move(e));
      return;
    }
    for (AtomState s : {AtomState::Absent, AtomState::Pos, AtomState::Neg}) {
      state[depth] = s;
      self(self, depth + 1);
    }
    state[depth] = AtomState::Absent;
  };
  rec(rec, 0);
  return out;
}

std::vector<AtomSet> edgewise_relation(
    const std::vector<LiteralConjunction>& events, const EventFormula& psi,
    const Signature& sig, bool parallel) {
  if (!edge_fragment_check(psi)) {
    throw FragmentViolationError("edge formula nests Box inside Box");
  }
  Compiled c = compile(psi, sig);
  std::vector<AtomSet> atom_truth = atom_truth_table(c, events, sig, parallel);
  const int n = static_cast<int>(events.size());
  std::vector<AtomSet> rows(n, AtomSet(n));
  parallel_for(n, parallel, [&](long e) {
    for (int f = 0; f < n; ++f) {
      if (edgewise_pair(c, c.root, atom_truth, static_cast<int>(e), f,
                        false)) {
        rows[e].set(f);
      }
    }
  });
  return rows;
}

bool relation_satisfies(const std::vector<LiteralConjunction>& events,
                        const std::vector<AtomSet>& rows,
                        const EventFormula& psi, const Signature& sig) {
  Compiled c = compile(psi, sig);
  for (int e = 0; e < static_cast<int>(events.size()); ++e) {
    if (!eval_at(c, c.root, events, rows, e, sig)) return false;
  }
  return true;
}

namespace {

// Resugaring matcher for ⋀_i clause_i where clause is γ, Box β, or
// α → Box β with Box-free α, β, γ.
void flatten_conjuncts(const EventFormula& f, std::vector<EventFormula>& out) {
  if (f.kind() == EventFormulaKind::Not &&
      f.child().kind() == EventFormulaKind::Or &&
      f.child().left().kind() == EventFormulaKind::Not &&
      f.child().right().kind() == EventFormulaKind::Not) {
    flatten_conjuncts(f.child().left().child(), out);
    flatten_conjuncts(f.child().right().child(), out);
    return;
  }
  out.push_back(f);
}

bool is_principle_clause(const EventFormula& f) {
  if (!contains_box(f)) return true;
  if (f.kind() == EventFormulaKind::Box) return !contains_box(f.child());
  // α → Box β desugared as Or(Not(α), Box β), with the Box possibly on
  // either side.
  if (f.kind() == EventFormulaKind::Or) {
    const EventFormula& l = f.left();
    const EventFormula& r = f.right();
    auto guard_ok = [](const EventFormula& g) {
      return g.kind() == EventFormulaKind::Not && !contains_box(g.child());
    };
    if (guard_ok(l) && r.kind() == EventFormulaKind::Box &&
        !contains_box(r.child())) {
      return true;
    }
    if (guard_ok(r) && l.kind() == EventFormulaKind::Box &&
        !contains_box(l.child())) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_conjunctive_principle(const EventFormula& psi) {
  std::vector<EventFormula> clauses;
  flatten_conjuncts(psi, clauses);
  for (const EventFormula& clause : clauses) {
    if (!is_principle_clause(clause)) return false;
  }
  return true;
}

InduceResult induce(const SyntacticEventModel& g, const Signature& sig,
                    const InduceOptions& options) {
  if (static_cast<int>(g.psi_agents.size()) != sig.agent_count()) {
    throw Error("syntactic event model must give one edge formula per agent");
  }
  for (const EventFormula& psi : g.psi_agents) {
    if (!edge_fragment_check(psi)) {
      throw FragmentViolationError("edge formula nests Box inside Box");
    }
  }
  std::vector<LiteralConjunction> events =
      enumerate_events(g.psi_E, sig, options.cap, options.parallel);
  if (events.empty()) {
    throw Error("psi_E admits no events (event models must be non-empty)");
  }

  EventModel em(sig);
  for (const LiteralConjunction& e : events) {
    em.add_event(e.render(sig), to_formula(e));
  }
  em.init_relations();

  InduceResult out{MultiPointedEventModel(std::move(em)), {}, {}};
  for (int a = 0; a < sig.agent_count(); ++a) {
    const EventFormula& psi = g.psi_agents[a];
    Compiled c = compile(psi, sig);
    std::vector<AtomSet> atom_truth =
        atom_truth_table(c, events, sig, options.parallel);
    const int n = static_cast<int>(events.size());
    std::vector<AtomSet> rows(n, AtomSet(n));
    parallel_for(n, options.parallel, [&](long e) {
      for (int f = 0; f < n; ++f) {
        if (edgewise_pair(c, c.root, atom_truth, static_cast<int>(e), f,
                          false)) {
          rows[e].set(f);
        }
      }
    });
    if (!is_conjunctive_principle(psi)) {
      out.warnings.push_back(
          "agent " + sig.agent_name(a) +
          ": edge formula is not in conjunctive-principle shape; the "
          "edge-wise relation may not be the largest valid one (cross-check "
          "with the brute-force oracle)");
    }
    AtomSet valid_at(n);
    bool ok = verify_rows(c, c.root, atom_truth, rows, valid_at);
    out.verified.push_back(ok);
    if (!ok) {
      out.warnings.push_back(
          "agent " + sig.agent_name(a) +
          ": edge formula is not valid over the edge-wise relation; " +
          (options.keep_edgewise
               ? "keeping the edge-wise relation as requested"
               : "falling back to the empty relation"));
      if (!options.keep_edgewise) {
        for (auto& row : rows) row.reset();
      }
    }
    for (int e = 0; e < n; ++e) {
      out.model.model.rel.set_row(a, e, std::move(rows[e]));
    }
  }

  if (g.psi_Ed) {
    for (int e = 0; e < static_cast<int>(events.size()); ++e) {
      if (literal_event_satisfies(events[e], *g.psi_Ed, sig)) {
        out.model.designated.set(e);
      }
    }
    if (out.model.designated.none()) {
      out.warnings.push_back("psi_Ed selects no designated events");
    }
  } else {
    out.model.designated.set();
  }
  return out;
}

BruteforceResult largest_relation_bruteforce(
    const std::vector<LiteralConjunction>& events, const EventFormula& psi,
    const Signature& sig) {
  const int n = static_cast<int>(events.size());
  if (n * n > 20) {
    throw TooLargeError("brute-force relation search needs |E|^2 <= 20");
  }
  Compiled c = compile(psi, sig);
  const int bits = n * n;
  std::vector<AtomSet> rows(n, AtomSet(n));
  auto fill = [&](unsigned long mask) {
    for (int e = 0; e < n; ++e) {
      rows[e].reset();
      for (int f = 0; f < n; ++f) {
        if ((mask >> (e * n + f)) & 1ul) rows[e].set(f);
      }
    }
  };
  auto valid = [&]() {
    for (int e = 0; e < n; ++e) {
      if (!eval_at(c, c.root, events, rows, e, sig)) return false;
    }
    return true;
  };
  unsigned long union_mask = 0;
  bool any_valid = false;
  for (unsigned long mask = 0; mask < (1ul << bits); ++mask) {
    fill(mask);
    if (valid()) {
      any_valid = true;
      union_mask |= mask;
    }
  }
  BruteforceResult out;
  out.relation.assign(n, AtomSet(n));
  if (any_valid) {
    fill(union_mask);
    if (valid()) {
      out.has_unique_largest = true;
      out.relation = rows;
    }
  }
  return out;
}

SpecInstance binary_attention_spec(int n) {
  if (n < 1) throw Error("family parameter must be at least 1");
  std::vector<std::string> agents;
  for (int i = 1; i <= n; ++i) agents.push_back(std::to_string(i));
  Signature sig(std::move(agents), {"q"});
  const AtomIndex q = sig.atom_index("q");

  EventFormula equiv_top = EventFormula::event_equiv(Formula::top());
  EventFormula q_part = EventFormula::disjunction(
      EventFormula::event_implies(Formula::atom(q)),
      EventFormula::event_implies(Formula::negation(Formula::atom(q))));
  EventFormula psi_E = q_part;
  std::vector<EventFormula> psi_agents;
  for (int a = 0; a < sig.agent_count(); ++a) {
    Formula h = Formula::attention(sig, a, q);
    psi_E = EventFormula::conjunction(
        std::move(psi_E),
        EventFormula::disjunction(
            EventFormula::event_implies(h),
            EventFormula::event_implies(Formula::negation(h))));
  }
  psi_E = EventFormula::disjunction(equiv_top, std::move(psi_E));
  for (int a = 0; a < sig.agent_count(); ++a) {
    Formula h = Formula::attention(sig, a, q);
    EventFormula attentive = EventFormula::implies(
        EventFormula::event_implies(h),
        EventFormula::box(EventFormula::event_implies(Formula::atom(q))));
    EventFormula inertia = EventFormula::implies(
        EventFormula::negation(EventFormula::event_implies(h)),
        EventFormula::box(EventFormula::event_equiv(Formula::top())));
    psi_agents.push_back(
        EventFormula::conjunction(std::move(attentive), std::move(inertia)));
  }
  return SpecInstance{std::move(sig),
                      SyntacticEventModel{std::move(psi_E),
                                          std::move(psi_agents), std::nullopt}};
}

SpecInstance subset_growth_spec(int n) {
  if (n < 1) throw Error("family parameter must be at least 1");
  std::vector<std::string> atoms;
  for (int i = 1; i <= n; ++i) {
    std::string name = "p";
    if (i < 10) name += "0";
    name += std::to_string(i);
    atoms.push_back(name);
  }
  Signature sig({"a"}, std::move(atoms));

  // Anchoring the folds on neutral units keeps the token count exactly
  // affine in n, wrapper tokens included.
  EventFormula psi_E = EventFormula::event_implies(Formula::top());
  EventFormula psi_a =
      EventFormula::negation(EventFormula::event_implies(Formula::top()));
  for (int i = 0; i < n; ++i) {
    Formula p = Formula::atom(i);
    Formula hp = Formula::attention(sig, 0, i);
    EventFormula allowed = EventFormula::conjunction(
        EventFormula::negation(
            EventFormula::event_implies(Formula::negation(p))),
        EventFormula::conjunction(
            EventFormula::negation(EventFormula::event_implies(hp)),
            EventFormula::negation(
                EventFormula::event_implies(Formula::negation(hp)))));
    psi_E = EventFormula::conjunction(std::move(psi_E), std::move(allowed));
    EventFormula gain = EventFormula::conjunction(
        EventFormula::negation(EventFormula::event_implies(p)),
        EventFormula::box(EventFormula::event_implies(p)));
    psi_a = EventFormula::disjunction(std::move(psi_a), std::move(gain));
  }
  return SpecInstance{
      std::move(sig),
      SyntacticEventModel{std::move(psi_E), {std::move(psi_a)},
                          std::nullopt}};
}

int description_size(const SyntacticEventModel& g, const Signature& sig) {
  int size = token_count(g.psi_E, sig);
  for (const EventFormula& psi : g.psi_agents) size += token_count(psi, sig);
  if (g.psi_Ed) size += token_count(*g.psi_Ed, sig);
  return size;
}

std::vector<SuccinctnessRow> succinctness_report(SuccinctFamily family,
                                                 int n_max, long cap) {
  std::vector<SuccinctnessRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    SpecInstance inst = family == SuccinctFamily::BinaryAttention
                            ? binary_attention_spec(n)
                            : subset_growth_spec(n);
    const int size = description_size(inst.model, inst.sig);
    auto t0 = std::chrono::steady_clock::now();
    InduceOptions opts;
    opts.cap = cap;
    InduceResult res = induce(inst.model, inst.sig, opts);
    auto t1 = std::chrono::steady_clock::now();
    double millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rows.push_back({n, size, res.model.model.event_count(), millis});
    if (rows.back().events < (1 << n)) {
      throw Error("induced event count fell below 2^n");
    }
  }
  // Description sizes are linear in n by construction.
  for (std::size_t i = 2; i < rows.size(); ++i) {
    int d1 = rows[i].size_tokens - rows[i - 1].size_tokens;
    int d0 = rows[i - 1].size_tokens - rows[i - 2].size_tokens;
    if (d1 != d0) throw Error("description size is not linear in n");
  }
  return rows;
}

}  // namespace attdel
