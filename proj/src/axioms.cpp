#include "attdel/axioms.hpp"

#include <algorithm>
#include <set>

#include "attdel/attention.hpp"
#include "attdel/bisim.hpp"
#include "attdel/errors.hpp"
#include "attdel/io.hpp"
#include "attdel/parallel.hpp"

namespace attdel {

const char* axiom_name(AxiomName name) {
  switch (name) {
    case AxiomName::AtomReduction: return "atom-reduction";
    case AxiomName::NegationReduction: return "negation-reduction";
    case AxiomName::ConjunctionReduction: return "conjunction-reduction";
    case AxiomName::BeliefReduction: return "belief-reduction";
    case AxiomName::BeliefReductionDefault: return "belief-reduction-default";
  }
  return "?";
}

namespace {

Formula fold_conjunction(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula out = parts.back();
  for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it) {
    out = Formula::conjunction(*it, out);
  }
  return out;
}

std::vector<int> announced(const LiteralConjunction& phi,
                           const Signature& sig) {
  std::vector<int> out;
  for (int p = 0; p < sig.atom_count(); ++p) {
    if (phi.mentions(p)) out.push_back(p);
  }
  return out;
}

// ⋀_{p∈S} h_a p ∧ ⋀_{p∈At(φ)∖S} ¬h_a p; the corrupted variant drops the
// negative conjuncts.
Formula attention_case(const Signature& sig, AgentIndex a,
                       const std::vector<int>& ann, unsigned S,
                       bool corrupted) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < ann.size(); ++i) {
    if ((S >> i) & 1u) parts.push_back(Formula::attention(sig, a, ann[i]));
  }
  if (!corrupted) {
    for (std::size_t i = 0; i < ann.size(); ++i) {
      if (!((S >> i) & 1u)) {
        parts.push_back(
            Formula::negation(Formula::attention(sig, a, ann[i])));
      }
    }
  }
  return fold_conjunction(parts);
}

LiteralConjunction restrict_announcement(const LiteralConjunction& phi,
                                         const std::vector<int>& ann,
                                         unsigned S, const Signature& sig) {
  LiteralConjunction out = LiteralConjunction::top(sig);
  for (std::size_t i = 0; i < ann.size(); ++i) {
    if ((S >> i) & 1u) out = out.with(ann[i], phi.has_positive(ann[i]));
  }
  return out;
}

// φ_Sd: the attended literals plus the agent's non-Top defaults for the
// unattended announced atoms.
LiteralConjunction defaulted_announcement(const LiteralConjunction& phi,
                                          const std::vector<int>& ann,
                                          unsigned S, AgentIndex a,
                                          const DefaultMap& d,
                                          const Signature& sig) {
  LiteralConjunction out = restrict_announcement(phi, ann, S, sig);
  for (std::size_t i = 0; i < ann.size(); ++i) {
    if ((S >> i) & 1u) continue;
    switch (d.get(a, ann[i])) {
      case Default::Positive: out = out.with(ann[i], true); break;
      case Default::Negative: out = out.with(ann[i], false); break;
      case Default::Top: break;
    }
  }
  return out;
}

DefaultMap restrict_defaults(const DefaultMap& d,
                             const LiteralConjunction& announcement) {
  DefaultMap out;
  for (const auto& [key, value] : d.entries()) {
    if (announcement.mentions(key.second)) {
      out.set(key.first, key.second, value);
    }
  }
  return out;
}

EventTerm plain_term(const LiteralConjunction& ann) {
  EventTerm term;
  term.kind = EventTerm::Kind::PropAttention;
  term.announcement = std::make_shared<const Formula>(to_formula(ann));
  return term;
}

EventTerm default_term(const LiteralConjunction& ann, const DefaultMap& d) {
  EventTerm term;
  term.kind = EventTerm::Kind::DefaultAttention;
  term.announcement = std::make_shared<const Formula>(to_formula(ann));
  term.defaults = restrict_defaults(d, ann);
  return term;
}

// ⋀_{p∈S} h_a p: what the agent learns about her own attention. Guards
// the belief on the reduced announcement so that only successor worlds
// compatible with the learnt attention are constrained.
Formula attention_guard(const Signature& sig, AgentIndex a,
                        const std::vector<int>& ann, unsigned S) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < ann.size(); ++i) {
    if ((S >> i) & 1u) parts.push_back(Formula::attention(sig, a, ann[i]));
  }
  return fold_conjunction(parts);
}

// The case analysis shared by the two belief schemas: a conjunction over
// every S ⊆ At(φ) of (attention case → B_a(attention guard → [term] ψ)).
Formula belief_rhs(const Signature& sig, const LiteralConjunction& phi,
                   AgentIndex a, const Formula& psi,
                   const std::optional<DefaultMap>& d, bool corrupted) {
  const std::vector<int> ann = announced(phi, sig);
  std::vector<Formula> cases;
  for (unsigned S = 0; S < (1u << ann.size()); ++S) {
    LiteralConjunction inner_ann =
        d ? defaulted_announcement(phi, ann, S, a, *d, sig)
          : restrict_announcement(phi, ann, S, sig);
    EventTerm inner = d ? default_term(inner_ann, *d) : plain_term(inner_ann);
    cases.push_back(Formula::implies(
        attention_case(sig, a, ann, S, corrupted),
        Formula::believes(
            a, Formula::implies(
                   attention_guard(sig, a, ann, S),
                   Formula::dynamic(std::move(inner), psi)))));
  }
  return Formula::implies(to_formula(phi), fold_conjunction(cases));
}

}  // namespace

AxiomInstance instantiate_axiom(AxiomName name, const LiteralConjunction& phi,
                                AgentIndex agent, const Formula& psi,
                                const std::optional<DefaultMap>& defaults,
                                const Signature& sig, bool corrupted) {
  const Formula phif = to_formula(phi);
  EventTerm term = defaults && name != AxiomName::BeliefReduction
                       ? default_term(phi, *defaults)
                       : plain_term(phi);
  switch (name) {
    case AxiomName::AtomReduction: {
      if (psi.kind() != FormulaKind::Atom) {
        throw Error("atom-reduction needs an atom argument");
      }
      return {name, Formula::dynamic(term, psi), Formula::implies(phif, psi)};
    }
    case AxiomName::NegationReduction: {
      Formula lhs = Formula::dynamic(term, Formula::negation(psi));
      Formula rhs = Formula::implies(
          phif, Formula::negation(Formula::dynamic(term, psi)));
      return {name, std::move(lhs), std::move(rhs)};
    }
    case AxiomName::ConjunctionReduction: {
      if (psi.kind() != FormulaKind::And) {
        throw Error("conjunction-reduction needs a conjunction argument");
      }
      Formula lhs = Formula::dynamic(term, psi);
      Formula rhs =
          Formula::conjunction(Formula::dynamic(term, psi.left()),
                               Formula::dynamic(term, psi.right()));
      return {name, std::move(lhs), std::move(rhs)};
    }
    case AxiomName::BeliefReduction: {
      Formula lhs =
          Formula::dynamic(plain_term(phi), Formula::believes(agent, psi));
      return {name, std::move(lhs),
              belief_rhs(sig, phi, agent, psi, std::nullopt, corrupted)};
    }
    case AxiomName::BeliefReductionDefault: {
      if (!defaults) {
        throw MissingDefaultsError(
            "belief-reduction-default needs a default map");
      }
      Formula lhs = Formula::dynamic(default_term(phi, *defaults),
                                     Formula::believes(agent, psi));
      return {name, std::move(lhs),
              belief_rhs(sig, phi, agent, psi, defaults, corrupted)};
    }
  }
  throw Error("unreachable");
}

namespace {

struct ReduceCtx {
  const Signature& sig;
  long steps = 0;
};

Formula eliminate(EventTerm::Kind kind, const LiteralConjunction& ann,
                  const DefaultMap& d, const Formula& psi, ReduceCtx& ctx) {
  ++ctx.steps;
  const bool with_defaults = kind == EventTerm::Kind::DefaultAttention;
  switch (psi.kind()) {
    case FormulaKind::Top:
      return Formula::top();
    case FormulaKind::Atom:
      return Formula::implies(to_formula(ann), psi);
    case FormulaKind::Not:
      return Formula::implies(
          to_formula(ann),
          Formula::negation(eliminate(kind, ann, d, psi.child(), ctx)));
    case FormulaKind::And:
      return Formula::conjunction(eliminate(kind, ann, d, psi.left(), ctx),
                                  eliminate(kind, ann, d, psi.right(), ctx));
    case FormulaKind::Believes: {
      const AgentIndex b = psi.agent();
      const std::vector<int> ann_atoms = announced(ann, ctx.sig);
      std::vector<Formula> cases;
      for (unsigned S = 0; S < (1u << ann_atoms.size()); ++S) {
        LiteralConjunction inner =
            with_defaults
                ? defaulted_announcement(ann, ann_atoms, S, b, d, ctx.sig)
                : restrict_announcement(ann, ann_atoms, S, ctx.sig);
        cases.push_back(Formula::implies(
            attention_case(ctx.sig, b, ann_atoms, S, false),
            Formula::believes(
                b, Formula::implies(
                       attention_guard(ctx.sig, b, ann_atoms, S),
                       eliminate(kind, inner, d, psi.child(), ctx)))));
      }
      return Formula::implies(to_formula(ann), fold_conjunction(cases));
    }
    case FormulaKind::Dyn:
      throw Error("internal: unreduced dynamic modality below a reduction");
  }
  throw Error("unreachable");
}

Formula reduce_rec(const Formula& f, ReduceCtx& ctx) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Atom:
      return f;
    case FormulaKind::Not:
      return Formula::negation(reduce_rec(f.child(), ctx));
    case FormulaKind::And:
      return Formula::conjunction(reduce_rec(f.left(), ctx),
                                  reduce_rec(f.right(), ctx));
    case FormulaKind::Believes:
      return Formula::believes(f.agent(), reduce_rec(f.child(), ctx));
    case FormulaKind::Dyn: {
      const EventTerm& term = f.term();
      if (term.kind != EventTerm::Kind::PropAttention &&
          term.kind != EventTerm::Kind::DefaultAttention) {
        throw UnsupportedEventTermError(
            "no reduction axioms for this event term: " +
            to_string(term, ctx.sig));
      }
      LiteralConjunction ann = [&] {
        try {
          return normalize(*term.announcement, ctx.sig);
        } catch (const NotAConjunctionError&) {
          throw UnsupportedEventTermError(
              "reduction needs a conjunction-of-literals announcement");
        }
      }();
      Formula body = reduce_rec(f.child(), ctx);
      return eliminate(term.kind, ann, term.defaults, body, ctx);
    }
  }
  throw Error("unreachable");
}

}  // namespace

long formula_size(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Atom:
      return 1;
    case FormulaKind::Not:
    case FormulaKind::Believes:
      return 1 + formula_size(f.child());
    case FormulaKind::And:
      return 1 + formula_size(f.left()) + formula_size(f.right());
    case FormulaKind::Dyn: {
      long ann = f.term().announcement ? formula_size(*f.term().announcement)
                                       : 1;
      return 1 + ann + formula_size(f.child());
    }
  }
  return 1;
}

ReduceStats reduce_with_stats(const Formula& f, const Signature& sig) {
  ReduceCtx ctx{sig};
  Formula out = reduce_rec(f, ctx);
  return {out, ctx.steps, formula_size(out)};
}

Formula reduce(const Formula& f, const Signature& sig) {
  return reduce_with_stats(f, sig).result;
}

FuzzReport soundness_fuzz(const FuzzOptions& options) {
  FuzzReport report;
  report.trials_per_schema = options.trials;
  std::vector<std::vector<FuzzFailure>> per_trial(options.trials);

  parallel_for(options.trials, options.parallel, [&](long t) {
    Rng rng = seeded_rng(options.seed, t);
    Signature sig = random_signature(rng, options.bounds);
    PointedModel pm = random_model(rng, sig, options.bounds);
    LiteralConjunction phi =
        random_conjunction(rng, sig, options.max_announced_atoms);
    AgentIndex agent =
        std::uniform_int_distribution<int>(0, sig.agent_count() - 1)(rng);
    Formula psi = random_formula(rng, sig, options.formula_depth);
    DefaultMap d = random_defaults(rng, sig, phi);
    std::bernoulli_distribution coin(0.5);

    auto run = [&](AxiomName name, const Formula& arg,
                   const std::optional<DefaultMap>& defs) {
      AxiomInstance inst =
          instantiate_axiom(name, phi, agent, arg, defs, sig,
                            options.corrupted);
      bool lhs = satisfies(pm, inst.lhs);
      bool rhs = satisfies(pm, inst.rhs);
      if (lhs != rhs) {
        per_trial[t].push_back(
            {t, axiom_name(name), kripke_to_json(pm.model, {pm.point}),
             to_string(inst.lhs, sig) + "  <->  " + to_string(inst.rhs, sig),
             lhs, rhs});
      }
    };

    Formula atom_arg = Formula::atom(std::uniform_int_distribution<int>(
        0, sig.universe_size() - 1)(rng));
    std::optional<DefaultMap> maybe_d =
        coin(rng) ? std::optional<DefaultMap>(d) : std::nullopt;
    run(AxiomName::AtomReduction, atom_arg, maybe_d);
    run(AxiomName::NegationReduction, psi,
        coin(rng) ? std::optional<DefaultMap>(d) : std::nullopt);
    run(AxiomName::ConjunctionReduction,
        Formula::conjunction(psi,
                             random_formula(rng, sig, options.formula_depth)),
        coin(rng) ? std::optional<DefaultMap>(d) : std::nullopt);
    run(AxiomName::BeliefReduction, psi, std::nullopt);
    run(AxiomName::BeliefReductionDefault, psi, d);
  });

  for (auto& failures : per_trial) {
    for (auto& f : failures) report.failures.push_back(std::move(f));
  }
  return report;
}

LemmaOutcome check_lemma(const PointedModel& pm, const LiteralConjunction& phi,
                         AgentIndex agent, bool default_variant,
                         const std::optional<DefaultMap>& defaults) {
  const Signature& sig = pm.model.sig;
  if (default_variant && !defaults) {
    throw MissingDefaultsError("the default variant needs a default map");
  }
  if (!satisfies(pm, to_formula(phi))) {
    throw NotApplicableError(
        "the pointed model does not satisfy the announcement");
  }
  LemmaOutcome out;
  AttentionConfig cfg = attention_config(pm, phi);
  out.attended = cfg.attended[agent];

  const std::vector<int> ann = announced(phi, sig);
  unsigned S = 0;
  for (std::size_t i = 0; i < ann.size(); ++i) {
    if (out.attended.test(ann[i])) S |= 1u << i;
  }
  LiteralConjunction reduced_ann =
      default_variant
          ? defaulted_announcement(phi, ann, S, agent, *defaults, sig)
          : restrict_announcement(phi, ann, S, sig);

  MultiPointedEventModel full =
      default_variant ? default_attention_model(phi, *defaults, sig)
                      : propositional_attention_model(phi, sig);
  MultiPointedEventModel reduced =
      reduced_ann.is_top()
          ? skip_model(sig)
          : (default_variant
                 ? default_attention_model(reduced_ann, *defaults, sig)
                 : propositional_attention_model(reduced_ann, sig));

  if (!applicability(pm, full).event) {
    throw NotApplicableError("the announcement model is not applicable");
  }
  if (!applicability(pm, reduced).event) {
    // The lemma's premises fail at this point (its reduced announcement
    // is not truthfully announceable here); nothing to compare.
    out.holds = true;
    out.vacuous = true;
    return out;
  }

  ProductResult u1 = product_update_traced(pm, full);
  ProductResult u2 = product_update_traced(pm, reduced);

  auto successor_names = [&](const ProductResult& u,
                             const MultiPointedEventModel& me) {
    std::set<std::pair<std::string, std::string>> names;
    const AtomSet& succ = u.pm.model.rel.successors(agent, u.pm.point);
    for (std::size_t j = succ.find_first(); j != AtomSet::npos;
         j = succ.find_next(j)) {
      const auto [v, e] = u.origin[j];
      names.insert({pm.model.world_ids[v], me.model.event_ids[e]});
    }
    return names;
  };
  auto n1 = successor_names(u1, full);
  auto n2 = successor_names(u2, reduced);
  if (n1 != n2) return out;  // holds = false

  std::vector<AtomSet> z = greatest_bisimulation(u1.pm.model, u2.pm.model);
  std::map<std::pair<std::string, std::string>, int> index2;
  for (std::size_t j = 0; j < u2.origin.size(); ++j) {
    const auto [v, e] = u2.origin[j];
    index2[{pm.model.world_ids[v], reduced.model.event_ids[e]}] =
        static_cast<int>(j);
  }
  const AtomSet& succ1 = u1.pm.model.rel.successors(agent, u1.pm.point);
  for (std::size_t j = succ1.find_first(); j != AtomSet::npos;
       j = succ1.find_next(j)) {
    const auto [v, e] = u1.origin[j];
    int other = index2.at({pm.model.world_ids[v], full.model.event_ids[e]});
    if (!z[j].test(other)) return out;  // holds = false
  }
  out.holds = true;
  return out;
}

}  // namespace attdel
