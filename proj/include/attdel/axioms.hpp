#ifndef ATTDEL_AXIOMS_HPP
#define ATTDEL_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "attdel/formula.hpp"
#include "attdel/generators.hpp"
#include "attdel/kripke.hpp"
#include "attdel/semantics.hpp"

namespace attdel {

enum class AxiomName {
  AtomReduction,
  NegationReduction,
  ConjunctionReduction,
  BeliefReduction,
  BeliefReductionDefault,
};

const char* axiom_name(AxiomName name);

// A fully instantiated reduction-axiom biconditional.
struct AxiomInstance {
  AxiomName name;
  Formula lhs;
  Formula rhs;
};

// Instantiates one reduction axiom for the announcement φ. ψ supplies
// the schema's formula argument: the atom for atom-reduction, the
// conjunction for conjunction-reduction, the belief body otherwise.
// Defaults are required exactly for belief-reduction-default; when they
// are supplied for atom/negation/conjunction, the instance uses the
// default-event term instead of the plain one.
//
// `corrupted` drops the negative attention conjuncts from the
// case-analysis antecedents of the belief schemas; it exists for the
// mutation test and is unsound by design.
AxiomInstance instantiate_axiom(AxiomName name, const LiteralConjunction& phi,
                                AgentIndex agent, const Formula& psi,
                                const std::optional<DefaultMap>& defaults,
                                const Signature& sig, bool corrupted = false);

// Rewrites every dynamic modality away using the reduction axioms,
// innermost first. Event terms must be plain or default attention
// constructors over conjunctions of literals; other terms raise
// UnsupportedEventTermError.
Formula reduce(const Formula& f, const Signature& sig);

struct ReduceStats {
  Formula result;
  long steps = 0;        // rewrite applications
  long result_size = 0;  // nodes of the result
};
ReduceStats reduce_with_stats(const Formula& f, const Signature& sig);

long formula_size(const Formula& f);

struct FuzzOptions {
  int trials = 1000;  // per axiom schema
  unsigned seed = 1;
  ModelBounds bounds;
  int max_announced_atoms = 2;
  int formula_depth = 2;
  bool corrupted = false;
  bool parallel = true;
};

struct FuzzFailure {
  long trial;
  std::string schema;
  std::string model_json;
  std::string formula;  // the failing biconditional instance, printed
  bool lhs, rhs;
};

struct FuzzReport {
  int trials_per_schema = 0;
  std::vector<FuzzFailure> failures;  // sorted by trial index
};

// Random-model soundness check of every axiom schema: generates models,
// announcements, formula arguments and default maps, and compares both
// sides of each instantiated biconditional. Deterministic in the seed.
FuzzReport soundness_fuzz(const FuzzOptions& options);

struct LemmaOutcome {
  bool holds = false;
  // The attention set S of the checked agent, over the atom slots.
  AtomSet attended;
  // True when the reduced-announcement model was not applicable at the
  // point, making the comparison vacuous.
  bool vacuous = false;
};

// Mechanical check of the successor-set lemma: updating with the full
// announcement and with the agent's attended part (plus defaults, for
// the default variant) yields (1) the same named a-successor set of the
// points and (2) pairwise bisimilar successors. The pointed model must
// satisfy φ and the full-announcement model must be applicable.
LemmaOutcome check_lemma(const PointedModel& pm, const LiteralConjunction& phi,
                         AgentIndex agent, bool default_variant,
                         const std::optional<DefaultMap>& defaults);

}  // namespace attdel

#endif
