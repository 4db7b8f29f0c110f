#ifndef ATTDEL_GENERATORS_HPP
#define ATTDEL_GENERATORS_HPP

#include <random>

#include "attdel/formula.hpp"
#include "attdel/kripke.hpp"

namespace attdel {

using Rng = std::mt19937;

// Mixes a base seed with a stream index so parallel trials stay
// deterministic and independent of scheduling.
Rng seeded_rng(unsigned seed, long stream);

struct ModelBounds {
  int max_worlds = 4;
  int max_atoms = 3;
  int max_agents = 2;
  double edge_probability = 0.5;
  double atom_probability = 0.5;
};

Signature random_signature(Rng& rng, const ModelBounds& bounds);

// Random pointed model over the signature: uniform world count, each
// edge present and each universe atom true with the given probabilities.
PointedModel random_model(Rng& rng, const Signature& sig,
                          const ModelBounds& bounds);

// Non-empty consistent conjunction of propositional literals over at
// most max_atoms announced atoms.
LiteralConjunction random_conjunction(Rng& rng, const Signature& sig,
                                      int max_atoms);

// Random static formula (atoms, attention atoms, ⊤, ¬, ∧, B) of bounded
// depth.
Formula random_formula(Rng& rng, const Signature& sig, int depth);

// Random dynamic formula: an F/Ed announcement wrapping a bounded-depth
// body which may itself contain one nested dynamic modality.
Formula random_dynamic_formula(Rng& rng, const Signature& sig,
                               int announce_atoms, int depth);

// Uniform default values over the announced atoms, Top included.
DefaultMap random_defaults(Rng& rng, const Signature& sig,
                           const LiteralConjunction& announcement);

}  // namespace attdel

#endif
