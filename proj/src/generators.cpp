#include "attdel/generators.hpp"

namespace attdel {

Rng seeded_rng(unsigned seed, long stream) {
  // splitmix64 over (seed, stream) to decorrelate the streams.
  std::uint64_t z = (static_cast<std::uint64_t>(seed) << 32) ^
                    static_cast<std::uint64_t>(stream) ^ 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  z = z ^ (z >> 31);
  return Rng(static_cast<unsigned>(z));
}

Signature random_signature(Rng& rng, const ModelBounds& bounds) {
  static const std::vector<std::string> atom_pool = {"p", "q", "r", "s"};
  static const std::vector<std::string> agent_pool = {"a", "b", "c"};
  int n_atoms = std::uniform_int_distribution<int>(1, bounds.max_atoms)(rng);
  int n_agents = std::uniform_int_distribution<int>(1, bounds.max_agents)(rng);
  return Signature(
      {agent_pool.begin(), agent_pool.begin() + n_agents},
      {atom_pool.begin(), atom_pool.begin() + n_atoms});
}

PointedModel random_model(Rng& rng, const Signature& sig,
                          const ModelBounds& bounds) {
  std::bernoulli_distribution edge(bounds.edge_probability);
  std::bernoulli_distribution atom(bounds.atom_probability);
  int n = std::uniform_int_distribution<int>(1, bounds.max_worlds)(rng);
  KripkeModel m(sig);
  for (int w = 0; w < n; ++w) {
    AtomSet val(sig.universe_size());
    for (int u = 0; u < sig.universe_size(); ++u) {
      if (atom(rng)) val.set(u);
    }
    m.add_world("w" + std::to_string(w), std::move(val));
  }
  m.init_relations();
  for (int a = 0; a < sig.agent_count(); ++a) {
    for (int w = 0; w < n; ++w) {
      for (int v = 0; v < n; ++v) {
        if (edge(rng)) m.rel.add(a, w, v);
      }
    }
  }
  int point = std::uniform_int_distribution<int>(0, n - 1)(rng);
  return PointedModel{std::move(m), point};
}

LiteralConjunction random_conjunction(Rng& rng, const Signature& sig,
                                      int max_atoms) {
  int available = std::min(max_atoms, sig.atom_count());
  int k = std::uniform_int_distribution<int>(1, available)(rng);
  std::vector<int> atoms(sig.atom_count());
  for (int p = 0; p < sig.atom_count(); ++p) atoms[p] = p;
  std::shuffle(atoms.begin(), atoms.end(), rng);
  LiteralConjunction out = LiteralConjunction::top(sig);
  std::bernoulli_distribution sign(0.5);
  for (int i = 0; i < k; ++i) {
    out = out.with(atoms[i], sign(rng));
  }
  return out;
}

Formula random_formula(Rng& rng, const Signature& sig, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : 5);
  switch (pick(rng)) {
    case 0:
      return Formula::top();
    case 1: {
      int p = std::uniform_int_distribution<int>(0, sig.atom_count() - 1)(rng);
      return Formula::atom(p);
    }
    case 2: {
      int a =
          std::uniform_int_distribution<int>(0, sig.agent_count() - 1)(rng);
      int p = std::uniform_int_distribution<int>(0, sig.atom_count() - 1)(rng);
      return Formula::attention(sig, a, p);
    }
    case 3:
      return Formula::negation(random_formula(rng, sig, depth - 1));
    case 4:
      return Formula::conjunction(random_formula(rng, sig, depth - 1),
                                  random_formula(rng, sig, depth - 1));
    default: {
      int a =
          std::uniform_int_distribution<int>(0, sig.agent_count() - 1)(rng);
      return Formula::believes(a, random_formula(rng, sig, depth - 1));
    }
  }
}

DefaultMap random_defaults(Rng& rng, const Signature& sig,
                           const LiteralConjunction& announcement) {
  DefaultMap d;
  std::uniform_int_distribution<int> pick(0, 2);
  for (int a = 0; a < sig.agent_count(); ++a) {
    for (int p = 0; p < sig.atom_count(); ++p) {
      if (!announcement.mentions(p)) continue;
      switch (pick(rng)) {
        case 0: d.set(a, p, Default::Positive); break;
        case 1: d.set(a, p, Default::Negative); break;
        default: break;  // Top
      }
    }
  }
  return d;
}

namespace {

EventTerm random_event_term(Rng& rng, const Signature& sig,
                            int announce_atoms) {
  LiteralConjunction ann = random_conjunction(rng, sig, announce_atoms);
  EventTerm term;
  if (std::bernoulli_distribution(0.5)(rng)) {
    term.kind = EventTerm::Kind::PropAttention;
  } else {
    term.kind = EventTerm::Kind::DefaultAttention;
    term.defaults = random_defaults(rng, sig, ann);
  }
  term.announcement = std::make_shared<const Formula>(to_formula(ann));
  return term;
}

Formula random_dynamic_body(Rng& rng, const Signature& sig, int announce_atoms,
                            int depth, bool allow_dyn) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 2 : (allow_dyn ? 6 : 5));
  switch (pick(rng)) {
    case 0:
      return Formula::top();
    case 1: {
      int p = std::uniform_int_distribution<int>(0, sig.atom_count() - 1)(rng);
      return Formula::atom(p);
    }
    case 2: {
      int a =
          std::uniform_int_distribution<int>(0, sig.agent_count() - 1)(rng);
      int p = std::uniform_int_distribution<int>(0, sig.atom_count() - 1)(rng);
      return Formula::attention(sig, a, p);
    }
    case 3:
      return Formula::negation(
          random_dynamic_body(rng, sig, announce_atoms, depth - 1, allow_dyn));
    case 4:
      return Formula::conjunction(
          random_dynamic_body(rng, sig, announce_atoms, depth - 1, allow_dyn),
          random_dynamic_body(rng, sig, announce_atoms, depth - 1, allow_dyn));
    case 5: {
      int a =
          std::uniform_int_distribution<int>(0, sig.agent_count() - 1)(rng);
      return Formula::believes(a, random_dynamic_body(rng, sig, announce_atoms,
                                                      depth - 1, allow_dyn));
    }
    default:
      return Formula::dynamic(
          random_event_term(rng, sig, announce_atoms),
          random_dynamic_body(rng, sig, announce_atoms, depth - 1, false));
  }
}

}  // namespace

Formula random_dynamic_formula(Rng& rng, const Signature& sig,
                               int announce_atoms, int depth) {
  return Formula::dynamic(
      random_event_term(rng, sig, announce_atoms),
      random_dynamic_body(rng, sig, announce_atoms, depth, true));
}

}  // namespace attdel
