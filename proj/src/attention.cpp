#include "attdel/attention.hpp"

#include <algorithm>
#include <map>

#include "attdel/errors.hpp"

namespace attdel {

namespace {

Formula fold_conjuncts(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula out = parts.back();
  for (auto it = std::next(parts.rbegin()); it != parts.rend(); ++it) {
    out = Formula::conjunction(*it, out);
  }
  return out;
}

// Canonical key of an event precondition: the rendered normal form for
// literal conjunctions, the printed formula otherwise.
std::string canonical_key(const Formula& f, const Signature& sig) {
  if (is_literal_conjunction(f)) {
    try {
      return normalize(f, sig).render(sig);
    } catch (const ContradictoryError&) {
      // Inconsistent conjunction; keep the raw print as identity.
    }
  }
  return to_string(f, sig);
}

bool list_contains(const std::vector<Formula>& conjuncts, const Formula& f) {
  return std::find(conjuncts.begin(), conjuncts.end(), f) != conjuncts.end();
}

void require_propositional_announcement(const LiteralConjunction& phi,
                                        const Signature& sig) {
  for (int u = sig.atom_count(); u < sig.universe_size(); ++u) {
    if (phi.mentions(u)) {
      throw NotPropositionalError(
          "announcement must be a conjunction of propositional literals");
    }
  }
}

std::vector<AtomIndex> announced_atoms(const LiteralConjunction& phi,
                                       const Signature& sig) {
  std::vector<AtomIndex> out;
  for (int p = 0; p < sig.atom_count(); ++p) {
    if (phi.mentions(p)) out.push_back(p);
  }
  return out;
}

}  // namespace

Formula attentive_everything(const Signature& sig, AgentIndex a) {
  std::vector<Formula> parts;
  for (int p = 0; p < sig.atom_count(); ++p) {
    parts.push_back(Formula::attention(sig, a, p));
  }
  return fold_conjuncts(parts);
}

MultiPointedEventModel binary_attention_model(const Formula& announcement,
                                              BinaryVariant variant,
                                              const Signature& sig) {
  const int m = sig.agent_count();
  std::vector<Formula> h(m), not_h(m);
  for (int a = 0; a < m; ++a) {
    h[a] = attentive_everything(sig, a);
    not_h[a] = Formula::negation(h[a]);
  }
  const Formula phi = announcement;
  const Formula not_phi = Formula::negation(phi);

  EventModel em(sig);
  std::vector<std::vector<Formula>> conjuncts;  // aligned with em events
  std::vector<int> polarity;                    // 1 for φ-events, 0 for ¬φ, -1 top
  std::vector<unsigned> attentive;              // J as agent bitmask

  auto event_formula = [&](int i, unsigned J) {
    std::vector<Formula> parts{i == 1 ? phi : not_phi};
    for (int a = 0; a < m; ++a) {
      parts.push_back((J >> a) & 1u ? h[a] : not_h[a]);
    }
    return parts;
  };

  if (variant == BinaryVariant::Original) {
    for (int i = 0; i <= 1; ++i) {
      for (unsigned J = 0; J < (1u << m); ++J) {
        std::string id = "(" + std::to_string(i) + ",{";
        bool first = true;
        for (int a = 0; a < m; ++a) {
          if (!((J >> a) & 1u)) continue;
          if (!first) id += ",";
          first = false;
          id += sig.agent_name(a);
        }
        id += "})";
        em.add_event(std::move(id), fold_conjuncts(event_formula(i, J)));
        polarity.push_back(i);
        attentive.push_back(J);
      }
    }
    em.add_event("s_top", Formula::top());
    polarity.push_back(-1);
    attentive.push_back(0);
    em.init_relations();
    const int top = em.event_count() - 1;
    for (int a = 0; a < m; ++a) {
      for (int e = 0; e < em.event_count(); ++e) {
        if (polarity[e] < 0) continue;
        if ((attentive[e] >> a) & 1u) {
          for (int f = 0; f < em.event_count(); ++f) {
            if (polarity[f] == 1) em.rel.add(a, e, f);
          }
        } else {
          em.rel.add(a, e, top);
        }
      }
      // Inertia reading of the skip event: it only leads to itself.
      em.rel.add(a, top, top);
    }
    MultiPointedEventModel out(std::move(em));
    for (int e = 0; e < out.model.event_count(); ++e) {
      if (e != top) out.designated.set(e);
    }
    return out;
  }

  // Principle-based variants: events are their own preconditions, as a
  // set of formulas (duplicates collapse).
  std::map<std::string, int> seen;
  auto add = [&](std::vector<Formula> parts) {
    Formula pre = fold_conjuncts(parts);
    std::string key = canonical_key(pre, sig);
    if (seen.count(key)) return;
    if (is_literal_conjunction(pre)) {
      try {
        pre = to_formula(normalize(pre, sig));
      } catch (const ContradictoryError&) {
      }
    }
    seen[key] = em.add_event(key, std::move(pre));
    conjuncts.push_back(std::move(parts));
  };

  const bool truthful = variant == BinaryVariant::Truthful;
  for (int i = truthful ? 1 : 0; i <= 1; ++i) {
    for (unsigned J = 0; J < (1u << m); ++J) {
      add(event_formula(i, J));
    }
  }
  add({});  // the ⊤ event
  const int top = seen.at("T");

  em.init_relations();
  for (int a = 0; a < m; ++a) {
    for (int e = 0; e < em.event_count(); ++e) {
      const bool attends = list_contains(conjuncts[e], h[a]);
      for (int f = 0; f < em.event_count(); ++f) {
        if (attends) {
          // Basic Attentiveness / Attentiveness.
          if (!list_contains(conjuncts[f], phi)) continue;
          if (truthful && !list_contains(conjuncts[f], h[a])) continue;
        } else if (f != top) {
          continue;  // Inertia
        }
        em.rel.add(a, e, f);
      }
    }
  }
  MultiPointedEventModel out(std::move(em));
  for (int e = 0; e < out.model.event_count(); ++e) {
    if (e != top) out.designated.set(e);
  }
  return out;
}

MultiPointedEventModel propositional_attention_model(
    const LiteralConjunction& phi, const Signature& sig) {
  if (phi.is_top()) {
    throw EmptyAnnouncementError("announcement must not be empty");
  }
  require_propositional_announcement(phi, sig);
  const std::vector<AtomIndex> ann = announced_atoms(phi, sig);
  const int n = static_cast<int>(ann.size());
  const int m = sig.agent_count();

  EventModel em(sig);
  std::vector<LiteralConjunction> events;
  for (unsigned S = 0; S < (1u << n); ++S) {
    // Odometer over the per-agent attention sets X_a ⊆ S.
    std::vector<unsigned> X(m, 0);
    while (true) {
      LiteralConjunction e = LiteralConjunction::top(sig);
      for (int i = 0; i < n; ++i) {
        if (!((S >> i) & 1u)) continue;
        e = e.with(ann[i], phi.has_positive(ann[i]));
        for (int a = 0; a < m; ++a) {
          e = e.with(sig.attention_atom(a, ann[i]), (X[a] >> i) & 1u);
        }
      }
      em.add_event(e.render(sig), to_formula(e));
      events.push_back(std::move(e));
      // Advance the odometer within S.
      int a = 0;
      for (; a < m; ++a) {
        X[a] = (X[a] + 1u + ~S) & S;  // next subset of S after X[a]
        if (X[a] != 0) break;
        // wrapped to 0, carry on
      }
      if (a == m) break;
    }
  }

  em.init_relations();
  for (int a = 0; a < m; ++a) {
    for (std::size_t e = 0; e < events.size(); ++e) {
      for (std::size_t f = 0; f < events.size(); ++f) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          const AtomIndex p = ann[i];
          const AtomIndex hap = sig.attention_atom(a, p);
          const bool lit_in_f = events[f].mentions(p);
          if (events[e].has_positive(hap)) {
            // Attentiveness: h_a p, ℓ(p) ∈ f.
            ok = events[f].has_positive(hap) && lit_in_f;
          } else {
            // Inertia: ℓ(p) ∉ f.
            ok = !lit_in_f;
          }
        }
        if (ok) em.rel.add(a, static_cast<int>(e), static_cast<int>(f));
      }
    }
  }

  MultiPointedEventModel out(std::move(em));
  for (std::size_t e = 0; e < events.size(); ++e) {
    if (events[e].contains(phi)) out.designated.set(e);
  }
  return out;
}

MultiPointedEventModel default_attention_model(const LiteralConjunction& phi,
                                               const DefaultMap& defaults,
                                               const Signature& sig) {
  if (phi.is_top()) {
    throw EmptyAnnouncementError("announcement must not be empty");
  }
  require_propositional_announcement(phi, sig);
  const std::vector<AtomIndex> ann = announced_atoms(phi, sig);
  const int n = static_cast<int>(ann.size());
  const int m = sig.agent_count();

  EventModel em(sig);
  std::vector<LiteralConjunction> events;
  std::map<LiteralConjunction, int> seen;
  AtomSet maximal(0);  // resized below; events announcing every atom of φ
  const unsigned full = (1u << n) - 1u;
  for (int b = 0; b < m; ++b) {
    for (unsigned S = 0; S < (1u << n); ++S) {
      std::vector<unsigned> X(m, 0);
      while (true) {
        LiteralConjunction e = LiteralConjunction::top(sig);
        try {
          for (int i = 0; i < n; ++i) {
            const AtomIndex p = ann[i];
            if ((S >> i) & 1u) {
              e = e.with(p, phi.has_positive(p));
              for (int a = 0; a < m; ++a) {
                e = e.with(sig.attention_atom(a, p), (X[a] >> i) & 1u);
              }
            } else {
              switch (defaults.get(b, p)) {
                case Default::Positive: e = e.with(p, true); break;
                case Default::Negative: e = e.with(p, false); break;
                case Default::Top: break;
              }
            }
          }
        } catch (const ContradictoryError& err) {
          throw InconsistentDefaultsError(err.what());
        }
        if (!seen.count(e)) {
          seen[e] = em.add_event(e.render(sig), to_formula(e));
          events.push_back(e);
          maximal.push_back(S == full);
        }
        int a = 0;
        for (; a < m; ++a) {
          X[a] = (X[a] + 1u + ~S) & S;
          if (X[a] != 0) break;
        }
        if (a == m) break;
      }
    }
  }

  em.init_relations();
  for (int a = 0; a < m; ++a) {
    for (std::size_t e = 0; e < events.size(); ++e) {
      for (std::size_t f = 0; f < events.size(); ++f) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          const AtomIndex p = ann[i];
          const AtomIndex hap = sig.attention_atom(a, p);
          if (events[e].has_positive(hap)) {
            // Attentiveness: h_a p, ℓ(p) ∈ f.
            ok = events[f].has_positive(hap) && events[f].mentions(p);
          } else {
            // Defaulting: the target carries a's default for p; a Top
            // default means the target leaves p untouched.
            switch (defaults.get(a, p)) {
              case Default::Positive: ok = events[f].has_positive(p); break;
              case Default::Negative: ok = events[f].has_negative(p); break;
              case Default::Top: ok = !events[f].mentions(p); break;
            }
          }
        }
        if (ok) em.rel.add(a, static_cast<int>(e), static_cast<int>(f));
      }
    }
  }

  MultiPointedEventModel out(std::move(em));
  // Designated events are the ones announcing all of φ. An event whose
  // defaults happen to fill in announced literals also contains them,
  // but designating it too would leave φ-worlds with several applicable
  // designated events and no update at all.
  for (std::size_t e = 0; e < events.size(); ++e) {
    if (maximal.test(e)) out.designated.set(e);
  }
  return out;
}

MultiPointedEventModel skip_model(const Signature& sig) {
  EventModel em(sig);
  em.add_event("T", Formula::top());
  em.init_relations();
  for (int a = 0; a < sig.agent_count(); ++a) em.rel.add(a, 0, 0);
  MultiPointedEventModel out(std::move(em));
  out.designated.set(0);
  return out;
}

namespace {

std::vector<std::string> event_keys(const EventModel& m) {
  std::vector<std::string> keys;
  keys.reserve(m.event_count());
  for (int e = 0; e < m.event_count(); ++e) {
    keys.push_back(m.pre_conj[e] ? m.pre_conj[e]->render(m.sig)
                                 : to_string(m.pre[e], m.sig));
  }
  std::vector<std::string> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionsNotDistinctError(
        "event preconditions are not pairwise distinct");
  }
  return keys;
}

}  // namespace

bool isomorphic(const EventModel& lhs, const EventModel& rhs) {
  if (lhs.sig.agent_count() != rhs.sig.agent_count()) return false;
  std::vector<std::string> lk = event_keys(lhs);
  std::vector<std::string> rk = event_keys(rhs);
  if (lk.size() != rk.size()) return false;

  std::map<std::string, int> rindex;
  for (int e = 0; e < rhs.event_count(); ++e) rindex[rk[e]] = e;
  std::vector<int> match(lhs.event_count());
  for (int e = 0; e < lhs.event_count(); ++e) {
    auto it = rindex.find(lk[e]);
    if (it == rindex.end()) return false;
    match[e] = it->second;
  }
  for (int a = 0; a < lhs.sig.agent_count(); ++a) {
    for (int e = 0; e < lhs.event_count(); ++e) {
      for (int f = 0; f < lhs.event_count(); ++f) {
        if (lhs.rel.has(a, e, f) != rhs.rel.has(a, match[e], match[f])) {
          return false;
        }
      }
    }
  }
  return true;
}

AttentionConfig attention_config(const PointedModel& pm,
                                 const LiteralConjunction& phi) {
  const Signature& sig = pm.model.sig;
  AttentionConfig out;
  out.attended.assign(sig.agent_count(), AtomSet(sig.universe_size()));
  const AtomSet& val = pm.model.valuation[pm.point];
  for (int a = 0; a < sig.agent_count(); ++a) {
    for (int p = 0; p < sig.atom_count(); ++p) {
      if (phi.mentions(p) && val.test(sig.attention_atom(a, p))) {
        out.attended[a].set(p);
      }
    }
  }
  return out;
}

MultiPointedEventModel elaborate(const EventTerm& term, const Signature& sig) {
  switch (term.kind) {
    case EventTerm::Kind::Original:
      return binary_attention_model(*term.announcement,
                                    BinaryVariant::Original, sig);
    case EventTerm::Kind::Principled:
      return binary_attention_model(*term.announcement,
                                    BinaryVariant::Principled, sig);
    case EventTerm::Kind::Truthful:
      return binary_attention_model(*term.announcement,
                                    BinaryVariant::Truthful, sig);
    case EventTerm::Kind::PropAttention: {
      LiteralConjunction phi = normalize(*term.announcement, sig);
      if (phi.is_top()) return skip_model(sig);
      return propositional_attention_model(phi, sig);
    }
    case EventTerm::Kind::DefaultAttention: {
      LiteralConjunction phi = normalize(*term.announcement, sig);
      if (phi.is_top()) return skip_model(sig);
      return default_attention_model(phi, term.defaults, sig);
    }
    case EventTerm::Kind::Named:
      throw UnsupportedEventTermError("unresolved named event model: @" +
                                      term.name);
    case EventTerm::Kind::Inline:
      return *term.inline_model;
  }
  throw Error("unreachable");
}

}  // namespace attdel
