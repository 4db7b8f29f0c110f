#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "attdel/attention.hpp"
#include "attdel/bisim.hpp"
#include "attdel/errors.hpp"
#include "attdel/scenarios.hpp"
#include "attdel/semantics.hpp"
#include "helpers.hpp"

using namespace attdel;
using namespace attdel::testing;

namespace {

MultiPointedEventModel from_term(const std::string& term,
                                 const Signature& sig) {
  return elaborate(parse_formula("[" + term + "] T", sig).term(), sig);
}

}  // namespace

TEST_CASE("satisfaction basics") {
  PointedModel pm = gorilla_model();
  const Signature& sig = pm.model.sig;
  CHECK(satisfies(pm, parse_formula("B(a, h(a,g)) & ~h(a,g)", sig)));
  CHECK(satisfies(pm, Formula::top()));

  KripkeModel m(sig);
  AtomSet val(sig.universe_size());
  val.set(sig.atom_index("p"));
  m.add_world("u", val);
  m.init_relations();
  m.rel.add(sig.agent_index("a"), 0, 0);
  PointedModel loop{std::move(m), 0};
  CHECK(satisfies(loop, parse_formula("B(a, p)", sig)));
  CHECK_FALSE(satisfies(loop, parse_formula("B(a, g)", sig)));
  CHECK(satisfies(loop, parse_formula("B(b, g)", sig)));  // no b-successors
}

TEST_CASE("applicability") {
  PointedModel pm = gorilla_model();
  const Signature& sig = pm.model.sig;
  SUBCASE("the gorilla announcement picks the attention-matching event") {
    auto id = applicable(pm, from_term("F(p & g)", sig));
    REQUIRE(id.has_value());
    CHECK(*id == "g & p & ~h(a,g) & h(a,p) & h(b,g) & h(b,p)");
  }
  SUBCASE("announcing a falsehood is not applicable") {
    KripkeModel m = pm.model;
    m.valuation[0].reset(sig.atom_index("g"));
    PointedModel no_g{std::move(m), 0};
    Applicability app = applicability(no_g, from_term("F(p & g)", sig));
    CHECK_FALSE(app.event.has_value());
    CHECK(app.matches == 0);
  }
  SUBCASE("two designated events with precondition T fail uniqueness") {
    EventModel em(sig);
    em.add_event("e1", Formula::top());
    em.add_event("e2", Formula::top());
    em.init_relations();
    MultiPointedEventModel me(std::move(em));
    me.designated.set();
    Applicability app = applicability(pm, me);
    CHECK_FALSE(app.event.has_value());
    CHECK(app.matches == 2);
    SUBCASE("and the dynamic modality is then vacuously true") {
      EventTerm term;
      term.kind = EventTerm::Kind::Inline;
      term.inline_model =
          std::make_shared<const MultiPointedEventModel>(std::move(me));
      CHECK(satisfies(pm, Formula::dynamic(
                              term, parse_formula("p & ~p", sig))));
    }
  }
}

TEST_CASE("product update reproduces the running example") {
  PointedModel pm = gorilla_model();
  const Signature& sig = pm.model.sig;
  SUBCASE("inertia update") {
    PointedModel updated = product_update(pm, from_term("F(p & g)", sig));
    CHECK(satisfies(updated, parse_formula("B(a, p)", sig)));
    CHECK_FALSE(satisfies(updated, parse_formula("B(a, g)", sig)));
    CHECK_FALSE(satisfies(updated, parse_formula("B(a, ~g)", sig)));
    CHECK(satisfies(updated, parse_formula("B(b, g)", sig)));
    CHECK(satisfies(updated,
                    parse_formula("B(a, ~B(b, g) & ~B(b, ~g))", sig)));
  }
  SUBCASE("default update") {
    PointedModel updated =
        product_update(pm, from_term("Ed(p & g; a:g=-, b:g=-)", sig));
    CHECK(satisfies(updated, parse_formula("B(a, ~g)", sig)));
    CHECK(satisfies(updated, parse_formula("g & B(b, B(a, ~g))", sig)));
  }
  SUBCASE("skip event yields the generated submodel") {
    PointedModel updated = product_update(pm, skip_model(sig));
    PointedModel pruned = prune_reachable(pm);
    CHECK(updated.model.world_count() == pruned.model.world_count());
    // World (w,T) corresponds to w; relations and valuations transfer.
    for (int w = 0; w < pruned.model.world_count(); ++w) {
      int uw = updated.model.world_index("(" + pruned.model.world_ids[w] +
                                         ",T)");
      CHECK(updated.model.valuation[uw] == pruned.model.valuation[w]);
    }
    CHECK(bisimilar(updated, pm).bisimilar);
  }
  SUBCASE("update errors when not applicable") {
    KripkeModel m = pm.model;
    m.valuation[0].reset(sig.atom_index("g"));
    PointedModel no_g{std::move(m), 0};
    CHECK_THROWS_AS(product_update(no_g, from_term("F(p & g)", sig)),
                    NotApplicableError);
  }
}

TEST_CASE("product update invariants on random inputs") {
  ModelBounds bounds;
  Rng rng(23);
  int done = 0;
  while (done < 60) {
    Signature sig = random_signature(rng, bounds);
    PointedModel pm = random_model(rng, sig, bounds);
    LiteralConjunction phi = random_conjunction(rng, sig, 2);
    if (!satisfies(pm, to_formula(phi))) continue;
    ++done;
    MultiPointedEventModel me = propositional_attention_model(phi, sig);
    ProductResult result = product_update_traced(pm, me);
    const KripkeModel& out = result.pm.model;
    CHECK(out.world_count() <=
          pm.model.world_count() * me.model.event_count());
    for (int i = 0; i < out.world_count(); ++i) {
      auto [v, e] = result.origin[i];
      // Valuations are copied and preconditions hold at the source.
      CHECK(out.valuation[i] == pm.model.valuation[v]);
      CHECK(satisfies(PointedModel{pm.model, v}, me.model.pre[e]));
    }
  }
}

TEST_CASE("dynamic vacuity") {
  ModelBounds bounds;
  Rng rng(29);
  for (int i = 0; i < 80; ++i) {
    Signature sig = random_signature(rng, bounds);
    PointedModel pm = random_model(rng, sig, bounds);
    LiteralConjunction phi = random_conjunction(rng, sig, 2);
    MultiPointedEventModel me = propositional_attention_model(phi, sig);
    if (applicability(pm, me).event) continue;
    EventTerm term;
    term.kind = EventTerm::Kind::Inline;
    term.inline_model = std::make_shared<const MultiPointedEventModel>(me);
    Formula psi = random_formula(rng, sig, 2);
    CHECK(satisfies(pm, Formula::dynamic(term, psi)));
  }
}

TEST_CASE("propositional satisfaction matches valuation evaluation") {
  ModelBounds bounds;
  Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    Signature sig = random_signature(rng, bounds);
    PointedModel pm = random_model(rng, sig, bounds);
    Formula f = random_formula(rng, sig, 3);
    while (!is_propositional(f)) f = random_formula(rng, sig, 3);
    CHECK(satisfies(pm, f) ==
          eval_propositional(f, pm.model.valuation[pm.point]));
    CHECK(satisfies(pm, Formula::believes(0, Formula::top())));
  }
}

TEST_CASE("successors") {
  PointedModel pm = gorilla_model();
  SUBCASE("R_a of the actual world is the four considered worlds") {
    auto succ = successors(pm.model, pm.model.sig.agent_index("a"), "w0");
    CHECK(succ == std::vector<std::string>{"w1", "w2", "w3", "w4"});
  }
  SUBCASE("no outgoing edges") {
    Signature sig = sig_pq_ab();
    KripkeModel m(sig);
    m.add_world("u", AtomSet(sig.universe_size()));
    m.init_relations();
    CHECK(successors(m, 0, "u").empty());
    SUBCASE("reflexive singleton") {
      m.rel.add(0, 0, 0);
      CHECK(successors(m, 0, "u") == std::vector<std::string>{"u"});
    }
  }
  SUBCASE("works on event models too") {
    MultiPointedEventModel skip = skip_model(sig_pq_ab());
    CHECK(successors(skip.model, 0, "T") == std::vector<std::string>{"T"});
  }
}

TEST_CASE("bisimulation") {
  PointedModel pm = gorilla_model();
  SUBCASE("a model is bisimilar to itself with an identity-containing witness") {
    BisimResult r = bisimilar(pm, pm);
    CHECK(r.bisimilar);
    std::set<std::pair<std::string, std::string>> pairs(r.witness.begin(),
                                                        r.witness.end());
    for (const std::string& id : pm.model.world_ids) {
      CHECK(pairs.count({id, id}) == 1);
    }
  }
  SUBCASE("valuation disagreement at the points refutes") {
    Signature sig = sig_pq_ab();
    KripkeModel m1(sig), m2(sig);
    AtomSet vp(sig.universe_size()), vq(sig.universe_size());
    vp.set(sig.atom_index("p"));
    vq.set(sig.atom_index("q"));
    m1.add_world("u", vp);
    m2.add_world("u", vq);
    m1.init_relations();
    m2.init_relations();
    CHECK_FALSE(
        bisimilar(PointedModel{m1, 0}, PointedModel{m2, 0}).bisimilar);
  }
  SUBCASE("successor pairs of the full and attended updates are bisimilar") {
    // Successor-set lemma on the running example: the a-successors of the
    // points after F(p & g) and after F(p) coincide and are bisimilar.
    const Signature& sig = pm.model.sig;
    ProductResult full =
        product_update_traced(pm, from_term("F(p & g)", sig));
    ProductResult part = product_update_traced(pm, from_term("F(p)", sig));
    const AtomSet& succ_full =
        full.pm.model.rel.successors(sig.agent_index("a"), full.pm.point);
    CHECK(succ_full.count() > 0);
    // Named successor sets coincide (the event is the attended part).
    std::set<std::string> names_full, names_part;
    MultiPointedEventModel me_full = from_term("F(p & g)", sig);
    MultiPointedEventModel me_part = from_term("F(p)", sig);
    for (std::size_t j = succ_full.find_first(); j != AtomSet::npos;
         j = succ_full.find_next(j)) {
      auto [v, e] = full.origin[j];
      names_full.insert(pm.model.world_ids[v] + "|" +
                        me_full.model.event_ids[e]);
    }
    const AtomSet& succ_part =
        part.pm.model.rel.successors(sig.agent_index("a"), part.pm.point);
    for (std::size_t j = succ_part.find_first(); j != AtomSet::npos;
         j = succ_part.find_next(j)) {
      auto [v, e] = part.origin[j];
      names_part.insert(pm.model.world_ids[v] + "|" +
                        me_part.model.event_ids[e]);
    }
    CHECK(names_full == names_part);
    std::vector<AtomSet> z =
        greatest_bisimulation(full.pm.model, part.pm.model);
    for (std::size_t j = succ_full.find_first(); j != AtomSet::npos;
         j = succ_full.find_next(j)) {
      auto [v, e] = full.origin[j];
      int other = part.pm.model.world_index(
          "(" + pm.model.world_ids[v] + "," + me_full.model.event_ids[e] +
          ")");
      CHECK(z[j].test(other));
    }
  }
  SUBCASE("bisimilar points agree on formulas up to modal depth 3") {
    ModelBounds bounds;
    Rng rng(37);
    int tested = 0;
    while (tested < 40) {
      Signature sig = random_signature(rng, bounds);
      PointedModel a = random_model(rng, sig, bounds);
      // The skip update is a known bisimilar transformation.
      PointedModel b = product_update(a, skip_model(sig));
      REQUIRE(bisimilar(a, b).bisimilar);
      ++tested;
      for (int i = 0; i < 15; ++i) {
        Formula f = random_formula(rng, sig, 3);
        CHECK(satisfies(a, f) == satisfies(b, f));
      }
      // Random pairs that the checker declares bisimilar also agree.
      PointedModel c = random_model(rng, sig, bounds);
      if (bisimilar(a, c).bisimilar) {
        for (int i = 0; i < 15; ++i) {
          Formula f = random_formula(rng, sig, 3);
          CHECK(satisfies(a, f) == satisfies(c, f));
        }
      }
    }
  }
}
