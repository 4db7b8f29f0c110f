#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "attdel/attention.hpp"
#include "attdel/cli.hpp"
#include "attdel/bisim.hpp"
#include "attdel/io.hpp"
#include "attdel/scenarios.hpp"
#include "attdel/semantics.hpp"
#include "helpers.hpp"

using namespace attdel;
using namespace attdel::testing;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("attdel_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

int count_lines_with(const std::string& text, const std::string& needle) {
  // counts occurrences
  int count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("model JSON round-trips") {
  PointedModel pm = gorilla_model();
  std::string json = kripke_to_json(pm.model, {pm.point});
  LoadedKripke loaded = kripke_from_json(json);
  CHECK(loaded.model == pm.model);
  REQUIRE(loaded.points.size() == 1);
  CHECK(loaded.points[0] == pm.point);

  SUBCASE("event models round-trip too") {
    const Signature& sig = pm.model.sig;
    MultiPointedEventModel me = propositional_attention_model(
        parse_literal_conjunction("p & g", sig), sig);
    MultiPointedEventModel back =
        event_model_from_json(event_model_to_json(me));
    CHECK(back == me);
  }
  SUBCASE("bad input is reported") {
    CHECK_THROWS_AS(kripke_from_json("{"), IoError);
    CHECK_THROWS_AS(kripke_from_json("{\"agents\":[\"a\"]}"), IoError);
  }
}

TEST_CASE("syntactic model JSON") {
  std::string json = R"json({
    "agents": ["a"], "atoms": ["p"],
    "psi_E": "e=>(T)",
    "psi_a": {"a": "box e=>(p)"},
    "psi_Ed": "e=>(p)"
  })json";
  LoadedSyntactic loaded = syntactic_from_json(json);
  CHECK(loaded.sig.agent_count() == 1);
  CHECK(loaded.sig.atom_count() == 1);
  REQUIRE(loaded.model.psi_Ed.has_value());
  SUBCASE("agents and atoms can be inferred") {
    std::string terse = R"json({
      "psi_E": "~(e=>(~p))",
      "psi_a": {"a": "box e=>(p)"}
    })json";
    LoadedSyntactic t = syntactic_from_json(terse);
    CHECK(t.sig.agents() == std::vector<std::string>{"a"});
    CHECK(t.sig.atoms() == std::vector<std::string>{"p"});
  }
}

TEST_CASE("DOT export") {
  PointedModel pm = gorilla_model();
  std::string dot = export_dot(pm);
  SUBCASE("five nodes, the designated one double-circled") {
    CHECK(count_lines_with(dot, "label=") - count_lines_with(dot, "->") == 5);
    CHECK(count_lines_with(dot, "peripheries=2") == 1);
  }
  SUBCASE("edges carry agent labels and boxes are flattened") {
    // a-edges from w0 to the four considered worlds, a b-loop at w0 and
    // a complete (looped) subgraph on the four inner worlds.
    CHECK(count_lines_with(dot, "\"w0\" -> \"w1\"") == 1);
    CHECK(count_lines_with(dot, "\"w0\" -> \"w0\" [label=\"b\"]") == 1);
    CHECK(count_lines_with(dot, "->") == 1 + 4 + 16);
    CHECK(count_lines_with(dot, "[label=\"a,b\"]") == 16);
  }
  SUBCASE("deterministic output") { CHECK(dot == export_dot(pm)); }
  SUBCASE("a singleton model is one node and no edges") {
    Signature sig({"a"}, {"p"});
    KripkeModel m(sig);
    m.add_world("u", AtomSet(sig.universe_size()));
    m.init_relations();
    std::string single = export_dot(m, {});
    CHECK(count_lines_with(single, "label=") - count_lines_with(single, "->") == 1);
    CHECK(count_lines_with(single, "->") == 0);
  }
  SUBCASE("the one-agent attention model of p has three nodes") {
    Signature sig({"a"}, {"p"});
    MultiPointedEventModel me = propositional_attention_model(
        parse_literal_conjunction("p", sig), sig);
    std::string event_dot = export_dot(me);
    CHECK(count_lines_with(event_dot, "label=") - count_lines_with(event_dot, "->") == 3);
    CHECK(count_lines_with(event_dot, "peripheries=2") == 2);
  }
}

TEST_CASE("scenarios run clean") {
  for (const std::string& name : scenario_names()) {
    ScenarioReport report = run_scenario(name);
    CAPTURE(name);
    CHECK(report.ok);
    for (const auto& check : report.checks) {
      CHECK(check.actual == check.expected);
    }
  }
  CHECK_THROWS(run_scenario("nope"));
}

TEST_CASE("scenario checks re-derive through the command line") {
  // The scripted gorilla-inertia run equals the corresponding sequence
  // of update and check commands on serialized intermediate models.
  TempDir tmp;
  PointedModel pm = gorilla_model();
  std::string initial = tmp.file("initial.json");
  write_file(initial, kripke_to_json(pm.model, {pm.point}));

  CHECK(run_cli({"check", initial, "B(a, h(a,g)) & ~h(a,g)"}) == 0);
  CHECK(run_cli({"check", initial, "~h(a,g)"}) == 0);

  std::string updated = tmp.file("updated.json");
  CHECK(run_cli({"update", initial, "F(p & g)", "-o", updated}) == 0);
  CHECK(run_cli({"check", updated, "B(a, p)"}) == 0);
  CHECK(run_cli({"check", updated, "B(a, g)"}) == 1);
  CHECK(run_cli({"check", updated, "B(a, ~g)"}) == 1);
  CHECK(run_cli({"check", updated, "B(b, g)"}) == 0);
  CHECK(run_cli({"check", updated, "B(a, ~B(b, g) & ~B(b, ~g))"}) == 0);

  ScenarioReport report = run_scenario("gorilla-inertia");
  REQUIRE(report.states.size() == 2);
  CHECK(bisimilar(report.states[1],
                  PointedModel{kripke_from_json(read_file(updated)).model,
                               kripke_from_json(read_file(updated)).points[0]})
            .bisimilar);
}

TEST_CASE("command line surface") {
  TempDir tmp;
  SUBCASE("parse prints the canonical form") {
    CHECK(run_cli({"parse", "p&~q", "--atoms", "p,q", "--agents", "a"}) == 0);
  }
  SUBCASE("build-event writes a loadable model") {
    std::string out = tmp.file("event.json");
    CHECK(run_cli({"build-event", "F(p & g)", "--atoms", "g,p", "--agents",
                   "a,b", "-o", out}) == 0);
    MultiPointedEventModel me = event_model_from_json(read_file(out));
    CHECK(me.model.event_count() == 25);
  }
  SUBCASE("named event terms resolve against files") {
    std::string event = tmp.file("skip.json");
    PointedModel pm = gorilla_model();
    write_file(event, event_model_to_json(skip_model(pm.model.sig)));
    std::string model = tmp.file("model.json");
    write_file(model, kripke_to_json(pm.model, {pm.point}));
    CHECK(run_cli({"check", model, "[@" + event + "] g"}) == 0);
  }
  SUBCASE("update warns and fails when not applicable") {
    PointedModel pm = gorilla_model();
    KripkeModel m = pm.model;
    m.valuation[0].reset(m.sig.atom_index("g"));
    std::string model = tmp.file("nog.json");
    write_file(model, kripke_to_json(m, {0}));
    CHECK(run_cli({"update", model, "F(p & g)", "-o",
                   tmp.file("out.json")}) == 1);
  }
  SUBCASE("bisim compares two files") {
    PointedModel pm = gorilla_model();
    std::string model = tmp.file("m.json");
    write_file(model, kripke_to_json(pm.model, {pm.point}));
    CHECK(run_cli({"bisim", model, model}) == 0);
    PointedModel pruned = prune_reachable(product_update(
        pm, skip_model(pm.model.sig)));
    std::string other = tmp.file("m2.json");
    write_file(other, kripke_to_json(pruned.model, {pruned.point}));
    CHECK(run_cli({"bisim", model, other}) == 0);
  }
  SUBCASE("induce consumes a syntactic model file") {
    std::string syn = tmp.file("syn.json");
    write_file(syn, R"json({
      "agents": ["a"], "atoms": ["q"],
      "psi_E": "((T)=>e & e=>(T)) | ((e=>(q) | e=>(~q)) & (e=>(h(a,q)) | e=>(~h(a,q))))",
      "psi_a": {"a": "(e=>(h(a,q)) -> box e=>(q)) & (~(e=>(h(a,q))) -> box ((T)=>e & e=>(T)))"}
    })json");
    std::string out = tmp.file("induced.json");
    CHECK(run_cli({"induce", syn, "-o", out}) == 0);
    MultiPointedEventModel me = event_model_from_json(read_file(out));
    CHECK(me.model.event_count() == 5);
  }
  SUBCASE("reduce prints a dynamic-free formula") {
    CHECK(run_cli({"reduce", "[F(p)]q", "--atoms", "p,q", "--agents",
                   "a"}) == 0);
  }
  SUBCASE("scenario and lemma commands") {
    CHECK(run_cli({"scenario", "doctor-robot"}) == 0);
    CHECK(run_cli({"scenario", "no-such"}) == 2);
    CHECK(run_cli({"lemma", "--agent", "a"}) == 0);
    CHECK(run_cli({"lemma", "--agent", "b", "--variant", "default"}) == 0);
  }
  SUBCASE("succinctness emits CSV") {
    std::string out = tmp.file("table.csv");
    CHECK(run_cli({"succinctness", "--gen", "Gprime", "--n-max", "4", "-o",
                   out}) == 0);
    std::string csv = read_file(out);
    CHECK(csv.rfind("n,size,events,millis", 0) == 0);
    CHECK(count_lines_with(csv, "\n") == 5);
  }
  SUBCASE("usage errors exit with 2") {
    CHECK(run_cli({"no-such-command"}) == 2);
    CHECK(run_cli({"check", "/nonexistent.json", "T"}) == 2);
  }
}
