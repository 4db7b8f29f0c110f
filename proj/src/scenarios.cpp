#include "attdel/scenarios.hpp"

#include "attdel/attention.hpp"
#include "attdel/errors.hpp"
#include "attdel/parser.hpp"
#include "attdel/semantics.hpp"

namespace attdel {

PointedModel gorilla_model() {
  Signature sig({"a", "b"}, {"g", "p"});
  KripkeModel m(sig);
  auto val = [&](bool p, bool g, bool hag) {
    AtomSet v(sig.universe_size());
    if (p) v.set(sig.atom_index("p"));
    if (g) v.set(sig.atom_index("g"));
    v.set(sig.attention_atom(sig.agent_index("a"), sig.atom_index("p")));
    if (hag) {
      v.set(sig.attention_atom(sig.agent_index("a"), sig.atom_index("g")));
    }
    v.set(sig.attention_atom(sig.agent_index("b"), sig.atom_index("p")));
    v.set(sig.attention_atom(sig.agent_index("b"), sig.atom_index("g")));
    return v;
  };
  // w0: the actual world, Ann not attending g. w1..w4: the worlds Ann
  // considers possible, where she attends everything.
  m.add_world("w0", val(true, true, false));
  m.add_world("w1", val(true, true, true));
  m.add_world("w2", val(true, false, true));
  m.add_world("w3", val(false, true, true));
  m.add_world("w4", val(false, false, true));
  m.init_relations();
  const int a = sig.agent_index("a");
  const int b = sig.agent_index("b");
  for (int v = 1; v <= 4; ++v) {
    m.rel.add(a, 0, v);
    for (int u = 1; u <= 4; ++u) {
      m.rel.add(a, v, u);
      m.rel.add(b, v, u);
    }
  }
  m.rel.add(b, 0, 0);
  return PointedModel{std::move(m), 0};
}

namespace {

Scenario make_gorilla_inertia() {
  return Scenario{
      "gorilla-inertia",
      "Watching the video reveals p and g; Ann only learns what she "
      "attends to and keeps her beliefs about the rest.",
      gorilla_model(),
      {
          {std::nullopt,
           {{"B(a, h(a,g)) & ~h(a,g)", true}, {"~h(a,g)", true}}},
          {"F(p & g)",
           {{"B(a, p)", true},
            {"B(a, g)", false},
            {"B(a, ~g)", false},
            {"B(b, g)", true},
            {"B(a, ~B(b, g) & ~B(b, ~g))", true}}},
      }};
}

Scenario make_gorilla_default() {
  return Scenario{
      "gorilla-default",
      "As gorilla-inertia, but Ann defaults to the absence of the "
      "gorilla when she fails to attend to it.",
      gorilla_model(),
      {
          {std::nullopt, {{"B(a, h(a,g)) & ~h(a,g)", true}}},
          {"Ed(p & g; a:g=-, b:g=-)",
           {{"B(a, ~g)", true}, {"g & B(b, B(a, ~g))", true}}},
      }};
}

Scenario make_doctor_robot() {
  // A doctor (a) absorbed in treating a victim (p) misses the fire
  // breaking out (g); the assisting robot (b) attends everything and
  // can model the doctor's false belief.
  return Scenario{
      "doctor-robot",
      "An assisting robot tracks the false belief a distracted doctor "
      "forms about an unattended danger.",
      gorilla_model(),
      {
          {std::nullopt, {{"~h(a,g) & h(b,g)", true}}},
          {"Ed(p & g; a:g=-, b:g=-)",
           {{"g & B(b, B(a, ~g))", true}, {"B(a, ~g)", true}}},
      }};
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"gorilla-inertia", "gorilla-default", "doctor-robot"};
}

Scenario get_scenario(const std::string& name) {
  if (name == "gorilla-inertia") return make_gorilla_inertia();
  if (name == "gorilla-default") return make_gorilla_default();
  if (name == "doctor-robot") return make_doctor_robot();
  throw Error("unknown scenario: " + name);
}

ScenarioReport run_scenario(const std::string& name) {
  Scenario sc = get_scenario(name);
  ScenarioReport report;
  report.name = sc.name;
  PointedModel current = sc.initial;
  const Signature sig = current.model.sig;
  int stage_index = 0;
  for (const ScenarioStage& stage : sc.stages) {
    if (stage.event) {
      Formula wrapped = parse_formula("[" + *stage.event + "] T", sig);
      current = product_update(current, elaborate(wrapped.term(), sig));
    }
    for (const ScenarioCheck& check : stage.checks) {
      bool actual = satisfies(current, parse_formula(check.formula, sig));
      report.checks.push_back(
          {stage_index, check.formula, check.expected, actual});
      if (actual != check.expected) report.ok = false;
    }
    report.states.push_back(current);
    ++stage_index;
  }
  return report;
}

}  // namespace attdel
