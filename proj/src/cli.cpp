#include "attdel/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "attdel/attention.hpp"
#include "attdel/axioms.hpp"
#include "attdel/bisim.hpp"
#include "attdel/errors.hpp"
#include "attdel/io.hpp"
#include "attdel/parser.hpp"
#include "attdel/scenarios.hpp"
#include "attdel/semantics.hpp"
#include "attdel/syntactic.hpp"

namespace attdel {

namespace {

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Signature from --model / --atoms/--agents, falling back to inference
// from the formula text.
Signature resolve_signature(const std::string& model_path,
                            const std::string& atoms_csv,
                            const std::string& agents_csv,
                            const std::string& formula_text) {
  if (!model_path.empty()) {
    return kripke_from_json(read_file(model_path)).model.sig;
  }
  if (!atoms_csv.empty() || !agents_csv.empty()) {
    std::vector<std::string> atoms = split_csv(atoms_csv);
    std::vector<std::string> agents = split_csv(agents_csv);
    if (atoms.empty()) atoms = infer_signature(formula_text).atoms();
    if (agents.empty()) agents = infer_signature(formula_text).agents();
    return Signature(std::move(agents), std::move(atoms));
  }
  return infer_signature(formula_text);
}

EventTerm parse_event_term_text(const std::string& text,
                                const Signature& sig) {
  Formula wrapped = parse_formula("[" + text + "] T", sig);
  return wrapped.term();
}

// Replaces @name terms by the event models read from the named files.
EventTerm resolve_term(const EventTerm& term, const Signature& sig) {
  if (term.kind != EventTerm::Kind::Named) return term;
  MultiPointedEventModel me = event_model_from_json(read_file(term.name));
  if (!(me.model.sig == sig)) {
    throw IoError("event model @" + term.name +
                  " uses a different signature than the current model");
  }
  EventTerm out;
  out.kind = EventTerm::Kind::Inline;
  out.inline_model =
      std::make_shared<const MultiPointedEventModel>(std::move(me));
  return out;
}

Formula resolve_named_terms(const Formula& f, const Signature& sig) {
  switch (f.kind()) {
    case FormulaKind::Top:
    case FormulaKind::Atom:
      return f;
    case FormulaKind::Not:
      return Formula::negation(resolve_named_terms(f.child(), sig));
    case FormulaKind::And:
      return Formula::conjunction(resolve_named_terms(f.left(), sig),
                                  resolve_named_terms(f.right(), sig));
    case FormulaKind::Believes:
      return Formula::believes(f.agent(),
                               resolve_named_terms(f.child(), sig));
    case FormulaKind::Dyn:
      return Formula::dynamic(resolve_term(f.term(), sig),
                              resolve_named_terms(f.child(), sig));
  }
  return f;
}

PointedModel load_pointed(const std::string& path) {
  LoadedKripke loaded = kripke_from_json(read_file(path));
  if (loaded.points.size() != 1) {
    throw IoError("expected exactly one designated world in " + path);
  }
  return PointedModel{std::move(loaded.model), loaded.points[0]};
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content << "\n";
  } else {
    write_file(out_path, content);
  }
}

DefaultMap scenario_defaults(const Signature& sig) {
  // The running-example default map: no priors on p, both agents
  // default to the absence of g.
  DefaultMap d;
  for (int a = 0; a < sig.agent_count(); ++a) {
    d.set(a, sig.atom_index("g"), Default::Negative);
  }
  return d;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Model checker for attention-based epistemic logic"};
  app.require_subcommand(1);

  std::string formula_text, model_path, atoms_csv, agents_csv, out_path,
      dot_path, term_text, model2_path, gen_name = "G", scenario_name,
      variant = "plain", agent_name, syn_path;
  int trials = 1000, n_max = 8;
  unsigned seed = 1;
  long cap = 1000000;
  bool prune = false, corrupted = false, keep_edgewise = false;
  std::string fuzz_out = "fuzz_report.json";
  int exit_code = 0;

  auto* parse_cmd = app.add_subcommand("parse", "Parse and reprint a formula");
  parse_cmd->add_option("formula", formula_text)->required();
  parse_cmd->add_option("--model", model_path, "Signature source model");
  parse_cmd->add_option("--atoms", atoms_csv, "Comma-separated atom names");
  parse_cmd->add_option("--agents", agents_csv, "Comma-separated agent names");
  parse_cmd->callback([&] {
    Signature sig =
        resolve_signature(model_path, atoms_csv, agents_csv, formula_text);
    std::cout << to_string(parse_formula(formula_text, sig), sig) << "\n";
  });

  auto* check_cmd =
      app.add_subcommand("check", "Evaluate a formula at a model's point");
  check_cmd->add_option("model", model_path)->required();
  check_cmd->add_option("formula", formula_text)->required();
  check_cmd->add_option("--dot", dot_path, "Also write the model as DOT");
  check_cmd->callback([&] {
    PointedModel pm = load_pointed(model_path);
    Formula f = resolve_named_terms(
        parse_formula(formula_text, pm.model.sig), pm.model.sig);
    bool value = satisfies(pm, f);
    if (!dot_path.empty()) write_file(dot_path, export_dot(pm));
    std::cout << (value ? "true" : "false") << "\n";
    exit_code = value ? 0 : 1;
  });

  auto* update_cmd =
      app.add_subcommand("update", "Product update of a model with an event");
  update_cmd->add_option("model", model_path)->required();
  update_cmd->add_option("event", term_text)->required();
  update_cmd->add_option("-o,--out", out_path, "Output model file");
  update_cmd->add_option("--dot", dot_path);
  update_cmd->add_flag("--prune", prune,
                       "Restrict to worlds reachable from the point");
  update_cmd->callback([&] {
    PointedModel pm = load_pointed(model_path);
    EventTerm term =
        resolve_term(parse_event_term_text(term_text, pm.model.sig),
                     pm.model.sig);
    MultiPointedEventModel me = elaborate(term, pm.model.sig);
    Applicability app_result = applicability(pm, me);
    if (!app_result.event) {
      std::cerr << "warning: event model not applicable ("
                << (app_result.matches == 0
                        ? "no designated precondition holds"
                        : "multiple designated preconditions hold")
                << ")\n";
      exit_code = 1;
      return;
    }
    PointedModel updated = product_update(pm, me);
    if (prune) updated = prune_reachable(updated);
    emit(out_path, kripke_to_json(updated.model, {updated.point}));
    if (!dot_path.empty()) write_file(dot_path, export_dot(updated));
  });

  auto* build_cmd =
      app.add_subcommand("build-event", "Construct an attention event model");
  build_cmd->add_option("event", term_text)->required();
  build_cmd->add_option("--model", model_path, "Signature source model");
  build_cmd->add_option("--atoms", atoms_csv);
  build_cmd->add_option("--agents", agents_csv);
  build_cmd->add_option("-o,--out", out_path);
  build_cmd->add_option("--dot", dot_path);
  build_cmd->callback([&] {
    Signature sig =
        resolve_signature(model_path, atoms_csv, agents_csv, term_text);
    EventTerm term = resolve_term(parse_event_term_text(term_text, sig), sig);
    MultiPointedEventModel me = elaborate(term, sig);
    emit(out_path, event_model_to_json(me));
    if (!dot_path.empty()) write_file(dot_path, export_dot(me));
  });

  auto* induce_cmd = app.add_subcommand(
      "induce", "Induce the semantic event model of a syntactic one");
  induce_cmd->add_option("syntactic", syn_path)->required();
  induce_cmd->add_option("-o,--out", out_path);
  induce_cmd->add_option("--dot", dot_path);
  induce_cmd->add_option("--cap", cap, "Candidate enumeration cap");
  induce_cmd->add_flag("--edgewise", keep_edgewise,
                       "Keep the edge-wise relation when verification fails");
  induce_cmd->callback([&] {
    LoadedSyntactic loaded = syntactic_from_json(read_file(syn_path));
    InduceOptions options;
    options.cap = cap;
    options.keep_edgewise = keep_edgewise;
    InduceResult result = induce(loaded.model, loaded.sig, options);
    for (const std::string& w : result.warnings) {
      std::cerr << "warning: " << w << "\n";
    }
    emit(out_path, event_model_to_json(result.model));
    if (!dot_path.empty()) write_file(dot_path, export_dot(result.model));
  });

  auto* bisim_cmd =
      app.add_subcommand("bisim", "Check two pointed models for bisimilarity");
  bisim_cmd->add_option("model1", model_path)->required();
  bisim_cmd->add_option("model2", model2_path)->required();
  bisim_cmd->callback([&] {
    PointedModel a = load_pointed(model_path);
    PointedModel b = load_pointed(model2_path);
    BisimResult result = bisimilar(a, b);
    if (result.bisimilar) {
      std::cout << "bisimilar (witness relation of " << result.witness.size()
                << " pairs)\n";
    } else {
      std::cout << "not bisimilar\n";
      exit_code = 1;
    }
  });

  auto* reduce_cmd =
      app.add_subcommand("reduce", "Rewrite dynamic modalities away");
  reduce_cmd->add_option("formula", formula_text)->required();
  reduce_cmd->add_option("--model", model_path);
  reduce_cmd->add_option("--atoms", atoms_csv);
  reduce_cmd->add_option("--agents", agents_csv);
  reduce_cmd->callback([&] {
    Signature sig =
        resolve_signature(model_path, atoms_csv, agents_csv, formula_text);
    std::cout << to_string(reduce(parse_formula(formula_text, sig), sig), sig)
              << "\n";
  });

  auto* fuzz_cmd = app.add_subcommand(
      "fuzz", "Random-model soundness check of the reduction axioms");
  fuzz_cmd->add_option("--trials", trials, "Trials per axiom schema");
  fuzz_cmd->add_option("--seed", seed);
  fuzz_cmd->add_flag("--corrupted", corrupted,
                     "Use the deliberately corrupted belief schema");
  fuzz_cmd->add_option("--out", fuzz_out, "Report file on failures");
  fuzz_cmd->callback([&] {
    FuzzOptions options;
    options.trials = trials;
    options.seed = seed;
    options.corrupted = corrupted;
    FuzzReport report = soundness_fuzz(options);
    std::cout << "trials=" << report.trials_per_schema
              << " failures=" << report.failures.size() << "\n";
    if (!report.failures.empty()) {
      std::ostringstream json;
      json << "[\n";
      for (std::size_t i = 0; i < report.failures.size(); ++i) {
        const FuzzFailure& f = report.failures[i];
        json << "  {\"trial\": " << f.trial << ", \"schema\": \"" << f.schema
             << "\", \"lhs\": " << (f.lhs ? "true" : "false")
             << ", \"rhs\": " << (f.rhs ? "true" : "false")
             << ",\n   \"instance\": " << std::quoted(f.formula)
             << ",\n   \"model\": " << f.model_json << "}"
             << (i + 1 < report.failures.size() ? ",\n" : "\n");
      }
      json << "]\n";
      write_file(fuzz_out, json.str());
      std::cerr << "report written to " << fuzz_out << "\n";
      exit_code = 1;
    }
  });

  auto* lemma_cmd = app.add_subcommand(
      "lemma", "Check the successor-set lemma on a scenario model");
  lemma_cmd->add_option("--scenario", scenario_name, "gorilla")
      ->default_val("gorilla");
  lemma_cmd->add_option("--agent", agent_name)->required();
  lemma_cmd->add_option("--variant", variant, "plain or default")
      ->default_val("plain");
  lemma_cmd->callback([&] {
    if (scenario_name != "gorilla") {
      throw Error("unknown lemma scenario: " + scenario_name);
    }
    PointedModel pm = gorilla_model();
    const Signature& sig = pm.model.sig;
    AgentIndex agent = sig.agent_index(agent_name);
    if (agent < 0) throw Error("unknown agent: " + agent_name);
    LiteralConjunction phi = parse_literal_conjunction("p & g", sig);
    std::optional<DefaultMap> d;
    bool default_variant = variant == "default";
    if (default_variant) d = scenario_defaults(sig);
    LemmaOutcome outcome = check_lemma(pm, phi, agent, default_variant, d);
    std::string attended;
    for (std::size_t p = outcome.attended.find_first(); p != AtomSet::npos;
         p = outcome.attended.find_next(p)) {
      if (!attended.empty()) attended += ",";
      attended += sig.atom_name(static_cast<int>(p));
    }
    std::cout << (outcome.holds ? "pass" : "fail") << " S={" << attended
              << "}" << (outcome.vacuous ? " (vacuous)" : "") << "\n";
    exit_code = outcome.holds ? 0 : 1;
  });

  auto* scenario_cmd =
      app.add_subcommand("scenario", "Run a scripted scenario");
  scenario_cmd->add_option("name", scenario_name)->required();
  scenario_cmd->callback([&] {
    ScenarioReport report = run_scenario(scenario_name);
    for (const ScenarioCheckResult& c : report.checks) {
      std::cout << (c.actual == c.expected ? "[ok]      " : "[mismatch]")
                << " stage " << c.stage << ": " << c.formula << " expected "
                << (c.expected ? "true" : "false") << ", got "
                << (c.actual ? "true" : "false") << "\n";
    }
    exit_code = report.ok ? 0 : 1;
  });

  auto* succ_cmd = app.add_subcommand(
      "succinctness", "Induced-size table for the succinct families");
  succ_cmd->add_option("--gen", gen_name, "G or Gprime")->default_val("G");
  succ_cmd->add_option("--n-max", n_max)->required();
  succ_cmd->add_option("-o,--out", out_path);
  succ_cmd->add_option("--cap", cap, "Candidate enumeration cap")
      ->default_val(4000000);
  succ_cmd->callback([&] {
    SuccinctFamily family;
    if (gen_name == "G") {
      family = SuccinctFamily::BinaryAttention;
    } else if (gen_name == "Gprime") {
      family = SuccinctFamily::SubsetGrowth;
    } else {
      throw Error("unknown family: " + gen_name);
    }
    std::vector<SuccinctnessRow> rows =
        succinctness_report(family, n_max, cap);
    std::ostringstream csv;
    csv << "n,size,events,millis\n";
    for (const SuccinctnessRow& r : rows) {
      csv << r.n << "," << r.size_tokens << "," << r.events << ","
          << r.millis << "\n";
    }
    emit(out_path, csv.str());
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

}  // namespace attdel
