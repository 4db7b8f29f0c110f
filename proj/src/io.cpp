#include "attdel/io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "attdel/errors.hpp"
#include "attdel/parser.hpp"

namespace attdel {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError("invalid JSON");
  return j;
}

Signature signature_from_json(const json& j) {
  if (!j.contains("agents") || !j.contains("atoms")) {
    throw IoError("model JSON needs \"agents\" and \"atoms\"");
  }
  return Signature(j.at("agents").get<std::vector<std::string>>(),
                   j.at("atoms").get<std::vector<std::string>>());
}

json signature_to_json(const Signature& sig) {
  json j;
  j["agents"] = sig.agents();
  j["atoms"] = sig.atoms();
  return j;
}

int state_index(const KripkeModel& m, const std::string& id) {
  return m.world_index(id);
}
int state_index(const EventModel& m, const std::string& id) {
  return m.event_index(id);
}

template <typename Model>
void relations_from_json(const json& j, Model& m) {
  m.init_relations();
  if (!j.contains("relations")) return;
  for (const auto& [agent, pairs] : j.at("relations").items()) {
    AgentIndex a = m.sig.agent_index(agent);
    if (a < 0) throw IoError("relations mention unknown agent: " + agent);
    for (const auto& pair : pairs) {
      if (!pair.is_array() || pair.size() != 2) {
        throw IoError("relation entries must be [from, to] pairs");
      }
      m.rel.add(a, state_index(m, pair.at(0).template get<std::string>()),
                state_index(m, pair.at(1).template get<std::string>()));
    }
  }
}

template <typename Model>
json relations_to_json(const Model& m, const std::vector<std::string>& ids) {
  json rel = json::object();
  for (int a = 0; a < m.sig.agent_count(); ++a) {
    json pairs = json::array();
    for (std::size_t from = 0; from < ids.size(); ++from) {
      const AtomSet& succ = m.rel.successors(a, static_cast<int>(from));
      for (std::size_t to = succ.find_first(); to != AtomSet::npos;
           to = succ.find_next(to)) {
        pairs.push_back({ids[from], ids[to]});
      }
    }
    rel[m.sig.agent_name(a)] = std::move(pairs);
  }
  return rel;
}

}  // namespace

LoadedKripke kripke_from_json(const std::string& text) {
  json j = parse_json(text);
  KripkeModel m(signature_from_json(j));
  if (!j.contains("worlds") || j.at("worlds").empty()) {
    throw IoError("Kripke models need a non-empty \"worlds\" array");
  }
  for (const auto& w : j.at("worlds")) {
    AtomSet val(m.sig.universe_size());
    if (w.contains("val")) {
      for (const auto& lit : w.at("val")) {
        std::string name = lit.get<std::string>();
        Formula f = parse_formula(name, m.sig);
        if (f.kind() != FormulaKind::Atom) {
          throw IoError("valuations list atoms, got: " + name);
        }
        val.set(f.atom_index());
      }
    }
    m.add_world(w.at("id").get<std::string>(), std::move(val));
  }
  relations_from_json(j, m);
  LoadedKripke out{std::move(m), {}};
  if (j.contains("points")) {
    for (const auto& p : j.at("points")) {
      out.points.push_back(out.model.world_index(p.get<std::string>()));
    }
  }
  return out;
}

std::string kripke_to_json(const KripkeModel& m,
                           const std::vector<int>& points) {
  json j = signature_to_json(m.sig);
  json worlds = json::array();
  for (int w = 0; w < m.world_count(); ++w) {
    json val = json::array();
    const AtomSet& v = m.valuation[w];
    for (std::size_t u = v.find_first(); u != AtomSet::npos;
         u = v.find_next(u)) {
      val.push_back(m.sig.universe_atom_name(static_cast<int>(u)));
    }
    worlds.push_back({{"id", m.world_ids[w]}, {"val", std::move(val)}});
  }
  j["worlds"] = std::move(worlds);
  j["relations"] = relations_to_json(m, m.world_ids);
  json pts = json::array();
  for (int p : points) pts.push_back(m.world_ids[p]);
  j["points"] = std::move(pts);
  return j.dump(2);
}

MultiPointedEventModel event_model_from_json(const std::string& text) {
  json j = parse_json(text);
  EventModel m(signature_from_json(j));
  if (!j.contains("events") || j.at("events").empty()) {
    throw IoError("event models need a non-empty \"events\" array");
  }
  const json& pre = j.contains("pre") ? j.at("pre") : json::object();
  for (const auto& entry : j.at("events")) {
    std::string id = entry.is_string() ? entry.get<std::string>()
                                       : entry.at("id").get<std::string>();
    // Events without an explicit precondition are their own: the id is
    // read as a formula.
    std::string pre_text =
        pre.contains(id) ? pre.at(id).get<std::string>() : id;
    m.add_event(std::move(id), parse_formula(pre_text, m.sig));
  }
  relations_from_json(j, m);
  MultiPointedEventModel out{std::move(m)};
  if (j.contains("designated")) {
    for (const auto& d : j.at("designated")) {
      out.designated.set(out.model.event_index(d.get<std::string>()));
    }
  } else {
    out.designated.set();
  }
  if (out.designated.none()) {
    throw IoError("the designated event set must be non-empty");
  }
  return out;
}

std::string event_model_to_json(const MultiPointedEventModel& me) {
  const EventModel& m = me.model;
  json j = signature_to_json(m.sig);
  json events = json::array();
  json pre = json::object();
  for (int e = 0; e < m.event_count(); ++e) {
    events.push_back({{"id", m.event_ids[e]}});
    pre[m.event_ids[e]] = to_string(m.pre[e], m.sig);
  }
  j["events"] = std::move(events);
  j["pre"] = std::move(pre);
  j["relations"] = relations_to_json(m, m.event_ids);
  json des = json::array();
  for (int e : me.designated_indices()) des.push_back(m.event_ids[e]);
  j["designated"] = std::move(des);
  return j.dump(2);
}

LoadedSyntactic syntactic_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.contains("psi_E") || !j.contains("psi_a")) {
    throw IoError("syntactic models need \"psi_E\" and \"psi_a\"");
  }
  std::vector<std::string> agents;
  if (j.contains("agents")) {
    agents = j.at("agents").get<std::vector<std::string>>();
  } else {
    for (const auto& [agent, _] : j.at("psi_a").items()) {
      agents.push_back(agent);
    }
  }
  std::vector<std::string> atoms;
  if (j.contains("atoms")) {
    atoms = j.at("atoms").get<std::vector<std::string>>();
  } else {
    // Fall back to the atoms mentioned anywhere in the formulas.
    std::string all = j.at("psi_E").get<std::string>();
    for (const auto& [_, f] : j.at("psi_a").items()) {
      all += " & " + f.get<std::string>();
    }
    if (j.contains("psi_Ed")) all += " & " + j.at("psi_Ed").get<std::string>();
    Signature guess = infer_signature(all);
    atoms = guess.atoms();
  }
  Signature sig(std::move(agents), std::move(atoms));

  EventFormula psi_E = parse_event_formula(j.at("psi_E").get<std::string>(), sig);
  std::vector<EventFormula> psi_agents;
  for (int a = 0; a < sig.agent_count(); ++a) {
    const std::string& name = sig.agent_name(a);
    if (!j.at("psi_a").contains(name)) {
      throw IoError("psi_a is missing agent: " + name);
    }
    psi_agents.push_back(
        parse_event_formula(j.at("psi_a").at(name).get<std::string>(), sig));
  }
  std::optional<EventFormula> psi_Ed;
  if (j.contains("psi_Ed")) {
    psi_Ed = parse_event_formula(j.at("psi_Ed").get<std::string>(), sig);
  }
  return LoadedSyntactic{
      std::move(sig),
      SyntacticEventModel{std::move(psi_E), std::move(psi_agents),
                          std::move(psi_Ed)}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write file: " + path);
  out << content;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

template <typename Model>
std::string dot_body(const Model& m, const std::vector<std::string>& ids,
                     const std::vector<std::string>& labels,
                     const std::vector<bool>& designated) {
  std::ostringstream out;
  out << "digraph model {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out << "  \"" << dot_escape(ids[i]) << "\" [label=\""
        << dot_escape(labels[i]) << "\"";
    if (designated[i]) out << ", peripheries=2";
    out << "];\n";
  }
  for (std::size_t from = 0; from < ids.size(); ++from) {
    for (std::size_t to = 0; to < ids.size(); ++to) {
      std::string agents;
      for (int a = 0; a < m.sig.agent_count(); ++a) {
        if (m.rel.has(a, static_cast<int>(from), static_cast<int>(to))) {
          if (!agents.empty()) agents += ",";
          agents += m.sig.agent_name(a);
        }
      }
      if (!agents.empty()) {
        out << "  \"" << dot_escape(ids[from]) << "\" -> \""
            << dot_escape(ids[to]) << "\" [label=\"" << agents << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_dot(const KripkeModel& m,
                       const std::vector<int>& designated) {
  std::vector<std::string> labels;
  for (int w = 0; w < m.world_count(); ++w) {
    // All literals true at the world, in normal-form order.
    std::string label;
    for (int u = 0; u < m.sig.universe_size(); ++u) {
      if (!label.empty()) label += " ";
      if (!m.valuation[w].test(u)) label += "~";
      label += m.sig.universe_atom_name(u);
    }
    labels.push_back(std::move(label));
  }
  std::vector<bool> des(m.world_count(), false);
  for (int d : designated) des[d] = true;
  return dot_body(m, m.world_ids, labels, des);
}

std::string export_dot(const PointedModel& pm) {
  return export_dot(pm.model, {pm.point});
}

std::string export_dot(const MultiPointedEventModel& me) {
  const EventModel& m = me.model;
  std::vector<std::string> labels;
  for (int e = 0; e < m.event_count(); ++e) {
    labels.push_back(m.pre_conj[e] ? m.pre_conj[e]->render(m.sig)
                                   : to_string(m.pre[e], m.sig));
  }
  std::vector<bool> des(m.event_count(), false);
  for (int e : me.designated_indices()) des[e] = true;
  return dot_body(m, m.event_ids, labels, des);
}

}  // namespace attdel
