#ifndef ATTDEL_IO_HPP
#define ATTDEL_IO_HPP

#include <string>
#include <vector>

#include "attdel/kripke.hpp"
#include "attdel/syntactic.hpp"

namespace attdel {

// JSON model format:
//   {"agents":[...], "atoms":[...],
//    "worlds":[{"id":"w0","val":["p","h(a,p)"]}, ...],
//    "relations":{"a":[["w0","w1"], ...], ...},
//    "points":["w0"]}
// Event models replace "worlds" by "events":[{"id":...}], map ids to
// precondition strings under "pre", and list "designated" ids.

struct LoadedKripke {
  KripkeModel model;
  std::vector<int> points;
};

LoadedKripke kripke_from_json(const std::string& text);
std::string kripke_to_json(const KripkeModel& m, const std::vector<int>& points);

MultiPointedEventModel event_model_from_json(const std::string& text);
std::string event_model_to_json(const MultiPointedEventModel& me);

// Syntactic model format: {"agents":[...]?, "atoms":[...]?,
// "psi_E":"...", "psi_a":{"a":"..."}, "psi_Ed":"..."?}. Agents default
// to the psi_a keys; atoms default to the atoms mentioned across the
// formulas.
struct LoadedSyntactic {
  Signature sig;
  SyntacticEventModel model;
};
LoadedSyntactic syntactic_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// DOT export: states labeled with their true literals (worlds) or
// preconditions (events), designated states double-circled, edges
// labeled by the agents sharing them. Deterministic output.
std::string export_dot(const KripkeModel& m, const std::vector<int>& designated);
std::string export_dot(const PointedModel& pm);
std::string export_dot(const MultiPointedEventModel& me);

}  // namespace attdel

#endif
