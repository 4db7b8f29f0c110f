#include "attdel/signature.hpp"

#include <algorithm>

namespace attdel {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> names,
                                       const char* what) {
  if (names.empty()) {
    throw Error(std::string("signature requires at least one ") + what);
  }
  std::sort(names.begin(), names.end());
  auto dup = std::adjacent_find(names.begin(), names.end());
  if (dup != names.end()) {
    throw Error(std::string("duplicate ") + what + " name: " + *dup);
  }
  return names;
}

}  // namespace

Signature::Signature(std::vector<std::string> agents,
                     std::vector<std::string> atoms)
    : agents_(sorted_unique(std::move(agents), "agent")),
      atoms_(sorted_unique(std::move(atoms), "atom")) {}

AgentIndex Signature::agent_index(const std::string& name) const {
  auto it = std::lower_bound(agents_.begin(), agents_.end(), name);
  if (it == agents_.end() || *it != name) return -1;
  return static_cast<AgentIndex>(it - agents_.begin());
}

AtomIndex Signature::atom_index(const std::string& name) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end() || *it != name) return -1;
  return static_cast<AtomIndex>(it - atoms_.begin());
}

std::string Signature::universe_atom_name(AtomIndex u) const {
  if (!is_attention(u)) return atom_name(u);
  return "h(" + agent_name(agent_of(u)) + "," + atom_name(atom_of(u)) + ")";
}

}  // namespace attdel
