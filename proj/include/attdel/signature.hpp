#ifndef ATTDEL_SIGNATURE_HPP
#define ATTDEL_SIGNATURE_HPP

#include <string>
#include <vector>

#include "attdel/errors.hpp"

namespace attdel {

// An index into the combined atom universe At ∪ H of a Signature.
// Indices [0, atom_count) are the propositional atoms in lexicographic
// order; the rest are attention atoms h(a,p) ordered by (agent, atom).
using AtomIndex = int;
using AgentIndex = int;

// The vocabulary a model or formula lives over: a finite set of agent
// names and a finite set of propositional atom names. The attention
// atoms h(a,p) are derived, never stored.
class Signature {
 public:
  Signature(std::vector<std::string> agents, std::vector<std::string> atoms);

  int agent_count() const { return static_cast<int>(agents_.size()); }
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  // Size of At ∪ H.
  int universe_size() const { return atom_count() * (1 + agent_count()); }

  const std::vector<std::string>& agents() const { return agents_; }
  const std::vector<std::string>& atoms() const { return atoms_; }

  const std::string& agent_name(AgentIndex a) const { return agents_.at(a); }
  const std::string& atom_name(AtomIndex p) const { return atoms_.at(p); }

  // -1 when the name is unknown.
  AgentIndex agent_index(const std::string& name) const;
  AtomIndex atom_index(const std::string& name) const;

  bool is_attention(AtomIndex u) const { return u >= atom_count(); }
  AtomIndex attention_atom(AgentIndex a, AtomIndex p) const {
    return atom_count() + a * atom_count() + p;
  }
  AgentIndex agent_of(AtomIndex u) const {
    return (u - atom_count()) / atom_count();
  }
  AtomIndex atom_of(AtomIndex u) const {
    return is_attention(u) ? (u - atom_count()) % atom_count() : u;
  }

  // Rendering of a universe atom: "p" or "h(a,p)".
  std::string universe_atom_name(AtomIndex u) const;

  bool operator==(const Signature& other) const {
    return agents_ == other.agents_ && atoms_ == other.atoms_;
  }

 private:
  std::vector<std::string> agents_;  // sorted, unique
  std::vector<std::string> atoms_;   // sorted, unique
};

}  // namespace attdel

#endif
