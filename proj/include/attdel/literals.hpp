#ifndef ATTDEL_LITERALS_HPP
#define ATTDEL_LITERALS_HPP

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <vector>

#include "attdel/signature.hpp"

namespace attdel {

using AtomSet = boost::dynamic_bitset<>;

// A consistent conjunction of literals over At ∪ H in normal form: each
// atom at most once, literals in the fixed universe order, the empty
// conjunction standing for ⊤. Equality is value equality of the positive
// and negative sets.
class LiteralConjunction {
 public:
  explicit LiteralConjunction(int universe_size)
      : pos_(universe_size), neg_(universe_size) {}
  LiteralConjunction(AtomSet pos, AtomSet neg);

  static LiteralConjunction top(const Signature& sig) {
    return LiteralConjunction(sig.universe_size());
  }

  int universe_size() const { return static_cast<int>(pos_.size()); }
  const AtomSet& positive() const { return pos_; }
  const AtomSet& negative() const { return neg_; }

  bool is_top() const { return pos_.none() && neg_.none(); }
  std::size_t literal_count() const { return pos_.count() + neg_.count(); }

  bool has_positive(AtomIndex u) const { return pos_.test(u); }
  bool has_negative(AtomIndex u) const { return neg_.test(u); }
  // The atom occurs, with either sign.
  bool mentions(AtomIndex u) const { return pos_.test(u) || neg_.test(u); }

  // Returns a copy extended with one literal; throws ContradictoryError
  // if the opposite literal is already present.
  LiteralConjunction with(AtomIndex u, bool positive) const;

  // Lit(other) ⊆ Lit(*this); ⊤ is contained in everything.
  bool contains(const LiteralConjunction& other) const {
    return other.pos_.is_subset_of(pos_) && other.neg_.is_subset_of(neg_);
  }

  // Set of atoms mentioned (either sign).
  AtomSet mentioned() const { return pos_ | neg_; }

  // Rendering in the fixed literal order; "T" when empty.
  std::string render(const Signature& sig) const;

  bool operator==(const LiteralConjunction& other) const {
    return pos_ == other.pos_ && neg_ == other.neg_;
  }
  bool operator!=(const LiteralConjunction& other) const {
    return !(*this == other);
  }
  bool operator<(const LiteralConjunction& other) const {
    if (pos_ != other.pos_) return pos_ < other.pos_;
    return neg_ < other.neg_;
  }

 private:
  AtomSet pos_;
  AtomSet neg_;
};

}  // namespace attdel

#endif
