#include "attdel/literals.hpp"

#include "attdel/errors.hpp"

namespace attdel {

LiteralConjunction::LiteralConjunction(AtomSet pos, AtomSet neg)
    : pos_(std::move(pos)), neg_(std::move(neg)) {
  if (pos_.size() != neg_.size()) {
    throw Error("literal conjunction: mismatched universe sizes");
  }
  if ((pos_ & neg_).any()) {
    throw ContradictoryError("conjunction contains an atom and its negation");
  }
}

LiteralConjunction LiteralConjunction::with(AtomIndex u, bool positive) const {
  LiteralConjunction out(*this);
  if (positive) {
    if (neg_.test(u)) {
      throw ContradictoryError("conjunction contains an atom and its negation");
    }
    out.pos_.set(u);
  } else {
    if (pos_.test(u)) {
      throw ContradictoryError("conjunction contains an atom and its negation");
    }
    out.neg_.set(u);
  }
  return out;
}

std::string LiteralConjunction::render(const Signature& sig) const {
  if (is_top()) return "T";
  std::string out;
  for (int u = 0; u < universe_size(); ++u) {
    if (!mentions(u)) continue;
    if (!out.empty()) out += " & ";
    if (neg_.test(u)) out += "~";
    out += sig.universe_atom_name(u);
  }
  return out;
}

}  // namespace attdel
