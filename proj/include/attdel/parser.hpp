#ifndef ATTDEL_PARSER_HPP
#define ATTDEL_PARSER_HPP

#include <string>

#include "attdel/event_formula.hpp"
#include "attdel/formula.hpp"
#include "attdel/literals.hpp"
#include "attdel/signature.hpp"

namespace attdel {

// Parses a formula of 𝓛 in the ASCII concrete syntax. Throws ParseError
// (with position) on syntax errors, UnknownNameError for names outside
// the signature.
Formula parse_formula(const std::string& text, const Signature& sig);

// Parses a formula of the event language 𝓛_E.
EventFormula parse_event_formula(const std::string& text,
                                 const Signature& sig);

// Parses a conjunction of literals and returns its normal form.
LiteralConjunction parse_literal_conjunction(const std::string& text,
                                             const Signature& sig);

// Number of lexical tokens in the text (the size measure for syntactic
// event models).
int count_tokens(const std::string& text);

// Best-effort signature inference from a formula's concrete syntax, for
// CLI convenience when no signature source is given. Agents come from
// h(·,·) and B(·,·) heads and default entries; other plain identifiers
// become atoms.
Signature infer_signature(const std::string& text);

}  // namespace attdel

#endif
