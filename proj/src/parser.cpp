#include "attdel/parser.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <vector>

#include "attdel/errors.hpp"

namespace attdel {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Comma,
  Semi,
  Colon,
  Equals,
  Plus,
  Minus,
  Tilde,
  Amp,
  Pipe,
  Arrow,   // ->
  DArrow,  // =>
  At,
  Prime,   // '
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_char(c)) {
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({Tok::Ident, text.substr(start, i - start), start});
      continue;
    }
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, text.substr(start, len), start});
      i += len;
    };
    switch (c) {
      case '(': push(Tok::LParen, 1); break;
      case ')': push(Tok::RParen, 1); break;
      case '[': push(Tok::LBrack, 1); break;
      case ']': push(Tok::RBrack, 1); break;
      case ',': push(Tok::Comma, 1); break;
      case ';': push(Tok::Semi, 1); break;
      case ':': push(Tok::Colon, 1); break;
      case '~': push(Tok::Tilde, 1); break;
      case '&': push(Tok::Amp, 1); break;
      case '|': push(Tok::Pipe, 1); break;
      case '@': {
        // Named model references take a file name: anything up to
        // whitespace or a closing bracket.
        push(Tok::At, 1);
        std::size_t name_start = i;
        while (i < text.size() &&
               !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != ']' && text[i] != ')') {
          ++i;
        }
        if (i > name_start) {
          out.push_back(
              {Tok::Ident, text.substr(name_start, i - name_start),
               name_start});
        }
        break;
      }
      case '\'': push(Tok::Prime, 1); break;
      case '+': push(Tok::Plus, 1); break;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Tok::Arrow, 2);
        } else {
          push(Tok::Minus, 1);
        }
        break;
      case '=':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          push(Tok::DArrow, 2);
        } else {
          push(Tok::Equals, 1);
        }
        break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         start);
    }
  }
  out.push_back({Tok::End, "", text.size()});
  return out;
}

class Parser {
 public:
  Parser(const std::string& text, const Signature& sig)
      : toks_(tokenize(text)), sig_(sig) {}

  Formula parse_formula_all() {
    Formula f = formula();
    expect_end();
    return f;
  }

  EventFormula parse_event_formula_all() {
    EventFormula f = event_formula();
    expect_end();
    return f;
  }

 private:
  const Token& cur() const { return toks_[idx_]; }
  const Token& peek(int n = 1) const {
    std::size_t j = idx_ + n;
    return toks_[j < toks_.size() ? j : toks_.size() - 1];
  }
  Token next() { return toks_[idx_++]; }
  bool accept(Tok k) {
    if (cur().kind == k) {
      ++idx_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) {
      throw ParseError(std::string("expected ") + what, cur().pos);
    }
  }
  void expect_end() {
    if (cur().kind != Tok::End) {
      throw ParseError("unexpected trailing input", cur().pos);
    }
  }
  bool at_ident(const char* word) const {
    return cur().kind == Tok::Ident && cur().text == word;
  }

  AgentIndex agent(const Token& t) {
    AgentIndex a = sig_.agent_index(t.text);
    if (a < 0) throw UnknownNameError("unknown agent '" + t.text + "'", t.pos);
    return a;
  }
  AtomIndex atom(const Token& t) {
    AtomIndex p = sig_.atom_index(t.text);
    if (p < 0) throw UnknownNameError("unknown atom '" + t.text + "'", t.pos);
    return p;
  }

  // formula := or-level [ "->" formula ] ; right-associative.
  Formula formula() {
    Formula lhs = or_level();
    if (accept(Tok::Arrow)) return Formula::implies(std::move(lhs), formula());
    return lhs;
  }
  Formula or_level() {
    Formula lhs = and_level();
    if (accept(Tok::Pipe)) {
      return Formula::disjunction(std::move(lhs), or_level());
    }
    return lhs;
  }
  Formula and_level() {
    Formula lhs = unary();
    if (accept(Tok::Amp)) {
      return Formula::conjunction(std::move(lhs), and_level());
    }
    return lhs;
  }
  Formula unary() {
    if (accept(Tok::Tilde)) return Formula::negation(unary());
    if (accept(Tok::LBrack)) {
      EventTerm term = event_term();
      expect(Tok::RBrack, "']'");
      return Formula::dynamic(std::move(term), unary());
    }
    return primary();
  }
  Formula primary() {
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    if (cur().kind != Tok::Ident) {
      throw ParseError("expected a formula", cur().pos);
    }
    Token t = next();
    if (t.text == "T") return Formula::top();
    if (t.text == "h" && cur().kind == Tok::LParen) {
      expect(Tok::LParen, "'('");
      Token ta = next_ident("agent name");
      expect(Tok::Comma, "','");
      Token tp = next_ident("atom name");
      expect(Tok::RParen, "')'");
      return Formula::attention(sig_, agent(ta), atom(tp));
    }
    if (t.text == "B" && cur().kind == Tok::LParen) {
      expect(Tok::LParen, "'('");
      Token ta = next_ident("agent name");
      expect(Tok::Comma, "','");
      Formula body = formula();
      expect(Tok::RParen, "')'");
      return Formula::believes(agent(ta), std::move(body));
    }
    return Formula::atom(atom(t));
  }

  Token next_ident(const char* what) {
    if (cur().kind != Tok::Ident) {
      throw ParseError(std::string("expected ") + what, cur().pos);
    }
    return next();
  }

  // Announcements in constructor terms are conjunctions of literals and
  // stored in normal form.
  Formula announcement() {
    std::size_t pos = cur().pos;
    Formula raw = formula();
    try {
      return to_formula(normalize(raw, sig_));
    } catch (const NotAConjunctionError&) {
      throw ParseError("announcement must be a conjunction of literals", pos);
    }
  }

  EventTerm event_term() {
    if (accept(Tok::At)) {
      Token t = next_ident("model name");
      EventTerm term;
      term.kind = EventTerm::Kind::Named;
      term.name = t.text;
      return term;
    }
    Token head = next_ident("event constructor");
    EventTerm term;
    if (head.text == "E") {
      int primes = 0;
      while (accept(Tok::Prime)) ++primes;
      if (primes > 2) throw ParseError("unknown event constructor", head.pos);
      term.kind = primes == 0   ? EventTerm::Kind::Original
                  : primes == 1 ? EventTerm::Kind::Principled
                                : EventTerm::Kind::Truthful;
      expect(Tok::LParen, "'('");
      term.announcement = std::make_shared<const Formula>(announcement());
      expect(Tok::RParen, "')'");
      return term;
    }
    if (head.text == "F") {
      term.kind = EventTerm::Kind::PropAttention;
      expect(Tok::LParen, "'('");
      term.announcement = std::make_shared<const Formula>(announcement());
      expect(Tok::RParen, "')'");
      return term;
    }
    if (head.text == "Ed") {
      term.kind = EventTerm::Kind::DefaultAttention;
      expect(Tok::LParen, "'('");
      Formula ann = announcement();
      expect(Tok::Semi, "';'");
      term.defaults = defaults(normalize(ann, sig_));
      term.announcement = std::make_shared<const Formula>(std::move(ann));
      expect(Tok::RParen, "')'");
      return term;
    }
    throw ParseError("unknown event constructor '" + head.text + "'",
                     head.pos);
  }

  // defaults := [ agent ":" atom "=" ("+"|"-"|"T") { "," ... } ]
  // Omitted entries default to T. Entries must name announced atoms.
  DefaultMap defaults(const LiteralConjunction& ann) {
    DefaultMap d;
    if (cur().kind == Tok::RParen) return d;
    do {
      Token ta = next_ident("agent name");
      AgentIndex a = agent(ta);
      expect(Tok::Colon, "':'");
      Token tp = next_ident("atom name");
      AtomIndex p = atom(tp);
      if (sig_.is_attention(p) || !ann.mentions(p)) {
        throw ParseError("default for atom not in the announcement: " + tp.text,
                         tp.pos);
      }
      expect(Tok::Equals, "'='");
      if (accept(Tok::Plus)) {
        d.set(a, p, Default::Positive);
      } else if (accept(Tok::Minus)) {
        d.set(a, p, Default::Negative);
      } else if (at_ident("T")) {
        next();
        d.set(a, p, Default::Top);
      } else {
        throw ParseError("expected '+', '-' or 'T'", cur().pos);
      }
    } while (accept(Tok::Comma));
    return d;
  }

  // --- event language ---

  EventFormula event_formula() {
    EventFormula lhs = ef_or();
    if (accept(Tok::Arrow)) {
      return EventFormula::implies(std::move(lhs), event_formula());
    }
    return lhs;
  }
  EventFormula ef_or() {
    EventFormula lhs = ef_and();
    if (accept(Tok::Pipe)) {
      return EventFormula::disjunction(std::move(lhs), ef_or());
    }
    return lhs;
  }
  EventFormula ef_and() {
    EventFormula lhs = ef_unary();
    if (accept(Tok::Amp)) {
      return EventFormula::conjunction(std::move(lhs), ef_and());
    }
    return lhs;
  }
  EventFormula ef_unary() {
    if (accept(Tok::Tilde)) return EventFormula::negation(ef_unary());
    if (at_ident("box")) {
      next();
      return EventFormula::box(ef_unary());
    }
    return ef_primary();
  }
  EventFormula ef_primary() {
    if (at_ident("e") && peek().kind == Tok::DArrow) {
      next();
      next();
      expect(Tok::LParen, "'('");
      Formula psi = formula();
      expect(Tok::RParen, "')'");
      return EventFormula::event_implies(std::move(psi));
    }
    if (cur().kind == Tok::LParen) {
      // "(" prop ")=>e" or a parenthesized event formula; decide by
      // trying the formula reading first and checking what follows.
      std::size_t mark = idx_;
      ++idx_;
      std::optional<Formula> psi;
      try {
        psi = formula();
      } catch (const Error&) {
        psi.reset();
      }
      if (psi && cur().kind == Tok::RParen &&
          peek().kind == Tok::DArrow && peek(2).kind == Tok::Ident &&
          peek(2).text == "e") {
        idx_ += 3;
        return EventFormula::implies_event(std::move(*psi));
      }
      idx_ = mark;
      expect(Tok::LParen, "'('");
      EventFormula f = event_formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    throw ParseError("expected an event formula", cur().pos);
  }

  std::vector<Token> toks_;
  std::size_t idx_ = 0;
  const Signature& sig_;
};

}  // namespace

Formula parse_formula(const std::string& text, const Signature& sig) {
  return Parser(text, sig).parse_formula_all();
}

EventFormula parse_event_formula(const std::string& text,
                                 const Signature& sig) {
  return Parser(text, sig).parse_event_formula_all();
}

LiteralConjunction parse_literal_conjunction(const std::string& text,
                                             const Signature& sig) {
  return normalize(parse_formula(text, sig), sig);
}

int count_tokens(const std::string& text) {
  return static_cast<int>(tokenize(text).size()) - 1;  // minus End
}

Signature infer_signature(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  std::set<std::string> agents, atoms;
  const std::set<std::string> keywords = {"T", "h", "B", "E", "F",
                                          "Ed", "box", "e"};
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    const Token& t = toks[i];
    if (t.kind != Tok::Ident) continue;
    if ((t.text == "h" || t.text == "B") && toks[i + 1].kind == Tok::LParen &&
        i + 2 < toks.size() && toks[i + 2].kind == Tok::Ident) {
      agents.insert(toks[i + 2].text);
      if (t.text == "h" && i + 4 < toks.size() &&
          toks[i + 3].kind == Tok::Comma && toks[i + 4].kind == Tok::Ident) {
        atoms.insert(toks[i + 4].text);
      }
      continue;
    }
    // defaults entry: agent ":" atom "="
    if (toks[i + 1].kind == Tok::Colon) {
      agents.insert(t.text);
      if (i + 2 < toks.size() && toks[i + 2].kind == Tok::Ident) {
        atoms.insert(toks[i + 2].text);
      }
      continue;
    }
    if (i > 0 && toks[i - 1].kind == Tok::At) continue;
    if (toks[i + 1].kind == Tok::LParen || toks[i + 1].kind == Tok::Prime) {
      continue;  // constructor or operator head
    }
    if (keywords.count(t.text)) continue;
    if (i > 0 && (toks[i - 1].kind == Tok::Colon)) continue;
    atoms.insert(t.text);
  }
  // Drop names already classified as agents.
  for (const auto& a : agents) atoms.erase(a);
  if (atoms.empty()) atoms.insert("p");
  if (agents.empty()) agents.insert("a");
  return Signature(std::vector<std::string>(agents.begin(), agents.end()),
                   std::vector<std::string>(atoms.begin(), atoms.end()));
}

}  // namespace attdel
