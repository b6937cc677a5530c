#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "resplan/errors.hpp"
#include "resplan/formula.hpp"
#include "resplan/symbols.hpp"

namespace resplan {

enum class ParseMode { Propositional, Ltl };

namespace detail {

// Grammar, loosest binding first:
//   formula := implies
//   implies := or ("->" implies)?
//   or      := and ("|" and)*
//   and     := until ("&" until)*
//   until   := unary ("U" until)?
//   unary   := "!" unary | "X" unary | "G" unary | "F" unary | atom
//   atom    := "(" formula ")" | "do" "(" IDENT "," IDENT ")" | "true" | "false" | IDENT
// X U G F do true false are reserved and cannot name propositions.
class FormulaParser {
 public:
  FormulaParser(std::string_view text, ParseMode mode, const Vocabulary& vocab)
      : text_(text), mode_(mode), vocab_(vocab) {}

  Formula parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty formula", pos_);
    Formula f = parse_implies();
    skip_ws();
    if (pos_ < text_.size()) throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  std::string_view text_;
  ParseMode mode_;
  const Vocabulary& vocab_;
  std::size_t pos_ = 0;

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view symbol) {
    skip_ws();
    if (text_.substr(pos_, symbol.size()) != symbol) return false;
    pos_ += symbol.size();
    return true;
  }

  void expect(std::string_view symbol) {
    if (!eat(symbol)) {
      throw ParseError("expected '" + std::string(symbol) + "'", pos_);
    }
  }

  // Returns the identifier at the cursor without consuming it; empty if none.
  std::string_view peek_ident() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) return {};
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  bool eat_keyword(std::string_view kw) {
    if (peek_ident() != kw) return false;
    pos_ += kw.size();
    return true;
  }

  Formula temporal(std::string_view op, Formula f, std::size_t at) {
    if (mode_ == ParseMode::Propositional) {
      throw ParseError("temporal operator '" + std::string(op) + "' is not allowed here", at);
    }
    if (op == "X") return Formula::next(std::move(f));
    if (op == "G") return Formula::globally(std::move(f));
    return Formula::eventually(std::move(f));
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (eat("->")) return Formula::implies(std::move(lhs), parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (eat("|")) f = Formula::disj(std::move(f), parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_until();
    while (eat("&")) f = Formula::conj(std::move(f), parse_until());
    return f;
  }

  Formula parse_until() {
    std::size_t at = pos_;
    Formula lhs = parse_unary();
    skip_ws();
    std::size_t op_at = pos_;
    if (eat_keyword("U")) {
      if (mode_ == ParseMode::Propositional) {
        throw ParseError("temporal operator 'U' is not allowed here", op_at);
      }
      (void)at;
      return Formula::until(std::move(lhs), parse_until());
    }
    return lhs;
  }

  Formula parse_unary() {
    if (eat("!")) return Formula::negation(parse_unary());
    skip_ws();
    std::size_t at = pos_;
    for (std::string_view op : {"X", "G", "F"}) {
      if (eat_keyword(op)) return temporal(op, parse_unary(), at);
    }
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    std::size_t at = pos_;
    if (eat("(")) {
      Formula f = parse_implies();
      expect(")");
      return f;
    }
    if (eat_keyword("true")) return Formula::constant(true);
    if (eat_keyword("false")) return Formula::constant(false);
    if (eat_keyword("do")) {
      expect("(");
      AgentId agent = parse_name(vocab_.agents, "agent");
      expect(",");
      ActionId action = parse_name(vocab_.actions, "action");
      expect(")");
      return Formula::does(agent, action);
    }
    std::string_view ident = peek_ident();
    if (ident.empty()) throw ParseError("expected a formula", at);
    if (ident == "U") throw ParseError("'U' needs a left operand", at);
    pos_ += ident.size();
    auto id = vocab_.props.find(ident);
    if (!id) throw ParseError("undeclared proposition: " + std::string(ident), at);
    return Formula::prop(*id);
  }

  int parse_name(const SymbolTable& table, std::string_view what) {
    skip_ws();
    std::size_t at = pos_;
    std::string_view ident = peek_ident();
    if (ident.empty()) throw ParseError("expected " + std::string(what) + " name", at);
    pos_ += ident.size();
    auto id = table.find(ident);
    if (!id) {
      throw ParseError("undeclared " + std::string(what) + ": " + std::string(ident), at);
    }
    return *id;
  }
};

}  // namespace detail

inline Formula parse_formula(std::string_view text, ParseMode mode, const Vocabulary& vocab) {
  return detail::FormulaParser(text, mode, vocab).parse();
}

}  // namespace resplan
