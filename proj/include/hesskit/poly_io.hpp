#pragma once

// Text form of polynomials.
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coef ('*' factor)* | factor ('*' factor)*
//   coef   := INT ['/' INT]
//   factor := NAME ['^' INT]      (exponent >= 1; '^1' optional)
//
// Whitespace is ignored. With a declared variable set, unknown names are
// parse errors; with none, the set is inferred as the sorted unique names
// appearing in the text.

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hesskit/error.hpp"
#include "hesskit/poly.hpp"

namespace hesskit {

namespace detail {

enum class TokKind { Int, Name, Plus, Minus, Star, Caret, Slash, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto bump = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      bump(c);
      ++i;
      continue;
    }
    std::size_t tl = line, tc = col;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num += text[i];
        bump(text[i]);
        ++i;
      }
      out.push_back({TokKind::Int, std::move(num), tl, tc});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        name += text[i];
        bump(text[i]);
        ++i;
      }
      out.push_back({TokKind::Name, std::move(name), tl, tc});
      continue;
    }
    TokKind k;
    switch (c) {
      case '+': k = TokKind::Plus; break;
      case '-': k = TokKind::Minus; break;
      case '*': k = TokKind::Star; break;
      case '^': k = TokKind::Caret; break;
      case '/': k = TokKind::Slash; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    out.push_back({k, std::string(1, c), tl, tc});
    bump(c);
    ++i;
  }
  out.push_back({TokKind::End, "", line, col});
  return out;
}

class PolyParser {
 public:
  PolyParser(std::vector<Token> toks, VarSetPtr vars)
      : toks_(std::move(toks)), vars_(std::move(vars)) {}

  PolyQ run() {
    PolyQ acc = PolyQ::zero(vars_);
    bool negative = false;
    if (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      negative = peek().kind == TokKind::Minus;
      advance();
    }
    acc += term(negative);
    while (peek().kind != TokKind::End) {
      if (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
        bool neg = peek().kind == TokKind::Minus;
        advance();
        acc += term(neg);
      } else {
        fail("expected '+' or '-' between terms");
      }
    }
    return acc;
  }

 private:
  PolyQ term(bool negative) {
    Rat coef(negative ? -1 : 1);
    Exponents exps(vars_->size(), 0);
    bool saw_factor = false;
    if (peek().kind == TokKind::Int) {
      std::string num = advance().text;
      if (peek().kind == TokKind::Slash) {
        advance();
        if (peek().kind != TokKind::Int) fail("expected denominator");
        num += "/" + advance().text;
      }
      coef = coef * Rat::from_string(num);
      saw_factor = true;
      if (peek().kind == TokKind::Star) {
        advance();
        factor(exps);
      }
    } else {
      factor(exps);
      saw_factor = true;
    }
    while (peek().kind == TokKind::Star) {
      advance();
      factor(exps);
    }
    if (!saw_factor) fail("expected term");
    return PolyQ::monomial(vars_, std::move(exps), coef);
  }

  void factor(Exponents& exps) {
    if (peek().kind != TokKind::Name) fail("expected variable");
    const Token& tok = advance();
    auto idx = vars_->index(tok.text);
    if (!idx) {
      throw ParseError("unknown variable '" + tok.text + "'", tok.line, tok.col);
    }
    int e = 1;
    if (peek().kind == TokKind::Caret) {
      advance();
      if (peek().kind != TokKind::Int) fail("expected exponent");
      const Token& etok = advance();
      try {
        e = std::stoi(etok.text);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", etok.line, etok.col);
      }
      if (e < 1) throw ParseError("exponent must be at least 1", etok.line, etok.col);
    }
    exps[*idx] += e;
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().col);
  }

  std::vector<Token> toks_;
  VarSetPtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parse with a declared variable set.
inline PolyQ parse_poly(const std::string& text, VarSetPtr vars) {
  return detail::PolyParser(detail::tokenize(text), std::move(vars)).run();
}

// Parse inferring the variable set (sorted unique names in the text).
inline PolyQ parse_poly(const std::string& text) {
  auto toks = detail::tokenize(text);
  std::set<std::string> names;
  for (const auto& t : toks) {
    if (t.kind == detail::TokKind::Name) names.insert(t.text);
  }
  VarSetPtr vars = VarSet::make({names.begin(), names.end()});
  return detail::PolyParser(std::move(toks), std::move(vars)).run();
}

inline std::string format_monomial(const VarSet& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

// Canonical text: terms in descending lexicographic order.
inline std::string format_poly(const PolyQ& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    bool neg = c.sign() < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono = format_monomial(*p.vars(), e);
    Rat a = c.abs();
    if (mono.empty()) {
      out += a.str();
    } else if (a.is_one()) {
      out += mono;
    } else {
      out += a.str() + "*" + mono;
    }
  }
  return out;
}

// F_p polynomials print nonnegative residues.
inline std::string format_poly(const PolyFp& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += " + ";
    std::string mono = format_monomial(*p.vars(), e);
    if (mono.empty()) {
      out += std::to_string(c.value());
    } else if (c.value() == 1) {
      out += mono;
    } else {
      out += std::to_string(c.value()) + "*" + mono;
    }
  }
  return out;
}

}  // namespace hesskit
