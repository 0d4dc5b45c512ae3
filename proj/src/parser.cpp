#include <algorithm>
#include <cctype>
#include <set>

#include "resint/errors.hpp"
#include "resint/rational_map.hpp"

namespace resint {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Number, std::string(src.substr(i, j - i)), l, cc});
      advance(j - i);
    } else if (std::string_view("+-*/^(),;=").find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), l, cc});
      advance(1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  RationalMap parse_map() {
    RationalMap m;
    expect_word("vars");
    m.state_vars = name_list();
    expect(";");
    if (peek().kind == Tok::Ident && peek().text == "params") {
      next();
      m.params = name_list();
      expect(";");
    }
    std::set<std::string> seen;
    for (const auto& n : m.all_variables()) {
      if (!seen.insert(n).second) throw ParseError("duplicate declaration of '" + n + "'", decl_line_, decl_col_);
    }
    names_ = m.all_variables();
    expect_word("f");
    expect("=");
    const Token open = peek();
    expect("(");
    m.components.push_back(expression());
    while (accept(",")) m.components.push_back(expression());
    expect(")");
    accept(";");
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "' after map definition");
    if (m.components.size() != m.state_vars.size()) {
      throw ParseError("map has " + std::to_string(m.components.size()) + " components but " +
                           std::to_string(m.state_vars.size()) + " state variables",
                       open.line, open.column);
    }
    return m;
  }

  RationalFunction parse_expression(const std::vector<std::string>& names) {
    names_ = names;
    RationalFunction e = expression();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  bool accept(std::string_view sym) {
    if (peek().kind == Tok::Symbol && peek().text == sym) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(std::string_view sym) {
    if (!accept(sym)) {
      fail("expected '" + std::string(sym) + "' but found " +
           (peek().kind == Tok::End ? std::string("end of input") : "'" + peek().text + "'"));
    }
  }

  void expect_word(std::string_view word) {
    if (peek().kind != Tok::Ident || peek().text != word) fail("expected '" + std::string(word) + "'");
    ++pos_;
  }

  std::vector<std::string> name_list() {
    std::vector<std::string> out;
    do {
      if (peek().kind != Tok::Ident) fail("expected an identifier");
      decl_line_ = peek().line;
      decl_col_ = peek().column;
      out.push_back(next().text);
    } while (accept(","));
    return out;
  }

  RationalFunction expression() {
    RationalFunction acc = term();
    while (true) {
      if (accept("+")) {
        acc = acc + term();
      } else if (accept("-")) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      if (accept("*")) {
        acc = acc * unary();
      } else if (peek().kind == Tok::Symbol && peek().text == "/") {
        const Token slash = next();
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("identically zero denominator", slash.line, slash.column);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (peek().kind == Tok::Symbol && peek().text == "^") {
      const Token caret = next();
      const long e = exponent();
      if (e < 0 && base.is_zero()) throw ParseError("negative power of zero", caret.line, caret.column);
      return pow(base, e);
    }
    return base;
  }

  long exponent() {
    bool negative = false;
    bool paren = accept("(");
    if (accept("-")) negative = true;
    if (peek().kind != Tok::Number) fail("expected an integer exponent");
    const Token t = next();
    if (t.text.size() > 6) throw ParseError("exponent too large", t.line, t.column);
    long e = std::stol(t.text);
    if (paren) expect(")");
    return negative ? -e : e;
  }

  RationalFunction primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      next();
      return RationalFunction(Rational(Integer(t.text)));
    }
    if (t.kind == Tok::Ident) {
      if (std::find(names_.begin(), names_.end(), t.text) == names_.end()) {
        throw ParseError("undeclared variable '" + t.text + "'", t.line, t.column);
      }
      next();
      return RationalFunction(MultiPoly::variable(t.text));
    }
    if (accept("(")) {
      RationalFunction e = expression();
      expect(")");
      return e;
    }
    fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
  int decl_line_ = 1, decl_col_ = 1;
};

}  // namespace

RationalMap parse_map(std::string_view text) { return Parser(text).parse_map(); }

RationalFunction parse_expression(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text).parse_expression(names);
}

}  // namespace resint
