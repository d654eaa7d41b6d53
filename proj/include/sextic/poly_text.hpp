#ifndef SEXTIC_POLY_TEXT_HPP
#define SEXTIC_POLY_TEXT_HPP

// Text format for polynomials: a sum of terms such as
//   716/19683*x + 17872/177147*y - 11503/708588*x*y + 3568/177147
// The parser accepts any expression built from rational literals, variable
// names, + - * ^ (non-negative integer exponents), parentheses and "/" by a
// nonzero integer literal. Maple-style indexed names z[0] read as z0. Over
// Q(w) the identifier w denotes the cube root of unity unless it is a
// declared variable. The printer emits the expanded canonical form (terms in
// descending graded-lex order) and parse(print(p)) == p.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include "sextic/multipoly.hpp"

namespace sextic {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

template <ExactField S>
class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableList& vars) : text_(text), vars_(vars) {}

  MultiPoly<S> parse() {
    MultiPoly<S> p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly<S> expr() {
    skip_ws();
    bool negate = false;
    if (eat('-')) {
      negate = true;
    } else {
      eat('+');
    }
    MultiPoly<S> acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc += term();
      } else if (eat('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly<S> term() {
    MultiPoly<S> acc = power();
    for (;;) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        skip_ws();
        const mpz_class d = integer();
        if (d == 0) fail("division by zero");
        acc *= S(Rational(mpz_class(1), d));
      } else {
        return acc;
      }
    }
  }

  MultiPoly<S> power() {
    MultiPoly<S> base = atom();
    if (eat('^')) {
      skip_ws();
      bool paren = eat('(');
      skip_ws();
      const mpz_class e = integer();
      if (paren && !eat(')')) fail("expected ')'");
      if (!e.fits_uint_p()) fail("exponent out of range");
      base = sextic::pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  MultiPoly<S> atom() {
    skip_ws();
    if (eat('(')) {
      MultiPoly<S> inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return MultiPoly<S>::constant(vars_, S(Rational(integer())));
    }
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name.push_back(text_[pos_++]);
      }
      if (pos_ < text_.size() && text_[pos_] == '[') {
        ++pos_;
        const mpz_class idx = integer();
        if (!eat(']')) fail("expected ']'");
        name += idx.get_str();
      }
      if (std::find(vars_.begin(), vars_.end(), name) != vars_.end()) {
        return MultiPoly<S>::variable(vars_, name);
      }
      if constexpr (std::is_same_v<S, EisensteinRational>) {
        if (name == "w") return MultiPoly<S>::constant(vars_, EisensteinRational::omega());
      }
      fail("unknown variable '" + name + "'");
    }
    fail("expected a term");
  }

  std::string_view text_;
  const VariableList& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <ExactField S>
MultiPoly<S> parse_poly(std::string_view text, const VariableList& vars) {
  return detail::PolyParser<S>(text, vars).parse();
}

inline std::string monomial_string(const Exponents& e, const VariableList& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

template <ExactField S>
std::string to_string(const MultiPoly<S>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const std::string mono = monomial_string(e, p.variables());
    std::string coef;
    bool negative = false;
    if constexpr (std::is_same_v<S, Rational>) {
      negative = c.sign() < 0;
      const Rational a = negative ? -c : c;
      if (!(a == Rational(1)) || mono.empty()) coef = a.str();
    } else {
      if (c.is_rational()) {
        negative = c.re().sign() < 0;
        const Rational a = negative ? -c.re() : c.re();
        if (!(a == Rational(1)) || mono.empty()) coef = a.str();
      } else {
        coef = "(" + c.str() + ")";
      }
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += coef;
    if (!coef.empty() && !mono.empty()) out += "*";
    out += mono;
  }
  return out;
}

}  // namespace sextic

#endif  // SEXTIC_POLY_TEXT_HPP
