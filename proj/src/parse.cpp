// Recursive-descent reader for the polynomial text format:
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer ('/' integer)? | variable | '(' expr ')'
// Only integer and integer/integer literals are accepted.

#include <cctype>

#include "fsc/polynomial.hpp"

namespace fsc {
namespace {

class Parser {
public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                       " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out.push_back(text_[pos_++]);
    }
    if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
      if (text_[pos_] == '.') fail("floating-point literal");
      // "2e3" reads as a float; a variable named e must follow '*'.
      fail("floating-point literal");
    }
    return out;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      const std::string e = digits();
      if (e.empty()) fail("expected exponent");
      if (e.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Polynomial atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '.') fail("floating-point literal");
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = digits();
      Rational q(Integer(num), 1);
      if (accept('/')) {
        const std::string den = digits();
        if (den.empty()) fail("expected denominator");
        const Integer d(den);
        if (d == 0) fail("zero denominator");
        q = Rational(Integer(num), d);
        q.canonicalize();
      }
      return Polynomial::constant(ring_, q);
    }
    if (accept('(')) {
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name.push_back(text_[pos_++]);
      }
      const auto idx = ring_->index_of(name);
      if (idx == ring_->size()) fail("unknown variable '" + name + "'");
      return Polynomial::variable(ring_, idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

Rational parse_rational(std::string_view text) {
  auto ring = make_ring({});
  Polynomial p = parse_polynomial(text, ring);
  return p.constant_term();
}

}  // namespace fsc
