#include "regalia/parse.hpp"

#include <cctype>

namespace regalia {

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse() {
    Polynomial f = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  long long parse_int() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    if (pos_ - start > 18) fail("integer literal too large");
    long long v = 0;
    for (size_t i = start; i < pos_; ++i) v = v * 10 + (text_[i] - '0');
    return v;
  }

  Polynomial parse_expr() {
    bool negate = false;
    skip_ws();
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Polynomial f = parse_term();
    if (negate) f = -f;
    while (true) {
      skip_ws();
      if (accept('+'))
        f = f + parse_term();
      else if (accept('-'))
        f = f - parse_term();
      else
        break;
    }
    return f;
  }

  Polynomial parse_term() {
    Polynomial f = parse_factor();
    while (accept('*')) f = f * parse_factor();
    return f;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_atom();
    if (accept('^')) {
      long long e = parse_int();
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<int>(e));
    }
    return base;
  }

  Polynomial parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial f = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = parse_int();
      if (accept('/')) {
        long long den = parse_int();
        if (den == 0) fail("zero denominator");
        Scalar s = ring_->field().from_fraction(num, den);
        return Polynomial::from_terms(ring_, {Term{s, Monomial::one(ring_->nvars())}});
      }
      return Polynomial::constant(ring_, num);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (int v = 0; v < ring_->nvars(); ++v)
        if (ring_->var_name(v) == name) return Polynomial::variable(ring_, v);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  RingPtr ring_;
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
  return PolyParser(ring, text).parse();
}

std::vector<Polynomial> parse_polynomial_list(const RingPtr& ring, std::string_view text) {
  std::vector<Polynomial> out;
  int depth = 0;
  size_t start = 0;
  auto flush = [&](size_t end) {
    std::string_view piece = text.substr(start, end - start);
    size_t i = 0;
    while (i < piece.size() && std::isspace(static_cast<unsigned char>(piece[i]))) ++i;
    if (i == piece.size()) throw ParseError("empty polynomial in list", start + i);
    out.push_back(parse_polynomial(ring, piece));
  };
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  bool all_space = true;
  for (size_t i = start; i < text.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(text[i]))) all_space = false;
  if (!all_space) flush(text.size());
  return out;
}

}  // namespace regalia
