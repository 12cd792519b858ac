#include "homdom/poly_io.hpp"

#include <cctype>

namespace homdom {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  HermitianPolynomial parse_all() {
    HermitianPolynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  HermitianPolynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = text_[pos_] == '-';
      ++pos_;
    }
    HermitianPolynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      HermitianPolynomial t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  HermitianPolynomial term() {
    HermitianPolynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  HermitianPolynomial factor() {
    skip_ws();
    const char c = peek();
    HermitianPolynomial base(n_);
    if (c == '(') {
      ++pos_;
      base = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational r = rational();
      skip_ws();
      if (peek() == 'i') {
        ++pos_;
        base = HermitianPolynomial::constant(n_, GaussianRational(Rational(0), r));
      } else {
        base = HermitianPolynomial::constant(n_, GaussianRational(r));
      }
    } else if (c == 'i') {
      ++pos_;
      base = HermitianPolynomial::constant(n_, GaussianRational::i());
    } else if (c == 'z') {
      ++pos_;
      bool conj = false;
      if (peek() == 'b') {
        conj = true;
        ++pos_;
      }
      const int idx = integer();
      if (idx < 1 || static_cast<std::size_t>(idx) > n_)
        fail("variable index " + std::to_string(idx) + " outside 1.." + std::to_string(n_));
      base = conj ? HermitianPolynomial::zbar(n_, idx - 1) : HermitianPolynomial::z(n_, idx - 1);
    } else {
      fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    }
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      base = base.pow(integer());
    }
    return base;
  }

  Rational rational() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return Rational::parse(text_.substr(start, pos_ - start));
  }

  int integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial literal '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                     what);
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ';') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& s : out) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t b = 0;
    while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    s = s.substr(b);
  }
  if (out.size() == 1 && out[0].empty()) out.clear();
  return out;
}

}  // namespace

HermitianPolynomial parse_polynomial(std::string_view text, std::size_t n) { return Parser(text, n).parse_all(); }

GaussianRational parse_gaussian(std::string_view text) {
  const HermitianPolynomial p = Parser(text, 0).parse_all();
  return p.constant_term();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::string normalized(text);
  for (char& c : normalized)
    if (c == ',' || c == ';') c = ' ';
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos < normalized.size()) {
    while (pos < normalized.size() && std::isspace(static_cast<unsigned char>(normalized[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < normalized.size() && !std::isspace(static_cast<unsigned char>(normalized[pos]))) ++pos;
    if (pos > start) out.push_back(Rational::parse(std::string_view(normalized).substr(start, pos - start)));
  }
  return out;
}

std::vector<GaussianRational> parse_gaussian_list(std::string_view text) {
  std::vector<GaussianRational> out;
  for (const auto& item : split_list(text)) out.push_back(parse_gaussian(item));
  return out;
}

}  // namespace homdom
