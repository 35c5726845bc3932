#include <cctype>

#include "minkring/cli.hpp"
#include "minkring/errors.hpp"

namespace minkring::cli {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::optional<Alphabet>& alphabet) : s_(text), alphabet_(alphabet) {}

  LaurentPoly parse() {
    skip();
    if (at_end()) fail("empty polynomial");
    LaurentPoly f = sum();
    skip();
    if (!at_end()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t pos) const { throw ParseError(what, pos); }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool starts_factor() {
    skip();
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(';
  }

  LaurentPoly sum() {
    skip();
    LaurentPoly out;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    out = term();
    if (negative) out = -out;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      LaurentPoly t = term();
      if (c == '+') {
        out += t;
      } else {
        out -= t;
      }
    }
    return out;
  }

  LaurentPoly term() {
    if (!starts_factor()) fail("expected a factor");
    LaurentPoly out = factor();
    for (;;) {
      skip();
      if (peek() == '*') {
        ++pos_;
        if (!starts_factor()) fail("expected a factor after '*'");
      } else if (!starts_factor()) {
        break;
      }
      out *= factor();
    }
    return out;
  }

  LaurentPoly factor() {
    skip();
    std::size_t start = pos_;
    LaurentPoly base;
    bool is_name = false;
    std::string name;
    char c = peek();
    if (c == '(') {
      ++pos_;
      base = sum();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      base = LaurentPoly(rational_literal());
    } else {
      name = identifier();
      if (alphabet_ && !alphabet_->count(name)) fail_at("unknown generator '" + name + "'", start);
      base = LaurentPoly::var(name);
      is_name = true;
    }
    skip();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    std::size_t exp_pos = pos_;
    int e = signed_integer();
    if (e < 0 && is_name && alphabet_ && !alphabet_->find(name)->second) {
      fail_at("negative exponent on polynomial generator '" + name + "'", exp_pos);
    }
    if (e < 0 && !is_name) {
      if (base.size() != 1) fail_at("negative power of a sum", exp_pos);
      if (alphabet_) {
        for (const auto& v : base.variables()) {
          if (!alphabet_->find(v)->second) fail_at("negative exponent on polynomial generator '" + v + "'", exp_pos);
        }
      }
    }
    return base.pow(e);
  }

  Rational rational_literal() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const Error&) {
      fail_at("invalid rational literal", start);
    }
  }

  std::string identifier() {
    std::size_t start = pos_;
    char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) fail("expected a name");
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  int signed_integer() {
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("malformed exponent");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 10000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<int>(negative ? -v : v);
  }

  std::string_view s_;
  const std::optional<Alphabet>& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Alphabet alphabet_of(const Presentation& p) {
  Alphabet a;
  for (const auto& g : p.generators()) a[g.name] = g.polarity == Polarity::Invertible;
  return a;
}

LaurentPoly parse_poly(std::string_view text, const std::optional<Alphabet>& alphabet) {
  return Parser(text, alphabet).parse();
}

}  // namespace minkring::cli
