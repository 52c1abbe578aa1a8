#include "frobkit/parse.hpp"

#include <cctype>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, std::string_view text, const std::string& gen)
      : ring_(ring), text_(text), gen_(gen) {}

  Polynomial expression() {
    skip();
    Polynomial acc(ring_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = get() == '-';
    }
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      skip();
      const char c = peek();
      if (c != '+' && c != '-') break;
      get();
      Polynomial next = term();
      acc = c == '+' ? acc + next : acc - next;
    }
    return acc;
  }

  void expect_end() {
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      std::uint64_t e = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        e = e * 10 + static_cast<std::uint64_t>(get() - '0');
        if (e > (1u << 20)) fail("exponent too large");
      }
      base = base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    skip();
    const char c = peek();
    const Field& k = ring_->field();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        v = (v * 10 + (get() - '0')) % static_cast<std::int64_t>(k.characteristic());
      }
      return Polynomial::constant(ring_, k.from_int(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (auto idx = ring_->var_index(name)) return Polynomial::variable(ring_, *idx);
      if (name == gen_ && !k.is_prime_field()) return Polynomial::constant(ring_, k.generator());
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    if (c == '(') {
      get();
      Polynomial inner = expression();
      expect(')');
      return inner;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }

  RingPtr ring_;
  std::string_view text_;
  const std::string& gen_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text, const std::string& gen) {
  Parser p(ring, text, gen);
  Polynomial f = p.expression();
  p.expect_end();
  return f;
}

FreeVector parse_vector(const RingPtr& ring, std::size_t rank, std::string_view text, const std::string& gen) {
  Parser p(ring, text, gen);
  if (!p.accept('[')) {
    if (rank != 1) p.fail("expected '[' for a vector of rank " + std::to_string(rank));
    Polynomial f = p.expression();
    p.expect_end();
    return FreeVector({f});
  }
  std::vector<Polynomial> comps;
  comps.push_back(p.expression());
  while (p.accept(',')) comps.push_back(p.expression());
  p.expect(']');
  p.expect_end();
  if (comps.size() != rank) {
    throw RankMismatch("vector has " + std::to_string(comps.size()) + " components, expected " + std::to_string(rank));
  }
  return FreeVector(std::move(comps));
}

}  // namespace frobkit
