#include "germcalc/parser.hpp"

#include <cctype>
#include <string>

#include "germcalc/errors.hpp"

namespace germcalc {

namespace {

constexpr std::uint32_t kMaxExponent = 100000;

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parseAll() {
    Polynomial p = expr();
    skipSpace();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

  std::vector<Polynomial> parseList() {
    std::vector<Polynomial> out;
    skipSpace();
    if (pos_ == text_.size()) return out;
    while (true) {
      out.push_back(expr());
      skipSpace();
      if (pos_ == text_.size()) break;
      if (text_[pos_] != ',') fail(std::string("expected ',' but found '") + text_[pos_] + "'");
      ++pos_;
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skipSpace();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
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
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skipSpace();
      const std::size_t start = pos_;
      mpz_class e = digits("exponent");
      if (e > kMaxExponent) {
        pos_ = start;
        fail("exponent too large");
      }
      b = b.pow(static_cast<std::uint32_t>(e.get_ui()));
    }
    return b;
  }

  mpz_class digits(const char* what) {
    skipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial base() {
    skipSpace();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      mpz_class num = digits("integer");
      mpz_class den = 1;
      if (accept('/')) den = digits("denominator");
      try {
        return Polynomial::constant(ring_, Scalar(ring_->field(), num, den));
      } catch (const std::domain_error&) {
        pos_ = start;
        fail("coefficient not representable in " + ring_->field().toString());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      const int idx = ring_->indexOf(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parseAll(); }

std::vector<Polynomial> parsePolynomialList(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parseList();
}

}  // namespace germcalc
