#include "chainlift/parser.hpp"

#include <cctype>

#include "chainlift/error.hpp"

namespace chainlift {

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, RingPtr ring)
      : text_(text), ring_(std::move(ring)) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail(ErrorKind::SyntaxError, "trailing input at position " +
           std::to_string(pos_), pos_);
    return p;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void syntax(const std::string& what) {
    fail(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_),
         pos_);
  }

  Polynomial expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial p = term();
    if (neg) p = -p;
    while (true) {
      if (eat('+'))
        p = p + term();
      else if (eat('-'))
        p = p - term();
      else
        break;
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial p = base();
    if (eat('^')) {
      unsigned long e = nat();
      if (e > 64 && p.term_count() > 1)
        fail(ErrorKind::InvalidArgument, "exponent too large");
      p = p.pow(static_cast<unsigned>(e));
    }
    return p;
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) syntax("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return var();
    syntax("expected a number, variable or '('");
  }

  unsigned long nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) syntax("expected a number");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  mpz_class integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) syntax("expected a number");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Polynomial rational() {
    mpz_class num = integer_literal();
    mpz_class den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den_pos = pos_;
      den = integer_literal();
      if (den == 0)
        fail(ErrorKind::SyntaxError, "zero denominator", den_pos);
    }
    std::uint32_t p = ring_->characteristic();
    if (p == 0) {
      mpq_class q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, Coeff::rational(q));
    }
    if (mpz_divisible_ui_p(den.get_mpz_t(), p))
      fail(ErrorKind::BadCharacteristic,
           "denominator " + den.get_str() + " vanishes mod " + std::to_string(p));
    Coeff c = Coeff::mod_p(num, p) * Coeff::mod_p(den, p).inverse();
    return Polynomial::constant(ring_, c);
  }

  Polynomial var() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto idx = ring_->var_index(name);
    if (!idx)
      fail(ErrorKind::UnknownVariable,
           "variable " + name + " not declared in the ring", start);
    return Polynomial::variable(ring_, *idx);
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) {
  return PolyParser(text, ring).run();
}

}  // namespace chainlift
