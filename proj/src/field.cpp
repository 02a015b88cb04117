#include "valconv/field.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "valconv/errors.hpp"

namespace valconv {

namespace {

RatFunc promote(const mpq_class& q, const mpz_class& modulus) {
  return RatFunc(Poly::constant(q, modulus), Poly::constant(1, modulus));
}

template <class Op>
FieldElem combine(const FieldElem& a, const FieldElem& b, Op op) {
  if (a.is_rational() && b.is_rational())
    return FieldElem(mpq_class(op(a.rational(), b.rational())));
  if (a.is_rational())
    return FieldElem(op(promote(a.rational(), b.ratfunc().modulus()), b.ratfunc()));
  if (b.is_rational())
    return FieldElem(op(a.ratfunc(), promote(b.rational(), a.ratfunc().modulus())));
  return FieldElem(op(a.ratfunc(), b.ratfunc()));
}

}  // namespace

namespace {

std::size_t bits(const mpq_class& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

std::size_t bits(const Poly& p) {
  std::size_t n = 0;
  for (const auto& c : p.coefficients()) n += bits(c);
  return n;
}

}  // namespace

std::size_t FieldElem::size() const {
  if (is_rational()) return bits(rational());
  return bits(ratfunc().num()) + bits(ratfunc().den());
}

bool FieldElem::is_zero() const {
  return is_rational() ? rational() == 0 : ratfunc().is_zero();
}

FieldElem FieldElem::operator-() const {
  if (is_rational()) return FieldElem(mpq_class(-rational()));
  return FieldElem(-ratfunc());
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return FieldElem(mpq_class(1 / rational()));
  return FieldElem(ratfunc().inverse());
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  if (b.is_zero()) throw DivisionByZero();
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  if (a.is_rational()) return promote(a.rational(), b.ratfunc().modulus()) == b.ratfunc();
  if (b.is_rational()) return a.ratfunc() == promote(b.rational(), a.ratfunc().modulus());
  return a.ratfunc() == b.ratfunc();
}

int check_prime(const mpz_class& n) {
  if (n < 2) return 0;
  if (n < (mpz_class(1) << 32)) {
    const unsigned long v = n.get_ui();
    for (unsigned long d = 2; d * d <= v; ++d)
      if (v % d == 0) return 0;
    return 2;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) == 0 ? 0 : 1;
}

Field Field::padic(const mpz_class& p) {
  const int status = check_prime(p);
  if (status == 0) throw Error("p-adic field needs a prime, got " + p.get_str());
  return Field(FieldKind::PAdic, p, status == 2);
}

Field Field::ratfunc(const mpz_class& characteristic) {
  if (characteristic == 0) return Field(FieldKind::RatFunc, 0, true);
  const int status = check_prime(characteristic);
  if (status == 0)
    throw Error("characteristic must be 0 or prime, got " + characteristic.get_str());
  return Field(FieldKind::RatFunc, characteristic, status == 2);
}

Field Field::from_selector(std::string_view selector) {
  const auto colon = selector.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("field selector needs '<kind>:<n>'", 0);
  const std::string_view kind = selector.substr(0, colon);
  const std::string digits(selector.substr(colon + 1));
  if (digits.empty())
    throw ParseError("missing number in field selector", colon + 1);
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw ParseError("expected digit in field selector", colon + 1 + i);
  const mpz_class n(digits);
  if (kind == "padic") return padic(n);
  if (kind == "ratfunc") return ratfunc(n);
  throw ParseError("unknown field kind '" + std::string(kind) + "'", 0);
}

std::string Field::selector() const {
  return (kind_ == FieldKind::PAdic ? "padic:" : "ratfunc:") + prime_.get_str();
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }
FieldElem Field::from_int(long v) const { return from_rational(mpq_class(v)); }

FieldElem Field::from_rational(const mpq_class& q) const {
  if (kind_ == FieldKind::PAdic) return FieldElem(q);
  return FieldElem(promote(q, prime_));
}

FieldElem Field::native(const FieldElem& x) const {
  if (kind_ == FieldKind::PAdic) {
    if (!x.is_rational()) throw std::logic_error("rational function in a p-adic field");
    return x;
  }
  return x.is_rational() ? from_rational(x.rational()) : x;
}

ValExt Field::val(const FieldElem& x) const {
  if (x.is_zero()) return ValExt::infinity();
  if (kind_ == FieldKind::PAdic) {
    const mpq_class& q = x.rational();
    mpz_class rest;
    const auto num_exp = static_cast<std::int64_t>(
        mpz_remove(rest.get_mpz_t(), q.get_num_mpz_t(), prime_.get_mpz_t()));
    const auto den_exp = static_cast<std::int64_t>(
        mpz_remove(rest.get_mpz_t(), q.get_den_mpz_t(), prime_.get_mpz_t()));
    return ValExt(num_exp - den_exp);
  }
  const FieldElem n = native(x);
  const RatFunc& f = n.ratfunc();
  return ValExt(static_cast<std::int64_t>(f.num().order_at_zero()) -
                static_cast<std::int64_t>(f.den().order_at_zero()));
}

FieldElem Field::uniformizer_pow(std::int64_t k) const {
  const std::uint64_t mag = k < 0 ? 0 - static_cast<std::uint64_t>(k)
                                  : static_cast<std::uint64_t>(k);
  if (mag > std::numeric_limits<unsigned long>::max())
    throw std::overflow_error("uniformizer exponent too large");
  if (kind_ == FieldKind::PAdic) {
    mpz_class power;
    mpz_pow_ui(power.get_mpz_t(), prime_.get_mpz_t(), static_cast<unsigned long>(mag));
    return FieldElem(k >= 0 ? mpq_class(power) : mpq_class(mpz_class(1), power));
  }
  const Poly tk = Poly::monomial(1, static_cast<std::size_t>(mag), prime_);
  const Poly one = Poly::constant(1, prime_);
  return FieldElem(k >= 0 ? RatFunc(tk, one) : RatFunc(one, tk));
}

namespace {

// Recursive-descent reader for the element grammar:
//   padic   := ['-'] INT ['/' INT]
//   ratfunc := '(' poly ')' ['/' '(' poly ')'] | poly
//   poly    := ['+'|'-'] term (('+'|'-') term)*
//   term    := coef ['*' mono] | mono
//   mono    := 't' ['^' INT]
//   coef    := INT ['/' INT]
class ElementReader {
 public:
  ElementReader(std::string_view text, const mpz_class& modulus)
      : text_(text), mod_(modulus) {}

  mpq_class read_rational() {
    const bool negative = accept('-');
    mpq_class q = read_fraction();
    if (negative) q = -q;
    finish();
    return q;
  }

  RatFunc read_ratfunc() {
    skip_space();
    RatFunc out;
    if (peek() == '(') {
      Poly num = read_group();
      skip_space();
      if (accept('/')) {
        skip_space();
        if (peek() != '(') fail("expected '(' before denominator");
        const std::size_t at = pos_;
        Poly den = read_group();
        if (den.is_zero()) throw ParseError("zero denominator", at);
        out = RatFunc(std::move(num), std::move(den));
      } else {
        out = RatFunc(std::move(num), Poly::constant(1, mod_));
      }
    } else {
      out = RatFunc(read_poly(), Poly::constant(1, mod_));
    }
    finish();
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void skip_space() {
    while (std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }
  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
  }

  mpz_class read_int() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  mpq_class read_fraction() {
    mpz_class num = read_int();
    if (!accept('/')) return mpq_class(num);
    const std::size_t at = pos_;
    mpz_class den = read_int();
    if (den == 0) throw ParseError("zero denominator", at);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  Poly read_group() {
    accept('(');
    Poly p = read_poly();
    skip_space();
    if (!accept(')')) fail("expected ')'");
    return p;
  }

  Poly read_poly() {
    skip_space();
    Poly sum(mod_);
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    while (true) {
      Poly term = read_term();
      sum = negative ? sum - term : sum + term;
      skip_space();
      if (accept('+')) negative = false;
      else if (accept('-')) negative = true;
      else break;
      skip_space();
    }
    return sum;
  }

  Poly read_term() {
    skip_space();
    if (peek() == 't') return read_mono(1);
    const mpq_class c = read_fraction();
    skip_space();
    if (accept('*')) {
      skip_space();
      if (peek() != 't') fail("expected 't'");
      return read_mono(c);
    }
    return Poly::constant(c, mod_);
  }

  Poly read_mono(const mpq_class& c) {
    accept('t');
    std::size_t degree = 1;
    if (accept('^')) {
      const std::size_t at = pos_;
      const mpz_class k = read_int();
      if (!k.fits_ulong_p() || k > 1 << 20) throw ParseError("exponent too large", at);
      degree = k.get_ui();
    }
    return Poly::monomial(c, degree, mod_);
  }

  std::string_view text_;
  mpz_class mod_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElem Field::parse(std::string_view text) const {
  ElementReader reader(text, kind_ == FieldKind::PAdic ? mpz_class(0) : prime_);
  if (kind_ == FieldKind::PAdic) return FieldElem(reader.read_rational());
  return FieldElem(reader.read_ratfunc());
}

std::string Field::render(const FieldElem& x) const {
  const FieldElem n = native(x);
  if (kind_ == FieldKind::PAdic) return n.rational().get_str();
  return n.ratfunc().render();
}

}  // namespace valconv
