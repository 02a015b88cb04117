#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "valconv/poly.hpp"
#include "valconv/valext.hpp"

namespace valconv {

// An exact element of Q or of a rational function field k(t).
//
// Default construction and integer construction produce a plain rational,
// which is promoted to a constant rational function the first time it meets
// one. Elements obtained from a Field are always in that field's native form.
class FieldElem {
 public:
  FieldElem() : rep_(mpq_class(0)) {}
  FieldElem(long v) : rep_(mpq_class(v)) {}  // NOLINT
  explicit FieldElem(mpq_class q) : rep_(std::move(q)) { as_q().canonicalize(); }
  explicit FieldElem(RatFunc f) : rep_(std::move(f)) {}

  bool is_zero() const;
  // Rough storage cost in bits, used to pick cheap elimination pivots.
  std::size_t size() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }
  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
  const RatFunc& ratfunc() const { return std::get<RatFunc>(rep_); }

  FieldElem operator-() const;
  FieldElem inverse() const;  // throws DivisionByZero
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }
  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

 private:
  mpq_class& as_q() { return std::get<mpq_class>(rep_); }

  std::variant<mpq_class, RatFunc> rep_;
};

enum class FieldKind { PAdic, RatFunc };

// A valued field with value group Z:
//   PAdic(p)    Q with the p-adic valuation, uniformizer p;
//   RatFunc(q)  Q(t) (q = 0) or F_q(t) with the t-adic valuation, uniformizer t.
//
// Primes below 2^32 are proven by trial division. Larger ones are accepted if
// GMP's Baillie-PSW plus Miller-Rabin test (40 rounds) says "probably prime";
// primality_proven() then reports false so callers can warn.
class Field {
 public:
  static Field padic(const mpz_class& p);
  static Field ratfunc(const mpz_class& characteristic);
  // "padic:<p>" or "ratfunc:<char>". Throws ParseError.
  static Field from_selector(std::string_view selector);

  FieldKind kind() const { return kind_; }
  // p for PAdic, the characteristic for RatFunc.
  const mpz_class& prime() const { return prime_; }
  bool primality_proven() const { return proven_; }
  std::string selector() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long v) const;
  FieldElem from_rational(const mpq_class& q) const;
  // Brings a default-constructed or integer-literal element into native form.
  FieldElem native(const FieldElem& x) const;

  ValExt val(const FieldElem& x) const;
  bool is_integral(const FieldElem& x) const { return val(x) >= ValExt(0); }
  FieldElem uniformizer_pow(std::int64_t k) const;

  FieldElem parse(std::string_view text) const;
  std::string render(const FieldElem& x) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.prime_ == b.prime_;
  }

 private:
  Field(FieldKind kind, mpz_class prime, bool proven)
      : kind_(kind), prime_(std::move(prime)), proven_(proven) {}

  FieldKind kind_;
  mpz_class prime_;
  bool proven_;
};

// Returns 2 if n is proven prime, 1 if probably prime, 0 if composite.
int check_prime(const mpz_class& n);

}  // namespace valconv
