#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace valconv {

// Univariate polynomial in t over Q (modulus 0) or over F_q (modulus q prime).
// Over F_q every coefficient is an integer representative in [0, q).
// Coefficients are stored low degree first with no trailing zeros.
class Poly {
 public:
  explicit Poly(mpz_class modulus = 0) : mod_(std::move(modulus)) {}

  static Poly constant(const mpq_class& c, const mpz_class& modulus);
  static Poly monomial(const mpq_class& c, std::size_t degree,
                       const mpz_class& modulus);

  const mpz_class& modulus() const { return mod_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<mpq_class>& coefficients() const { return c_; }
  mpq_class coeff(std::size_t k) const;
  const mpq_class& leading() const { return c_.back(); }
  // Multiplicity of the root t = 0. Precondition: nonzero.
  std::size_t order_at_zero() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const mpq_class& s) const;
  Poly shifted(std::size_t k) const;  // multiply by t^k
  // Exact division by t^k. Precondition: k <= order_at_zero().
  Poly unshifted(std::size_t k) const;

  // a = q*b + r with deg r < deg b. Throws DivisionByZero if b == 0.
  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
  // Monic gcd (zero iff both inputs are zero).
  static Poly gcd(Poly a, Poly b);

  Poly monic() const;

  // Coefficient-field helpers shared with the parser.
  mpq_class reduce(const mpq_class& c) const;
  mpq_class coeff_inverse(const mpq_class& c) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.mod_ == b.mod_ && a.c_ == b.c_;
  }

  std::string render() const;

 private:
  void trim();
  void check_compatible(const Poly& other) const;

  std::vector<mpq_class> c_;
  mpz_class mod_;
};

// Reduced fraction num/den of polynomials with monic denominator.
class RatFunc {
 public:
  explicit RatFunc(const mpz_class& modulus = 0);
  RatFunc(Poly num, Poly den);  // canonicalizes; throws DivisionByZero

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const mpz_class& modulus() const { return num_.modulus(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc inverse() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string render() const;

 private:
  void canonicalize();
  void normalize_leading();
  // Skips the gcd: callers guarantee num and den are coprime.
  static RatFunc coprime(Poly num, Poly den);

  Poly num_;
  Poly den_;
};

}  // namespace valconv
