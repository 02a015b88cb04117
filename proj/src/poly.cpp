#include "valconv/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "valconv/errors.hpp"

namespace valconv {

mpq_class Poly::reduce(const mpq_class& c) const {
  if (mod_ == 0) return c;
  mpz_class den = c.get_den() % mod_;
  if (den == 0) throw DivisionByZero();
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod_.get_mpz_t());
  mpz_class out = (c.get_num() * inv) % mod_;
  if (out < 0) out += mod_;
  return mpq_class(out);
}

mpq_class Poly::coeff_inverse(const mpq_class& c) const {
  if (c == 0) throw DivisionByZero();
  if (mod_ == 0) return 1 / c;
  return reduce(mpq_class(mpz_class(1), c.get_num()));
}

Poly Poly::constant(const mpq_class& c, const mpz_class& modulus) {
  return monomial(c, 0, modulus);
}

Poly Poly::monomial(const mpq_class& c, std::size_t degree,
                    const mpz_class& modulus) {
  Poly p(modulus);
  mpq_class r = p.reduce(c);
  if (r == 0) return p;
  p.c_.assign(degree + 1, mpq_class(0));
  p.c_[degree] = r;
  return p;
}

mpq_class Poly::coeff(std::size_t k) const {
  return k < c_.size() ? c_[k] : mpq_class(0);
}

std::size_t Poly::order_at_zero() const {
  if (c_.empty()) throw std::logic_error("order_at_zero of zero polynomial");
  std::size_t k = 0;
  while (c_[k] == 0) ++k;
  return k;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_compatible(const Poly& other) const {
  if (mod_ != other.mod_)
    throw std::logic_error("polynomials over different coefficient fields");
}

Poly Poly::operator-() const {
  Poly out(mod_);
  out.c_.reserve(c_.size());
  for (const auto& c : c_) out.c_.push_back(reduce(-c));
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly out(a.mod_);
  out.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.c_.size(); ++i)
    out.c_[i] = a.reduce(a.coeff(i) + b.coeff(i));
  out.trim();
  return out;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly out(a.mod_);
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  for (auto& c : out.c_) c = out.reduce(c);
  out.trim();
  return out;
}

Poly Poly::scaled(const mpq_class& s) const {
  Poly out(mod_);
  mpq_class r = reduce(s);
  if (r == 0) return out;
  out.c_.reserve(c_.size());
  for (const auto& c : c_) out.c_.push_back(reduce(c * r));
  out.trim();
  return out;
}

Poly Poly::shifted(std::size_t k) const {
  Poly out = *this;
  if (!out.c_.empty()) out.c_.insert(out.c_.begin(), k, mpq_class(0));
  return out;
}

Poly Poly::unshifted(std::size_t k) const {
  Poly out = *this;
  if (out.c_.empty()) return out;
  if (k > order_at_zero()) throw std::logic_error("unshift past the zero order");
  out.c_.erase(out.c_.begin(), out.c_.begin() + static_cast<long>(k));
  return out;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  a.check_compatible(b);
  if (b.is_zero()) throw DivisionByZero();
  quot = Poly(a.mod_);
  rem = a;
  if (a.degree() < b.degree()) return;
  quot.c_.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1),
                 mpq_class(0));
  const mpq_class lead_inv = b.coeff_inverse(b.leading());
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(rem.degree() - b.degree());
    const mpq_class factor = a.reduce(rem.leading() * lead_inv);
    quot.c_[shift] = factor;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      rem.c_[shift + j] = a.reduce(rem.c_[shift + j] - factor * b.c_[j]);
    rem.trim();
  }
  quot.trim();
}

namespace {

using ZPoly = std::vector<mpz_class>;

// Primitive integer polynomial proportional to a nonzero polynomial over Q.
ZPoly primitive_part(const std::vector<mpq_class>& c) {
  mpz_class den = 1;
  for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  ZPoly out;
  out.reserve(c.size());
  mpz_class content = 0;
  for (const auto& x : c) {
    out.push_back(x.get_num() * (den / x.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  return out;
}

void make_primitive(ZPoly& p) {
  mpz_class content = 0;
  for (const auto& x : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (content > 1)
    for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
}

// Pseudo-remainder of a by b: lc(b)^k * a mod b, trailing zeros trimmed.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

Poly Poly::gcd(Poly a, Poly b) {
  a.check_compatible(b);
  // Monomial fast path: gcd(c*t^k, b) = t^min(k, ord b).
  for (int pass = 0; pass < 2; ++pass, std::swap(a, b)) {
    if (a.is_zero() || b.is_zero() || a.order_at_zero() != static_cast<std::size_t>(a.degree()))
      continue;
    const std::size_t k = std::min(a.order_at_zero(), b.order_at_zero());
    return monomial(1, k, a.mod_);
  }
  if (a.mod_ == 0 && !a.is_zero() && !b.is_zero()) {
    // Euclid over Q grows coefficients quickly; the primitive remainder
    // sequence over Z keeps them bounded by the gcd's own size.
    ZPoly x = primitive_part(a.c_), y = primitive_part(b.c_);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
      ZPoly r = pseudo_remainder(std::move(x), y);
      make_primitive(r);
      x = std::move(y);
      y = std::move(r);
    }
    Poly g(a.mod_);
    g.c_.assign(x.begin(), x.end());
    return g.monic();
  }
  while (!b.is_zero()) {
    Poly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(coeff_inverse(leading()));
}

std::string Poly::render() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? '-' : '+';
    }
    const mpq_class mag = negative ? mpq_class(-c) : c;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += 't';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

RatFunc::RatFunc(const mpz_class& modulus)
    : num_(modulus), den_(Poly::constant(1, modulus)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1, num_.modulus());
    return;
  }
  const Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num_, g, q, r);
    num_ = std::move(q);
    Poly::divmod(den_, g, q, r);
    den_ = std::move(q);
  }
  normalize_leading();
}

void RatFunc::normalize_leading() {
  if (den_.leading() == 1) return;
  const mpq_class lead_inv = den_.coeff_inverse(den_.leading());
  num_ = num_.scaled(lead_inv);
  den_ = den_.scaled(lead_inv);
}

RatFunc RatFunc::coprime(Poly num, Poly den) {
  RatFunc out(num.modulus());
  if (num.is_zero()) return out;
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  out.normalize_leading();
  return out;
}

namespace {

Poly exact_quotient(const Poly& a, const Poly& b) {
  if (b.degree() == 0) return a.scaled(b.coeff_inverse(b.leading()));
  Poly q, r;
  Poly::divmod(a, b, q, r);
  return q;
}

}  // namespace

RatFunc RatFunc::operator-() const {
  RatFunc out(modulus());
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

// Both operands are reduced, so only gcds between factors of different
// operands can be nontrivial; that keeps the gcd inputs small.
RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Poly g = Poly::gcd(a.den_, b.den_);
  if (g.degree() == 0)
    return RatFunc::coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  const Poly ab = exact_quotient(a.den_, g), bb = exact_quotient(b.den_, g);
  const Poly num = a.num_ * bb + b.num_ * ab;
  if (num.is_zero()) return RatFunc(a.modulus());
  const Poly h = Poly::gcd(num, g);
  return RatFunc::coprime(exact_quotient(num, h), ab * exact_quotient(b.den_, h));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.modulus());
  const Poly g1 = Poly::gcd(a.num_, b.den_), g2 = Poly::gcd(b.num_, a.den_);
  return RatFunc::coprime(exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2),
                          exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return coprime(den_, num_);
}

std::string RatFunc::render() const {
  if (den_.degree() == 0) return num_.render();
  return "(" + num_.render() + ")/(" + den_.render() + ")";
}

}  // namespace valconv
