#include <doctest.h>

#include "support.hpp"
#include "valconv/errors.hpp"
#include "valconv/random.hpp"

using namespace valconv;
using test::el;

namespace {

// Exponent of p in a nonzero rational, by repeated division.
long padic_oracle(const mpq_class& q, long p) {
  long e = 0;
  mpz_class n = q.get_num(), d = q.get_den();
  while (n % p == 0) { n /= p; ++e; }
  while (d % p == 0) { d /= p; --e; }
  return e;
}

}  // namespace

TEST_CASE("ValExt ordering and addition") {
  const ValExt inf = ValExt::infinity();
  CHECK(ValExt(5) < inf);
  CHECK(ValExt(-1000000) < ValExt(3));
  CHECK((inf + ValExt(7)).is_infinite());
  CHECK((ValExt(2) + ValExt(-5)) == ValExt(-3));
  CHECK((ValExt(1) + (ValExt(2) + inf)) == ((ValExt(1) + ValExt(2)) + inf));
  CHECK(inf.to_string() == "inf");
  CHECK_THROWS(inf.value());
}

TEST_CASE("p-adic valuation") {
  const Field k5 = Field::padic(5), k2 = Field::padic(2);
  CHECK(k5.val(el(k5, "50/3")) == ValExt(padic_oracle(mpq_class(50, 3), 5)));
  CHECK(k5.val(el(k5, "50/3")) == ValExt(2));
  CHECK(k2.val(k2.zero()).is_infinite());
  CHECK(k2.val(el(k2, "-3/40")) == ValExt(-3));
}

TEST_CASE("t-adic valuation") {
  const Field k = Field::ratfunc(0);
  CHECK(k.val(el(k, "(t^3)/(t-1)")) == ValExt(3));
  CHECK(k.val(el(k, "(1)/(t^2+t)")) == ValExt(-1));
  CHECK(k.val(el(k, "5")) == ValExt(0));
  const Field k7 = Field::ratfunc(7);
  CHECK(k7.val(el(k7, "(t^2+7*t)/(t-1)")) == ValExt(2));  // 7t vanishes mod 7
}

TEST_CASE("arithmetic") {
  const Field k5 = Field::padic(5);
  CHECK(el(k5, "1/2") + el(k5, "1/3") == el(k5, "5/6"));
  const Field q = Field::ratfunc(0);
  CHECK(el(q, "t") * el(q, "t").inverse() == q.one());
  CHECK(el(q, "(t^2-1)/(t-1)") == el(q, "t+1"));
  CHECK(el(q, "(1)/(2)") * el(q, "2*t") == el(q, "t"));
  const Field k3 = Field::padic(3);
  CHECK_THROWS_AS(k3.zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(k3.one() / k3.zero(), DivisionByZero);
  CHECK_THROWS_AS(q.zero().inverse(), DivisionByZero);
  const Field f3 = Field::ratfunc(3);
  CHECK(el(f3, "t+2") + el(f3, "2*t+1") == f3.zero());
  CHECK(el(f3, "2") * el(f3, "2") == f3.one());
}

TEST_CASE("integrality") {
  const Field k5 = Field::padic(5), k2 = Field::padic(2);
  CHECK(k5.is_integral(el(k5, "1/3")));
  CHECK_FALSE(k2.is_integral(el(k2, "1/2")));
  CHECK(k2.is_integral(k2.zero()));
  const Field q = Field::ratfunc(0);
  CHECK(q.is_integral(q.zero()));
  CHECK_FALSE(q.is_integral(el(q, "(1)/(t)")));
}

TEST_CASE("uniformizer powers") {
  const Field k5 = Field::padic(5);
  CHECK(k5.uniformizer_pow(2) == k5.from_int(25));
  CHECK(k5.uniformizer_pow(-1) == el(k5, "1/5"));
  const Field k7 = Field::ratfunc(7);
  CHECK(k7.uniformizer_pow(3) == el(k7, "t^3"));
  for (int e = -4; e <= 4; ++e) CHECK(k7.val(k7.uniformizer_pow(e)) == ValExt(e));
}

TEST_CASE("parse and render") {
  const Field k5 = Field::padic(5);
  CHECK(el(k5, "50/3") == k5.from_rational(mpq_class(50, 3)));
  CHECK(el(k5, "10/4") == k5.from_rational(mpq_class(5, 2)));
  CHECK(k5.render(el(k5, "-10/4")) == "-5/2");
  const Field q = Field::ratfunc(0);
  const FieldElem f = el(q, "(t^2-1)/(t)");
  CHECK(q.render(f) == "(t^2-1)/(t)");
  CHECK(q.parse(q.render(f)) == f);
  CHECK(q.render(el(q, "(2*t^2-2)/(2*t-2)")) == "t+1");
  CHECK(q.render(el(q, "(1)/(2*t)")) == "(1/2)/(t)");

  CHECK_THROWS_AS(k5.parse("1//2"), ParseError);
  try {
    k5.parse("1//2");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(k5.parse("1/0"), Error);
  CHECK_THROWS_AS(k5.parse(""), ParseError);
  CHECK_THROWS_AS(k5.parse("t"), ParseError);
  CHECK_THROWS_AS(q.parse("(t+1"), ParseError);
  CHECK_THROWS_AS(q.parse("(t)/(0)"), Error);
}

TEST_CASE("field selectors") {
  CHECK(Field::from_selector("padic:5") == Field::padic(5));
  CHECK(Field::from_selector("ratfunc:0") == Field::ratfunc(0));
  CHECK(Field::from_selector("ratfunc:7").selector() == "ratfunc:7");
  CHECK_THROWS_AS(Field::from_selector("padic:6"), Error);
  CHECK_THROWS_AS(Field::from_selector("padic:1"), Error);
  CHECK_THROWS_AS(Field::from_selector("ratfunc:4"), Error);
  CHECK_THROWS_AS(Field::from_selector("ring:2"), Error);
  CHECK(Field::padic(1000003).primality_proven());
  // 2^61 - 1 is prime but above the trial-division bound.
  const Field big = Field::padic(mpz_class("2305843009213693951"));
  CHECK_FALSE(big.primality_proven());
  CHECK(check_prime(mpz_class("2305843009213693951")) == 1);
  CHECK(check_prime(mpz_class("2305843009213693953")) == 0);
}

TEST_CASE("valuation laws on random elements") {
  for (const char* sel : {"padic:2", "padic:5", "ratfunc:0", "ratfunc:3"}) {
    const Field k = Field::from_selector(sel);
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
      const FieldElem x = random_element(k, rng), y = random_element(k, rng);
      CHECK(k.val(x * y) == k.val(x) + k.val(y));
      const ValExt vs = k.val(x + y), lo = std::min(k.val(x), k.val(y));
      CHECK(vs >= lo);
      if (k.val(x) != k.val(y)) CHECK(vs == lo);
      CHECK(k.val(x).is_infinite() == x.is_zero());
    }
  }
}

TEST_CASE("render round trip on random elements") {
  for (const char* sel : {"padic:2", "padic:5", "ratfunc:0", "ratfunc:3"}) {
    const Field k = Field::from_selector(sel);
    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
      const FieldElem x = random_element(k, rng);
      const std::string s = k.render(x);
      const FieldElem y = k.parse(s);
      CHECK(y == x);
      CHECK(k.render(y) == s);  // canonical form is idempotent
    }
  }
}

TEST_CASE("residue-field counterexample predicate over padic:2") {
  // X = {a in O^3 : some coordinate lies in the maximal ideal}.
  const Field k = Field::padic(2);
  auto in_x = [&](const Vec& a) {
    bool integral = true, some_in_m = false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      integral = integral && k.is_integral(a[i]);
      some_in_m = some_in_m || k.val(a[i]) > ValExt(0);
    }
    return integral && some_in_m;
  };
  const Vec p0 = test::ints(k, {0, 0, 0}), p1 = test::ints(k, {1, 0, 0}),
            p2 = test::ints(k, {0, 1, 1});
  CHECK(in_x(p0));
  CHECK(in_x(p1));
  CHECK(in_x(p2));
  const FieldElem m1 = k.from_int(-1);
  CHECK(k.is_integral(m1));
  CHECK(m1 + k.one() + k.one() == k.one());
  const Vec out = m1 * p0 + p1 + p2;
  CHECK(out == test::ints(k, {1, 1, 1}));
  CHECK_FALSE(in_x(out));
}
