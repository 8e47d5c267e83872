#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fixedfield/polynomial.hpp"

using namespace fixedfield;

namespace {

Polynomial from_ints(const FieldPtr& f, std::vector<std::uint64_t> c) {
  return Polynomial(f, std::move(c));
}

Polynomial random_poly(const FieldPtr& f, std::mt19937_64& rng, int max_deg,
                       bool nonzero = false) {
  std::vector<std::uint64_t> c(rng() % (max_deg + 1) + 1);
  for (auto& v : c) v = rng() % f->q();
  Polynomial p(f, std::move(c));
  if (nonzero && p.is_zero()) return Polynomial::one(f);
  return p;
}

}  // namespace

TEST_CASE("canonical form trims trailing zeros and flags the zero polynomial") {
  const FieldPtr f3 = Field::make(3, 1);
  const Polynomial p = from_ints(f3, {1, 2, 0, 0});
  CHECK(p.degree() == 1);
  const Polynomial z = from_ints(f3, {0, 0});
  CHECK(z.is_zero());
  CHECK(z.degree() == kZeroPolyDegree);
  CHECK(z.degree() == -1);
  CHECK_THROWS_AS(from_ints(f3, {3}), std::invalid_argument);
}

TEST_CASE("ring arithmetic matches hand expansion") {
  const FieldPtr f2 = Field::make(2, 1);
  // x * (x+1) = x^2 + x
  CHECK(Polynomial::x(f2) * from_ints(f2, {1, 1}) == from_ints(f2, {0, 1, 1}));
  const FieldPtr f3 = Field::make(3, 1);
  // (x-1)^2 = (x+2)^2 = x^2 + x + 1 over F_3
  CHECK(from_ints(f3, {2, 1}) * from_ints(f3, {2, 1}) == from_ints(f3, {1, 1, 1}));
  const Polynomial a = from_ints(f3, {1, 0, 2});
  CHECK(a + Polynomial::zero(f3) == a);
  CHECK(a - a == Polynomial::zero(f3));
}

TEST_CASE("powers by repeated squaring") {
  const FieldPtr f2 = Field::make(2, 1);
  CHECK(from_ints(f2, {0, 1, 1}).pow(2) == from_ints(f2, {0, 0, 1, 0, 1}));
  const FieldPtr f3 = Field::make(3, 1);
  // (x^3 + 2x)^2 = x^6 + x^4 + x^2
  CHECK(from_ints(f3, {0, 2, 0, 1}).pow(2) ==
        from_ints(f3, {0, 0, 1, 0, 1, 0, 1}));
  const Polynomial a = from_ints(f3, {1, 2});
  CHECK(a.pow(1) == a);
  CHECK(a.pow(0) == Polynomial::one(f3));
  CHECK(Polynomial::zero(f3).pow(0) == Polynomial::one(f3));
}

TEST_CASE("division with remainder") {
  const FieldPtr f2 = Field::make(2, 1);
  auto [q1, r1] = from_ints(f2, {0, 1, 1}).divrem(Polynomial::x(f2));
  CHECK(q1 == from_ints(f2, {1, 1}));
  CHECK(r1.is_zero());

  const FieldPtr f3 = Field::make(3, 1);
  auto [q2, r2] = from_ints(f3, {1, 0, 1}).divrem(from_ints(f3, {1, 1}));
  CHECK(q2 == from_ints(f3, {2, 1}));
  CHECK(r2 == from_ints(f3, {2}));

  const Polynomial a = from_ints(f3, {2, 0, 1, 1});
  auto [q3, r3] = a.divrem(Polynomial::one(f3));
  CHECK(q3 == a);
  CHECK(r3.is_zero());

  CHECK_THROWS_AS(a.divrem(Polynomial::zero(f3)), std::domain_error);
  CHECK_THROWS_AS(a.exact_div(from_ints(f3, {1, 1, 1})), std::domain_error);
}

TEST_CASE("divrem round-trips on random inputs") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{3, 1}, {2, 2}}) {
    const FieldPtr f = Field::make(p, n);
    std::mt19937_64 rng(99 + p);
    for (int i = 0; i < 100; ++i) {
      const Polynomial a = random_poly(f, rng, 8);
      const Polynomial b = random_poly(f, rng, 5, /*nonzero=*/true);
      auto [q, r] = a.divrem(b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("gcd is monic and matches known factorizations") {
  const FieldPtr f2 = Field::make(2, 1);
  CHECK(gcd(from_ints(f2, {0, 1, 1}), from_ints(f2, {0, 0, 1})) == Polynomial::x(f2));
  const Polynomial num = from_ints(f2, {1, 1, 0, 1, 0, 1, 1});
  const Polynomial den = from_ints(f2, {0, 0, 1, 0, 1});
  CHECK(gcd(num, den) == Polynomial::one(f2));

  const FieldPtr f3 = Field::make(3, 1);
  const Polynomial a = from_ints(f3, {2, 0, 1});
  CHECK(gcd(a, Polynomial::zero(f3)) == a.monic());
  CHECK(gcd(from_ints(f3, {0, 2}), Polynomial::zero(f3)) == Polynomial::x(f3));
  CHECK_THROWS_AS(gcd(Polynomial::zero(f3), Polynomial::zero(f3)), std::domain_error);
}

TEST_CASE("gcd scales multiplicatively on random inputs") {
  const FieldPtr f3 = Field::make(3, 1);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    const Polynomial a = random_poly(f3, rng, 5, true);
    const Polynomial b = random_poly(f3, rng, 5, true);
    const Polynomial c = random_poly(f3, rng, 4, true);
    CHECK(gcd(a * c, b * c) == c.monic() * gcd(a, b));
  }
}

TEST_CASE("evaluation uses Horner and finds the roots of x^q - x") {
  const FieldPtr f2 = Field::make(2, 1);
  CHECK(from_ints(f2, {0, 1, 1}).eval(f2->one()) == f2->zero());
  const FieldPtr f3 = Field::make(3, 1);
  CHECK(from_ints(f3, {0, 2, 0, 1}).eval(f3->element_from_value(2)) == f3->zero());
  CHECK(from_ints(f3, {2}).eval(f3->one()) == f3->element_from_value(2));

  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2},
                      {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const FieldPtr f = Field::make(p, n);
    const Polynomial v = x_pow_q_minus_x(f);
    for (const FieldElement& alpha : f->elements()) {
      CHECK(v.eval(alpha) == f->zero());
    }
  }
}

TEST_CASE("the product of (x - alpha) over the field is x^q - x") {
  const FieldPtr f2 = Field::make(2, 1);
  CHECK(vanishing_polynomial(f2) == from_ints(f2, {0, 1, 1}));
  const FieldPtr f3 = Field::make(3, 1);
  CHECK(vanishing_polynomial(f3) == from_ints(f3, {0, 2, 0, 1}));
  const FieldPtr f4 = Field::make(2, 2);
  CHECK(vanishing_polynomial(f4) == from_ints(f4, {0, 1, 0, 0, 1}));

  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2},
                      {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}}) {
    const FieldPtr f = Field::make(p, n);
    CHECK(vanishing_polynomial(f) == x_pow_q_minus_x(f));
  }
}

TEST_CASE("freshman's dream lifts to the polynomial ring") {
  for (std::uint64_t p : {2, 3, 5}) {
    const FieldPtr f = Field::make(p, 1);
    std::mt19937_64 rng(p * 31);
    for (int i = 0; i < 40; ++i) {
      const Polynomial a = random_poly(f, rng, 5);
      const Polynomial b = random_poly(f, rng, 5);
      CHECK((a + b).pow(p) == a.pow(p) + b.pow(p));
    }
  }
}

TEST_CASE("monic normalization") {
  const FieldPtr f3 = Field::make(3, 1);
  CHECK(from_ints(f3, {1, 2}).monic() == from_ints(f3, {2, 1}));
  CHECK_THROWS_AS(Polynomial::zero(f3).monic(), std::domain_error);
}

TEST_CASE("rendering matches the descending-power style") {
  const FieldPtr f2 = Field::make(2, 1);
  CHECK(from_ints(f2, {1, 1, 0, 1, 0, 1, 1}).to_string() == "x^6+x^5+x^3+x+1");
  const FieldPtr f3 = Field::make(3, 1);
  CHECK(from_ints(f3, {0, 1, 2}).to_string() == "2x^2+x");
  CHECK(from_ints(f3, {2}).to_string() == "2");
  CHECK(Polynomial::zero(f3).to_string() == "0");
  CHECK(Polynomial::x(f3).to_string() == "x");
  const FieldPtr f4 = Field::make(2, 2);
  CHECK(from_ints(f4, {3, 2}).to_string() == "tx+(t+1)");
}

TEST_CASE("mixed-field polynomial arithmetic is rejected") {
  const FieldPtr f2 = Field::make(2, 1);
  const FieldPtr f3 = Field::make(3, 1);
  CHECK_THROWS_AS(Polynomial::x(f2) + Polynomial::x(f3), std::invalid_argument);
  CHECK_THROWS_AS(Polynomial::x(f2) * Polynomial::x(f3), std::invalid_argument);
}
