#include <doctest.h>

#include <stdexcept>

#include "fixedfield/field.hpp"

using namespace fixedfield;

TEST_CASE("prime fields construct without a modulus") {
  const FieldPtr f2 = Field::make(2, 1);
  CHECK(f2->q() == 2);
  CHECK(f2->modulus().empty());
  const FieldPtr f3 = Field::make(3, 1);
  CHECK(f3->q() == 3);
}

TEST_CASE("default moduli are the lexicographically smallest irreducibles") {
  CHECK(Field::make(2, 2)->modulus() == std::vector<std::uint64_t>{1, 1, 1});
  CHECK(Field::make(3, 2)->modulus() == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(Field::make(2, 3)->modulus() == std::vector<std::uint64_t>{1, 0, 1, 1});
  CHECK(Field::make(2, 4)->modulus() == std::vector<std::uint64_t>{1, 0, 0, 1, 1});
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
  // Modulus is only meaningful for extensions.
  CHECK_THROWS_AS(Field::make(3, 1, std::vector<std::uint64_t>{1, 1}),
                  std::invalid_argument);
  // t^2 + 1 = (t+1)^2 over F_2.
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint64_t>{1, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint64_t>{1, 1, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint64_t>{2, 1, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint64_t>{1, 1}),
                  std::invalid_argument);
}

TEST_CASE("a user-supplied irreducible modulus is honored") {
  const FieldPtr f8 = Field::make(2, 3, std::vector<std::uint64_t>{1, 1, 0, 1});
  CHECK(f8->q() == 8);
  CHECK(f8->modulus() == std::vector<std::uint64_t>{1, 1, 0, 1});
}

TEST_CASE("basic arithmetic matches hand calculations") {
  const FieldPtr f3 = Field::make(3, 1);
  CHECK(f3->element_from_value(2) * f3->element_from_value(2) == f3->one());
  CHECK(f3->element_from_value(2).inverse() == f3->element_from_value(2));

  const FieldPtr f4 = Field::make(2, 2);
  const FieldElement t = f4->element_from_digits({0, 1});
  const FieldElement t1 = f4->element_from_digits({1, 1});
  CHECK(t * t == t1);
  CHECK(t.inverse() == t1);
  CHECK(t.frobenius() == t1);

  CHECK(Field::make(2, 1)->one().inverse() == Field::make(2, 1)->one());
}

TEST_CASE("additive inverses work everywhere") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2},
                      {5, 1}, {3, 2}}) {
    const FieldPtr f = Field::make(p, n);
    for (const FieldElement& a : f->elements()) {
      CHECK(a + (-a) == f->zero());
    }
  }
}

TEST_CASE("pow follows the a^q = a rule and 0^0 = 1") {
  const FieldPtr f4 = Field::make(2, 2);
  const FieldElement t = f4->element_from_digits({0, 1});
  CHECK(t.pow(4) == t);
  const FieldPtr f3 = Field::make(3, 1);
  CHECK(f3->element_from_value(2).pow(2) == f3->one());
  CHECK(f3->zero().pow(0) == f3->one());

  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2},
                      {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}}) {
    const FieldPtr f = Field::make(p, n);
    for (const FieldElement& a : f->elements()) {
      CHECK(a.pow(f->q()) == a);
      if (!a.is_zero()) CHECK(a.pow(f->q() - 1) == f->one());
    }
  }
}

TEST_CASE("frobenius is additive and fixes the prime field") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 2}, {3, 2}, {2, 3},
                      {2, 4}}) {
    const FieldPtr f = Field::make(p, n);
    const auto elems = f->elements();
    for (const FieldElement& a : elems) {
      for (const FieldElement& b : elems) {
        CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
      }
    }
  }
  const FieldPtr f5 = Field::make(5, 1);
  for (const FieldElement& a : f5->elements()) CHECK(a.frobenius() == a);
  CHECK(Field::make(2, 2)->zero().frobenius() == Field::make(2, 2)->zero());
}

TEST_CASE("enumeration is lexicographic on digit vectors") {
  const FieldPtr f2 = Field::make(2, 1);
  const auto e2 = f2->elements();
  REQUIRE(e2.size() == 2);
  CHECK(e2[0] == f2->zero());
  CHECK(e2[1] == f2->one());

  const FieldPtr f3 = Field::make(3, 1);
  const auto e3 = f3->elements();
  REQUIRE(e3.size() == 3);
  CHECK(e3[2] == f3->element_from_value(2));

  // F_4: [0,0] < [0,1] < [1,0] < [1,1], comparing the t^0 digit first.
  const FieldPtr f4 = Field::make(2, 2);
  const auto e4 = f4->elements();
  REQUIRE(e4.size() == 4);
  CHECK(e4[0].digits() == std::vector<std::uint64_t>{0, 0});
  CHECK(e4[1].digits() == std::vector<std::uint64_t>{0, 1});
  CHECK(e4[2].digits() == std::vector<std::uint64_t>{1, 0});
  CHECK(e4[3].digits() == std::vector<std::uint64_t>{1, 1});
  for (std::size_t i = 0; i < e4.size(); ++i) {
    for (std::size_t j = i + 1; j < e4.size(); ++j) CHECK(e4[i] != e4[j]);
  }
}

TEST_CASE("primitive elements generate the multiplicative group") {
  CHECK(Field::make(2, 1)->primitive_element() == Field::make(2, 1)->one());
  CHECK(Field::make(3, 1)->primitive_element().value() == 2);
  CHECK(Field::make(2, 2)->primitive_element().digits() ==
        std::vector<std::uint64_t>{0, 1});
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2},
                      {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const FieldPtr f = Field::make(p, n);
    CHECK(f->primitive_element().multiplicative_order() == f->q() - 1);
  }
}

TEST_CASE("field axioms hold exhaustively at small q") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint32_t>{2, 2}, {3, 2}}) {
    const FieldPtr f = Field::make(p, n);
    const auto elems = f->elements();
    for (const FieldElement& a : elems) {
      for (const FieldElement& b : elems) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const FieldElement& c : elems) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("larger fields satisfy axioms on sampled triples") {
  const FieldPtr f25 = Field::make(5, 2);
  CHECK(f25->q() == 25);
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return (state >> 33) % 25;
  };
  for (int i = 0; i < 200; ++i) {
    const FieldElement a = f25->element_from_value(next());
    const FieldElement b = f25->element_from_value(next());
    const FieldElement c = f25->element_from_value(next());
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == f25->one());
  }
}

TEST_CASE("division by zero and mixed fields are rejected") {
  const FieldPtr f3 = Field::make(3, 1);
  CHECK_THROWS_AS(f3->zero().inverse(), std::domain_error);
  CHECK_THROWS_AS(f3->one() / f3->zero(), std::domain_error);
  CHECK_THROWS_AS(f3->zero().multiplicative_order(), std::domain_error);

  const FieldPtr f4 = Field::make(2, 2);
  CHECK_THROWS_AS(f3->one() + f4->one(), std::invalid_argument);
  CHECK_THROWS_AS(f3->one() * f4->one(), std::invalid_argument);
}

TEST_CASE("structural equality spans separately constructed fields") {
  const FieldPtr a = Field::make(2, 2);
  const FieldPtr b = Field::make(2, 2);
  CHECK(a->same(*b));
  CHECK(a->one() == b->one());
  CHECK_FALSE(a->same(*Field::make(3, 2)));
}

TEST_CASE("element accessors round-trip digits") {
  const FieldPtr f9 = Field::make(3, 2);
  const FieldElement e = f9->element_from_digits({2, 1});
  CHECK(e.digits() == std::vector<std::uint64_t>{2, 1});
  CHECK(e.to_string() == "t+2");
  CHECK_THROWS_AS(f9->element_from_digits({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(f9->element_from_digits({1}), std::invalid_argument);
  CHECK_THROWS_AS(f9->element_from_value(9), std::invalid_argument);
  CHECK(f9->element_from_digits({2, 0}).in_prime_subfield());
  CHECK_FALSE(e.in_prime_subfield());
}
