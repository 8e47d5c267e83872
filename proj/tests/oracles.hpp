// Test-only reference implementations, deliberately independent of the
// library's computation paths they are used to check.

#ifndef FIXEDFIELD_TESTS_ORACLES_HPP
#define FIXEDFIELD_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "fixedfield/fixed_field.hpp"

namespace oracles {

// f_k summed literally: one rational power per group element, reduced at
// every addition.  Slow but has no shared machinery with the accumulator
// path in f_k_direct.
inline fixedfield::RationalFunction f_k_naive(const fixedfield::FieldPtr& field,
                                              std::uint64_t k) {
  fixedfield::RationalFunction acc = fixedfield::RationalFunction::zero(field);
  for (const fixedfield::MoebiusMap& phi : fixedfield::enumerate_group(field)) {
    acc = acc + phi.to_rational().pow(k);
  }
  return acc;
}

// Row-by-row Pascal triangle mod p.
inline std::uint64_t binomial_pascal(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (std::uint64_t j = 1; j < i; ++j) next[j] = (row[j - 1] + row[j]) % p;
    row = std::move(next);
  }
  return row[k];
}

// Element-by-element power sum, written against the public element API.
inline fixedfield::FieldElement power_sum_brute(const fixedfield::FieldPtr& field,
                                                std::uint64_t k) {
  fixedfield::FieldElement acc = field->zero();
  for (const fixedfield::FieldElement& e : field->elements()) {
    acc = acc + e.pow(k);
  }
  return acc;
}

}  // namespace oracles

#endif
