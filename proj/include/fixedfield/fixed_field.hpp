#ifndef FIXEDFIELD_FIXED_FIELD_HPP
#define FIXEDFIELD_FIXED_FIELD_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fixedfield/moebius.hpp"

namespace fixedfield {

/// The parameters behind the fixed-field generator f_m: the exponent
/// m = q^2 - 1 and the group order (q+1)q(q-1).
struct GeneratorSpecs {
  explicit GeneratorSpecs(FieldPtr f);

  FieldPtr field;
  std::uint64_t m;
  std::uint64_t group_order;
};

/// sum_{alpha in F_q} alpha^k for k >= 1, by direct summation.  Equals -1
/// when (q-1) | k and 0 otherwise; the summation is cross-checked against
/// that closed form.  k = 0 is rejected (callers inline the value 0).
FieldElement power_sum(const FieldPtr& field, std::uint64_t k);

/// (x^q - x)^k, the common denominator of the f_k summation.
Polynomial common_denominator(const FieldPtr& field, std::uint64_t k);

/// Numerator contribution of a subset of group elements over the common
/// denominator (x^q - x)^k.  Field addition is commutative and exact, so
/// partial results from any partition of the group sum to the same
/// polynomial bit for bit.
Polynomial f_k_partial_numerator(const FieldPtr& field,
                                 std::span<const MoebiusMap> maps,
                                 std::uint64_t k);

/// f_k = sum over the whole automorphism group of phi(x)^k, k >= 1,
/// accumulated over the common denominator and reduced once at the end.
RationalFunction f_k_direct(const FieldPtr& field, std::uint64_t k);

/// The factored evaluation
///   f_k = 1 - (1 + sum_b (x-b)^k) * (1 + sum_c 1/(x-c)^k),
/// valid when (q-1) | k; throws std::invalid_argument otherwise.
RationalFunction f_k_factored(const FieldPtr& field, std::uint64_t k);

/// The closed form of the generator f_m as a coprime pair:
///   g = sum_{i=0}^{q(q+1)} theta_i x^{i(q-1)},  theta_i = 2 for
///       i = q, 2q, ..., q^2 and 1 otherwise (reduced into F_p),
///   h = sum_{i=1}^{q} x^{iq(q-1)}.
std::pair<Polynomial, Polynomial> generator_closed_form(const FieldPtr& field);

/// f_k * (x^q - x)^k, for k a positive multiple of q-1.  The division by
/// the canonical denominator is exact; a nonzero remainder would throw.
Polynomial cleared_numerator(const FieldPtr& field, std::uint64_t k);

/// Whether deg(f_k * (x^q-x)^k) == k(q+1).
bool cleared_numerator_degree_check(const FieldPtr& field, std::uint64_t k);

/// Verifies, for g = (x^q-x)^(q(q-1)) * f_m and h = (x^q-x)^(q(q-1)):
/// (1) g is a polynomial, (2) deg g = |G|, (3) gcd(g, h) = 1,
/// (4) g/h = f_m.  On failure *diagnostic names the first failed clause.
bool generator_fraction_check(const FieldPtr& field, std::string* diagnostic = nullptr);

/// C(n, k) mod p by Lucas' theorem; 0 when k > n.
std::uint64_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// sum_{i=j}^{m} C(i(q-1), j(q-1)) mod p as an element of the prime field,
/// for 0 <= j <= m.
FieldElement binomial_column_sum(const FieldPtr& field, std::uint64_t j);

/// The value the column sum takes: 0 for j <= q, 1 for q < j <= m.
FieldElement binomial_column_sum_expected(const FieldPtr& field, std::uint64_t j);

/// sum_{i=0}^{q} (x+alpha)^{i(q-1)} == sum_{i=0}^{q} x^{i(q-1)},
/// compared as expanded polynomials.
bool translation_identity_check(const FieldPtr& field, const FieldElement& alpha);

/// (A-B)^(p^k-1) == A^(p^k-1) + A^(p^k-2) B + ... + B^(p^k-1),
/// including A == B where both sides vanish.
bool freshman_expansion_check(const FieldPtr& field, const Polynomial& a,
                              const Polynomial& b, std::uint32_t k);

/// Whether apply(sigma, f) == f for every sigma in the full group
/// (exhaustive) or just the generating set (sufficient, generators
/// generate the group).
bool is_invariant(const FieldPtr& field, const RationalFunction& f, bool exhaustive);

enum class Method { kDirect, kFactored, kClosedForm, kAll };

std::string method_name(Method m);

/// The computed generator plus every verification verdict.
struct GeneratorReport {
  FieldPtr field;
  Method method;
  std::uint64_t m = 0;
  std::uint64_t group_order = 0;
  RationalFunction generator;
  std::uint64_t degree = 0;
  bool coprime = false;
  bool invariant_under_group = false;
  bool coefficients_in_prime_field = false;
  bool methods_agree = false;
  std::vector<std::string> methods_compared;
  bool exhaustive_invariance = false;

  bool all_passed() const;
};

/// Computes the generator by the chosen method and fills in all verdicts.
/// The closed form is always evaluated alongside the chosen method (it is
/// cheap), so methods_agree is meaningful for every method except the
/// closed form itself; Method::kAll cross-checks all three routes.
/// Invariance is exhaustive for q <= 5 unless overridden.
GeneratorReport build_report(const FieldPtr& field, Method method,
                             std::optional<bool> exhaustive = std::nullopt);

struct Verdict {
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Verdict> report_verdicts(const GeneratorReport& report);

}  // namespace fixedfield

#endif
