#ifndef FIXEDFIELD_POLYNOMIAL_HPP
#define FIXEDFIELD_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fixedfield/field.hpp"

namespace fixedfield {

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kZeroPolyDegree = -1;

/// Univariate polynomial over a Field, dense coefficients in ascending
/// powers of x, canonical form (no trailing zero coefficients).
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field) : field_(std::move(field)) {}
  Polynomial(FieldPtr field, std::vector<std::uint64_t> packed_coeffs);
  Polynomial(FieldPtr field, const std::vector<FieldElement>& coeffs);

  static Polynomial zero(const FieldPtr& field) { return Polynomial(field); }
  static Polynomial one(const FieldPtr& field);
  static Polynomial x(const FieldPtr& field);
  static Polynomial constant(const FieldElement& c);
  /// coeff * x^exponent
  static Polynomial monomial(const FieldElement& coeff, std::uint64_t exponent);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::uint64_t>& packed() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  FieldElement coeff(std::size_t i) const;  // zero beyond the degree
  FieldElement leading_coefficient() const;  // zero for the zero polynomial
  std::vector<FieldElement> coefficients() const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const FieldElement& scalar) const;
  Polynomial operator-() const;

  Polynomial pow(std::uint64_t k) const;

  /// Quotient and remainder with deg r < deg divisor.
  /// Throws std::domain_error when the divisor is zero.
  std::pair<Polynomial, Polynomial> divrem(const Polynomial& divisor) const;

  /// Exact division; throws std::domain_error when the remainder is nonzero.
  Polynomial exact_div(const Polynomial& divisor) const;

  Polynomial monic() const;  // throws std::domain_error for zero

  FieldElement eval(const FieldElement& at) const;

  bool operator==(const Polynomial& rhs) const;
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  /// Paper-style rendering: descending powers, unit coefficients omitted,
  /// e.g. "x^6+x^5+x^3+x+1" or "2x^18+x^2".
  std::string to_string() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<std::uint64_t> c_;
};

/// Monic greatest common divisor by Euclid's algorithm.
/// Throws std::domain_error when both inputs are zero.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// prod_{alpha in F_q} (x - alpha), expanded; equals x^q - x.
Polynomial vanishing_polynomial(const FieldPtr& field);

/// x^q - x built directly from its two terms.
Polynomial x_pow_q_minus_x(const FieldPtr& field);

}  // namespace fixedfield

#endif
