#ifndef FIXEDFIELD_RATIONAL_HPP
#define FIXEDFIELD_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "fixedfield/polynomial.hpp"

namespace fixedfield {

/// An element of F_q(x) in canonical form: gcd(num, den) = 1 and den monic.
/// Equality is structural on the canonical form.
class RationalFunction {
 public:
  /// Canonicalizes; throws std::domain_error when den is zero.
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num);

  static RationalFunction zero(const FieldPtr& field);
  static RationalFunction one(const FieldPtr& field);
  static RationalFunction x(const FieldPtr& field);
  static RationalFunction constant(const FieldElement& c);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction operator/(const RationalFunction& rhs) const;
  RationalFunction operator-() const;
  RationalFunction inverse() const;  // throws std::domain_error on zero
  RationalFunction pow(std::uint64_t k) const;

  bool operator==(const RationalFunction& rhs) const;
  bool operator!=(const RationalFunction& rhs) const { return !(*this == rhs); }

  /// max(deg num, deg den) of the canonical form, which equals
  /// [F_q(x) : F_q(f)].  Throws std::domain_error for constants
  /// (they generate only the base field).
  std::uint64_t extension_degree() const;

  /// "num" when den == 1, otherwise "num/den" with parentheses around any
  /// side that has more than one term or a non-unit coefficient.
  std::string to_string() const;

 private:
  Polynomial num_, den_;
};

}  // namespace fixedfield

#endif
