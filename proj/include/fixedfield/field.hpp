#ifndef FIXEDFIELD_FIELD_HPP
#define FIXEDFIELD_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fixedfield {

class Field;
class FieldElement;

using FieldPtr = std::shared_ptr<const Field>;

/// A finite field F_{p^n}, immutable after construction.
///
/// Elements are residue classes in F_p[t]/(modulus), packed into a single
/// integer value sum(d_j * p^j) with digits d_j in [0, p).  For small fields
/// (q <= 256) all arithmetic is table-driven; larger fields fall back to
/// digit arithmetic on demand.
class Field : public std::enable_shared_from_this<Field> {
 public:
  /// Constructs F_{p^n}.  When n > 1 and no modulus is supplied, the
  /// lexicographically smallest monic irreducible polynomial of degree n
  /// over F_p is used (digit vectors compared ascending-power-first).
  /// Throws std::invalid_argument on non-prime p, n < 1, overflowing p^n,
  /// or a supplied modulus that is not monic irreducible of degree n.
  static FieldPtr make(std::uint64_t p, std::uint32_t n,
                       std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  std::uint64_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t q() const { return q_; }

  /// Modulus digits (ascending powers of t, length n+1, monic).
  /// Empty for prime fields (n == 1).
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  bool same(const Field& other) const;

  // --- raw operations on packed values (no bounds checks) ---
  std::uint64_t add_v(std::uint64_t a, std::uint64_t b) const {
    return add_.empty() ? add_slow(a, b) : add_[a * q_ + b];
  }
  std::uint64_t mul_v(std::uint64_t a, std::uint64_t b) const {
    return mul_.empty() ? mul_slow(a, b) : mul_[a * q_ + b];
  }
  std::uint64_t neg_v(std::uint64_t a) const {
    return neg_.empty() ? neg_slow(a) : neg_[a];
  }
  std::uint64_t sub_v(std::uint64_t a, std::uint64_t b) const { return add_v(a, neg_v(b)); }
  std::uint64_t inv_v(std::uint64_t a) const;  // throws std::domain_error on 0
  std::uint64_t pow_v(std::uint64_t a, std::uint64_t k) const;  // 0^0 == 1
  std::uint64_t frob_v(std::uint64_t a) const { return pow_v(a, p_); }

  // --- element factories ---
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element_from_value(std::uint64_t packed) const;
  FieldElement element_from_digits(const std::vector<std::uint64_t>& digits) const;

  /// All q elements in lexicographic order of their digit vectors
  /// (digit for t^0 compared first).
  std::vector<FieldElement> elements() const;

  /// First element in enumeration order with multiplicative order q-1.
  FieldElement primitive_element() const;

  std::vector<std::uint64_t> digits_of(std::uint64_t packed) const;
  std::string value_to_string(std::uint64_t packed) const;

  std::string to_string() const;  // e.g. "F_4 = F_2[t]/(t^2+t+1)"

 private:
  Field(std::uint64_t p, std::uint32_t n, std::vector<std::uint64_t> modulus);

  std::uint64_t add_slow(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg_slow(std::uint64_t a) const;
  void build_tables();

  std::uint64_t p_;
  std::uint32_t n_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;  // empty when n == 1
  std::vector<std::uint64_t> add_, mul_, neg_, inv_;  // empty when q > table limit
};

/// An element of a Field.  Immutable value type; equality is structural
/// (same field parameters and same digits).
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::uint64_t packed) : field_(std::move(field)), v_(packed) {}

  const FieldPtr& field() const { return field_; }
  std::uint64_t value() const { return v_; }
  std::vector<std::uint64_t> digits() const { return field_->digits_of(v_); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  /// True when the element lies in the prime subfield F_p
  /// (all digits above the constant one are zero).
  bool in_prime_subfield() const { return v_ < field_->p(); }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t k) const;
  FieldElement frobenius() const;

  bool operator==(const FieldElement& rhs) const;
  bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

  /// Smallest e >= 1 with a^e == 1; throws std::domain_error for 0.
  std::uint64_t multiplicative_order() const;

  std::string to_string() const { return field_->value_to_string(v_); }

 private:
  FieldPtr field_;
  std::uint64_t v_;
};

/// Throws std::invalid_argument unless both elements belong to the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);
void require_same_field(const FieldPtr& a, const FieldPtr& b);

bool is_prime(std::uint64_t p);

}  // namespace fixedfield

#endif
