#ifndef FIXEDFIELD_MOEBIUS_HPP
#define FIXEDFIELD_MOEBIUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fixedfield/rational.hpp"

namespace fixedfield {

/// An automorphism of F_q(x) over F_q: x -> (ax+b)/(cx+d) with ad != bc.
/// Stored as the canonical representative of its projective class, scaled
/// so the first nonzero entry of (a, b, c, d) equals 1.
class MoebiusMap {
 public:
  /// Normalizes; throws std::invalid_argument when ad == bc or the
  /// coefficients live in different fields.
  MoebiusMap(const FieldElement& a, const FieldElement& b,
             const FieldElement& c, const FieldElement& d);

  static MoebiusMap identity(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  FieldElement a() const { return FieldElement(field_, a_); }
  FieldElement b() const { return FieldElement(field_, b_); }
  FieldElement c() const { return FieldElement(field_, c_); }
  FieldElement d() const { return FieldElement(field_, d_); }

  bool is_affine() const { return c_ == 0; }

  /// Composition as automorphisms: (s * t)(f) = s(t(f)), so that
  /// apply(s * t, f) == apply(s, apply(t, f)).
  MoebiusMap operator*(const MoebiusMap& rhs) const;
  MoebiusMap inverse() const;

  /// Substitutes (ax+b)/(cx+d) for x in f.  Denominators are cleared
  /// symbolically: with e = max(deg num, deg den), every x^i becomes
  /// (ax+b)^i (cx+d)^(e-i), so poles never appear.
  RationalFunction apply(const RationalFunction& f) const;

  /// The image of x itself, as a canonical rational function.
  RationalFunction to_rational() const;

  bool operator==(const MoebiusMap& rhs) const;
  bool operator!=(const MoebiusMap& rhs) const { return !(*this == rhs); }

  /// Packs (a, b, c, d) into a single integer; canonical per class.
  std::uint64_t key() const;

  std::string to_string() const;  // "x+1", "1/x", "(x+1)/x", ...

 private:
  friend std::vector<MoebiusMap> enumerate_group(const FieldPtr& field);
  friend std::vector<MoebiusMap> group_generators(const FieldPtr& field);

  MoebiusMap(FieldPtr field, std::uint64_t a, std::uint64_t b, std::uint64_t c,
             std::uint64_t d, bool normalized);
  void normalize();

  FieldPtr field_;
  std::uint64_t a_, b_, c_, d_;
};

/// All (q+1)q(q-1) automorphisms, deterministically ordered: affine maps
/// a*x+b first (a over nonzero elements, then b), then fractional maps
/// (ax+b)/(x+c) ordered by (a, c, b), keeping only ac != b.
std::vector<MoebiusMap> enumerate_group(const FieldPtr& field);

/// {x -> x+1, x -> y*x (y primitive, omitted when q = 2), x -> 1/x}.
/// Their closure under composition is the whole group.
std::vector<MoebiusMap> group_generators(const FieldPtr& field);

/// Breadth-first closure of a generating set under composition.
std::vector<MoebiusMap> generated_closure(const std::vector<MoebiusMap>& generators);

}  // namespace fixedfield

#endif
