#include "fixedfield/moebius.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace fixedfield {

MoebiusMap::MoebiusMap(const FieldElement& a, const FieldElement& b,
                       const FieldElement& c, const FieldElement& d)
    : field_(a.field()), a_(a.value()), b_(b.value()), c_(c.value()), d_(d.value()) {
  require_same_field(a, b);
  require_same_field(a, c);
  require_same_field(a, d);
  const Field& f = *field_;
  if (f.mul_v(a_, d_) == f.mul_v(b_, c_)) {
    throw std::invalid_argument("degenerate map: ad == bc");
  }
  normalize();
}

MoebiusMap::MoebiusMap(FieldPtr field, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c, std::uint64_t d, bool normalized)
    : field_(std::move(field)), a_(a), b_(b), c_(c), d_(d) {
  if (!normalized) normalize();
}

void MoebiusMap::normalize() {
  const Field& f = *field_;
  std::uint64_t first = a_ ? a_ : b_ ? b_ : c_ ? c_ : d_;
  if (first == 1) return;
  const std::uint64_t s = f.inv_v(first);
  a_ = f.mul_v(a_, s);
  b_ = f.mul_v(b_, s);
  c_ = f.mul_v(c_, s);
  d_ = f.mul_v(d_, s);
}

MoebiusMap MoebiusMap::identity(const FieldPtr& field) {
  return MoebiusMap(field, 1, 0, 0, 1, true);
}

MoebiusMap MoebiusMap::operator*(const MoebiusMap& rhs) const {
  require_same_field(field_, rhs.field_);
  const Field& f = *field_;
  // Automorphism composition: (s*t)(x) = s(t(x)) substitutes s's formula
  // into t's, so the coefficient matrices multiply in reversed order,
  // M_t * M_s with M = [[a, b], [c, d]].
  const MoebiusMap& s = *this;
  const MoebiusMap& t = rhs;
  const std::uint64_t a = f.add_v(f.mul_v(t.a_, s.a_), f.mul_v(t.b_, s.c_));
  const std::uint64_t b = f.add_v(f.mul_v(t.a_, s.b_), f.mul_v(t.b_, s.d_));
  const std::uint64_t c = f.add_v(f.mul_v(t.c_, s.a_), f.mul_v(t.d_, s.c_));
  const std::uint64_t d = f.add_v(f.mul_v(t.c_, s.b_), f.mul_v(t.d_, s.d_));
  return MoebiusMap(field_, a, b, c, d, false);
}

MoebiusMap MoebiusMap::inverse() const {
  const Field& f = *field_;
  // Adjugate; the determinant scalar is absorbed by normalization.
  return MoebiusMap(field_, d_, f.neg_v(b_), f.neg_v(c_), a_, false);
}

RationalFunction MoebiusMap::apply(const RationalFunction& f) const {
  require_same_field(field_, f.field());
  const Polynomial num = Polynomial(field_, std::vector<std::uint64_t>{b_, a_});
  const Polynomial den = Polynomial(field_, std::vector<std::uint64_t>{d_, c_});
  const int e = std::max(f.num().degree(), f.den().degree());
  if (e <= 0) return f;

  // Homogenized substitution: x^i -> num^i * den^(e-i).  Horner in num with
  // ascending powers of den keeps memory linear in e.
  auto substituted = [&](const Polynomial& poly) {
    Polynomial acc = Polynomial::constant(poly.coeff(static_cast<std::size_t>(e)));
    Polynomial den_pow = Polynomial::one(field_);
    for (int i = e - 1; i >= 0; --i) {
      den_pow = den_pow * den;
      acc = acc * num + den_pow * poly.coeff(static_cast<std::size_t>(i));
    }
    return acc;
  };
  return RationalFunction(substituted(f.num()), substituted(f.den()));
}

RationalFunction MoebiusMap::to_rational() const {
  return RationalFunction(Polynomial(field_, std::vector<std::uint64_t>{b_, a_}),
                          Polynomial(field_, std::vector<std::uint64_t>{d_, c_}));
}

bool MoebiusMap::operator==(const MoebiusMap& rhs) const {
  return a_ == rhs.a_ && b_ == rhs.b_ && c_ == rhs.c_ && d_ == rhs.d_ &&
         field_->same(*rhs.field_);
}

std::uint64_t MoebiusMap::key() const {
  const std::uint64_t q = field_->q();
  return ((a_ * q + b_) * q + c_) * q + d_;
}

std::string MoebiusMap::to_string() const {
  const Field& f = *field_;
  if (c_ == 0) {
    // (a/d) x + (b/d), printed as a plain degree-1 polynomial.
    const std::uint64_t di = f.inv_v(d_);
    Polynomial affine(field_, std::vector<std::uint64_t>{f.mul_v(b_, di), f.mul_v(a_, di)});
    return affine.to_string();
  }
  const Polynomial num(field_, std::vector<std::uint64_t>{b_, a_});
  const Polynomial den(field_, std::vector<std::uint64_t>{d_, c_});
  auto wrap = [](const Polynomial& p) {
    std::string s = p.to_string();
    const bool multi = s.find('+') != std::string::npos;
    const bool scaled = !p.is_constant() && !p.leading_coefficient().is_one();
    return (multi || scaled) ? "(" + s + ")" : s;
  };
  return wrap(num) + "/" + wrap(den);
}

std::vector<MoebiusMap> enumerate_group(const FieldPtr& field) {
  const std::vector<FieldElement> elems = field->elements();
  const Field& f = *field;
  std::vector<MoebiusMap> out;
  out.reserve((field->q() + 1) * field->q() * (field->q() - 1));
  // Affine maps a*x + b, a != 0.
  for (const FieldElement& a : elems) {
    if (a.is_zero()) continue;
    for (const FieldElement& b : elems) {
      out.push_back(MoebiusMap(field, a.value(), b.value(), 0, 1, false));
    }
  }
  // Fractional maps (a*x + b)/(x + c), a*c != b.
  for (const FieldElement& a : elems) {
    for (const FieldElement& c : elems) {
      const std::uint64_t ac = f.mul_v(a.value(), c.value());
      for (const FieldElement& b : elems) {
        if (ac == b.value()) continue;
        out.push_back(MoebiusMap(field, a.value(), b.value(), 1, c.value(), false));
      }
    }
  }
  return out;
}

std::vector<MoebiusMap> group_generators(const FieldPtr& field) {
  std::vector<MoebiusMap> gens;
  gens.push_back(MoebiusMap(field, 1, 1, 0, 1, true));  // x -> x + 1
  if (field->q() > 2) {
    const FieldElement y = field->primitive_element();
    gens.push_back(MoebiusMap(field, y.value(), 0, 0, 1, false));  // x -> y*x
  }
  gens.push_back(MoebiusMap(field, 0, 1, 1, 0, true));  // x -> 1/x
  return gens;
}

std::vector<MoebiusMap> generated_closure(const std::vector<MoebiusMap>& generators) {
  if (generators.empty()) return {};
  const FieldPtr field = generators.front().field();
  std::vector<MoebiusMap> out;
  std::unordered_set<std::uint64_t> seen;
  std::deque<MoebiusMap> frontier;

  auto push = [&](const MoebiusMap& m) {
    if (seen.insert(m.key()).second) {
      out.push_back(m);
      frontier.push_back(m);
    }
  };
  push(MoebiusMap::identity(field));
  for (const MoebiusMap& g : generators) push(g);
  while (!frontier.empty()) {
    const MoebiusMap cur = frontier.front();
    frontier.pop_front();
    for (const MoebiusMap& g : generators) push(cur * g);
  }
  return out;
}

}  // namespace fixedfield
