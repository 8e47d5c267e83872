#include "fixedfield/rational.hpp"

#include <stdexcept>

namespace fixedfield {

namespace {

// Reduce by the gcd and scale the denominator monic.
void canonicalize(Polynomial& num, Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    den = Polynomial::one(den.field());
    return;
  }
  Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    num = num.exact_div(g);
    den = den.exact_div(g);
  }
  const FieldElement lead = den.leading_coefficient();
  if (!lead.is_one()) {
    const FieldElement scale = lead.inverse();
    num = num * scale;
    den = den * scale;
  }
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_field(num_.field(), den_.field());
  canonicalize(num_, den_);
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::one(num_.field())) {}

RationalFunction RationalFunction::zero(const FieldPtr& field) {
  return RationalFunction(Polynomial::zero(field));
}

RationalFunction RationalFunction::one(const FieldPtr& field) {
  return RationalFunction(Polynomial::one(field));
}

RationalFunction RationalFunction::x(const FieldPtr& field) {
  return RationalFunction(Polynomial::x(field));
}

RationalFunction RationalFunction::constant(const FieldElement& c) {
  return RationalFunction(Polynomial::constant(c));
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& rhs) const {
  return *this * rhs.inverse();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(std::uint64_t k) const {
  // Numerator and denominator are already coprime, so their powers are too.
  RationalFunction out = *this;
  if (k == 0) return one(field());
  out.num_ = num_.pow(k);
  out.den_ = den_.pow(k);
  const FieldElement lead = out.den_.leading_coefficient();
  if (!lead.is_one()) {
    const FieldElement scale = lead.inverse();
    out.num_ = out.num_ * scale;
    out.den_ = out.den_ * scale;
  }
  return out;
}

bool RationalFunction::operator==(const RationalFunction& rhs) const {
  return num_ == rhs.num_ && den_ == rhs.den_;
}

std::uint64_t RationalFunction::extension_degree() const {
  if (is_constant()) {
    throw std::domain_error("constants generate only the base field (infinite degree)");
  }
  return static_cast<std::uint64_t>(std::max(num_.degree(), den_.degree()));
}

namespace {

std::string wrapped(const Polynomial& p) {
  std::string s = p.to_string();
  // Parenthesize anything other than a bare constant or unit monomial.
  const bool multi = s.find('+') != std::string::npos;
  const bool scaled = !p.is_constant() && !p.leading_coefficient().is_one();
  if (multi || scaled) return "(" + s + ")";
  return s;
}

}  // namespace

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial::one(field())) return num_.to_string();
  return wrapped(num_) + "/" + wrapped(den_);
}

}  // namespace fixedfield
