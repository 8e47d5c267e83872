#include "fixedfield/polynomial.hpp"

#include <stdexcept>

namespace fixedfield {

Polynomial::Polynomial(FieldPtr field, std::vector<std::uint64_t> packed_coeffs)
    : field_(std::move(field)), c_(std::move(packed_coeffs)) {
  for (std::uint64_t v : c_) {
    if (v >= field_->q()) throw std::invalid_argument("coefficient out of range [0, q)");
  }
  trim();
}

Polynomial::Polynomial(FieldPtr field, const std::vector<FieldElement>& coeffs)
    : field_(std::move(field)) {
  c_.reserve(coeffs.size());
  for (const FieldElement& e : coeffs) {
    require_same_field(field_, e.field());
    c_.push_back(e.value());
  }
  trim();
}

Polynomial Polynomial::one(const FieldPtr& field) {
  return Polynomial(field, std::vector<std::uint64_t>{1});
}

Polynomial Polynomial::x(const FieldPtr& field) {
  return Polynomial(field, std::vector<std::uint64_t>{0, 1});
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.field(), std::vector<std::uint64_t>{c.value()});
}

Polynomial Polynomial::monomial(const FieldElement& coeff, std::uint64_t exponent) {
  std::vector<std::uint64_t> v(exponent + 1, 0);
  v[exponent] = coeff.value();
  return Polynomial(coeff.field(), std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElement Polynomial::coeff(std::size_t i) const {
  return FieldElement(field_, i < c_.size() ? c_[i] : 0);
}

FieldElement Polynomial::leading_coefficient() const {
  return FieldElement(field_, c_.empty() ? 0 : c_.back());
}

std::vector<FieldElement> Polynomial::coefficients() const {
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (std::uint64_t v : c_) out.emplace_back(field_, v);
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  require_same_field(field_, rhs.field_);
  const Field& f = *field_;
  Polynomial out(field_);
  out.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    std::uint64_t a = i < c_.size() ? c_[i] : 0;
    std::uint64_t b = i < rhs.c_.size() ? rhs.c_[i] : 0;
    out.c_[i] = f.add_v(a, b);
  }
  out.trim();
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  require_same_field(field_, rhs.field_);
  const Field& f = *field_;
  Polynomial out(field_);
  out.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    std::uint64_t a = i < c_.size() ? c_[i] : 0;
    std::uint64_t b = i < rhs.c_.size() ? rhs.c_[i] : 0;
    out.c_[i] = f.sub_v(a, b);
  }
  out.trim();
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  require_same_field(field_, rhs.field_);
  if (is_zero() || rhs.is_zero()) return Polynomial(field_);
  const Field& f = *field_;
  Polynomial out(field_);
  out.c_.assign(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const std::uint64_t a = c_[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      out.c_[i + j] = f.add_v(out.c_[i + j], f.mul_v(a, rhs.c_[j]));
    }
  }
  out.trim();
  return out;
}

Polynomial Polynomial::operator*(const FieldElement& scalar) const {
  require_same_field(field_, scalar.field());
  const Field& f = *field_;
  Polynomial out(field_);
  out.c_.reserve(c_.size());
  for (std::uint64_t v : c_) out.c_.push_back(f.mul_v(v, scalar.value()));
  out.trim();
  return out;
}

Polynomial Polynomial::operator-() const {
  const Field& f = *field_;
  Polynomial out(field_);
  out.c_.reserve(c_.size());
  for (std::uint64_t v : c_) out.c_.push_back(f.neg_v(v));
  return out;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = one(field_);
  Polynomial base = *this;
  while (k != 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& divisor) const {
  require_same_field(field_, divisor.field_);
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const Field& f = *field_;
  if (degree() < divisor.degree()) return {Polynomial(field_), *this};

  std::vector<std::uint64_t> r = c_;
  std::vector<std::uint64_t> q(c_.size() - divisor.c_.size() + 1, 0);
  const std::uint64_t lead_inv = f.inv_v(divisor.c_.back());
  for (std::size_t top = r.size(); top >= divisor.c_.size(); --top) {
    const std::size_t i = top - 1;
    if (r[i] == 0) continue;
    const std::uint64_t factor = f.mul_v(r[i], lead_inv);
    const std::size_t shift = i - (divisor.c_.size() - 1);
    q[shift] = factor;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j) {
      r[shift + j] = f.sub_v(r[shift + j], f.mul_v(factor, divisor.c_[j]));
    }
  }
  Polynomial quot(field_), rem(field_);
  quot.c_ = std::move(q);
  quot.trim();
  rem.c_ = std::move(r);
  rem.trim();
  return {std::move(quot), std::move(rem)};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  auto [q, r] = divrem(divisor);
  if (!r.is_zero()) throw std::domain_error("division is not exact");
  return q;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no monic form");
  if (c_.back() == 1) return *this;
  return *this * FieldElement(field_, field_->inv_v(c_.back()));
}

FieldElement Polynomial::eval(const FieldElement& at) const {
  require_same_field(field_, at.field());
  const Field& f = *field_;
  std::uint64_t acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = f.add_v(f.mul_v(acc, at.value()), c_[i]);
  }
  return FieldElement(field_, acc);
}

bool Polynomial::operator==(const Polynomial& rhs) const {
  return c_ == rhs.c_ && field_->same(*rhs.field_);
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += "+";
    const std::string cs = field_->value_to_string(c_[i]);
    const bool unit = (c_[i] == 1);
    const bool composite = cs.find('+') != std::string::npos;
    if (i == 0) {
      out += composite ? "(" + cs + ")" : cs;
      continue;
    }
    if (!unit) out += composite ? "(" + cs + ")" : cs;
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero()) {
    throw std::domain_error("gcd(0, 0) is undefined");
  }
  Polynomial r0 = a, r1 = b;
  while (!r1.is_zero()) {
    Polynomial r2 = r0.divrem(r1).second;
    r0 = std::move(r1);
    r1 = std::move(r2);
  }
  return r0.monic();
}

Polynomial vanishing_polynomial(const FieldPtr& field) {
  Polynomial prod = Polynomial::one(field);
  const Polynomial x = Polynomial::x(field);
  for (const FieldElement& alpha : field->elements()) {
    prod = prod * (x - Polynomial::constant(alpha));
  }
  return prod;
}

Polynomial x_pow_q_minus_x(const FieldPtr& field) {
  std::vector<std::uint64_t> c(field->q() + 1, 0);
  c[1] = field->neg_v(1);
  c[field->q()] = 1;
  return Polynomial(field, std::move(c));
}

}  // namespace fixedfield
