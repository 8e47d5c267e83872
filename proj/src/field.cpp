#include "fixedfield/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace fixedfield {

namespace {

// Table-driven arithmetic is worthwhile only for small fields; above this
// the digit fallback is used.
constexpr std::uint64_t kTableLimit = 256;

// Arithmetic on digit vectors over F_p (polynomials in t, ascending).

void trim_digits(std::vector<std::uint64_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<std::uint64_t> mul_digits(const std::vector<std::uint64_t>& a,
                                      const std::vector<std::uint64_t>& b,
                                      std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
  }
  trim_digits(out);
  return out;
}

// Remainder of a modulo a monic divisor.
std::vector<std::uint64_t> rem_digits(std::vector<std::uint64_t> a,
                                      const std::vector<std::uint64_t>& monic,
                                      std::uint64_t p) {
  trim_digits(a);
  while (a.size() >= monic.size()) {
    const std::uint64_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - monic.size();
      for (std::size_t j = 0; j < monic.size(); ++j) {
        std::uint64_t sub = (lead * monic[j]) % p;
        a[shift + j] = (a[shift + j] + p - sub) % p;
      }
    }
    a.pop_back();  // the leading coefficient has been cancelled
    trim_digits(a);
  }
  return a;
}

bool is_irreducible(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  // Trial division by every monic polynomial of degree 1..deg(f)/2.
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::vector<std::uint64_t> cand(d + 1, 0);
    cand[d] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      // Ascending index enumerates candidates; order is irrelevant here.
      for (std::size_t i = 0; i < d; ++i) {
        cand[i] = rest % p;
        rest /= p;
      }
      if (rem_digits(f, cand, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> default_modulus(std::uint64_t p, std::uint32_t n) {
  // Lexicographically smallest monic irreducible of degree n, comparing
  // coefficient digit vectors ascending-power-first.
  std::vector<std::uint64_t> f(n + 1, 0);
  f[n] = 1;
  std::vector<std::uint64_t> odometer(n, 0);  // odometer[0] is compared first
  while (true) {
    for (std::uint32_t i = 0; i < n; ++i) f[i] = odometer[i];
    if (f[0] != 0 && is_irreducible(f, p)) return f;
    // Advance in lexicographic order: the last digit moves fastest.
    int pos = static_cast<int>(n) - 1;
    while (pos >= 0) {
      if (++odometer[pos] < p) break;
      odometer[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FieldPtr Field::make(std::uint64_t p, std::uint32_t n,
                     std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p must be prime (got " + std::to_string(p) + ")");
  }
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (p >= (std::uint64_t{1} << 31)) throw std::invalid_argument("p too large");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (q > (std::uint64_t{1} << 32) / p) throw std::invalid_argument("q = p^n too large");
    q *= p;
  }

  std::vector<std::uint64_t> mod;
  if (n == 1) {
    if (modulus.has_value()) {
      throw std::invalid_argument("modulus only applies to extension fields (n > 1)");
    }
  } else if (modulus.has_value()) {
    mod = *modulus;
    if (mod.size() != n + 1) {
      throw std::invalid_argument("modulus must have degree n (n+1 digits)");
    }
    for (std::uint64_t d : mod) {
      if (d >= p) throw std::invalid_argument("modulus digit out of range [0, p)");
    }
    if (mod.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(mod, p)) throw std::invalid_argument("modulus is reducible");
  } else {
    mod = default_modulus(p, n);
  }
  return FieldPtr(new Field(p, n, std::move(mod)));
}

Field::Field(std::uint64_t p, std::uint32_t n, std::vector<std::uint64_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
  q_ = 1;
  for (std::uint32_t i = 0; i < n; ++i) q_ *= p;
  if (q_ <= kTableLimit) build_tables();
}

bool Field::same(const Field& other) const {
  if (this == &other) return true;
  return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
}

std::vector<std::uint64_t> Field::digits_of(std::uint64_t packed) const {
  std::vector<std::uint64_t> d(n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    d[i] = packed % p_;
    packed /= p_;
  }
  return d;
}

std::uint64_t Field::add_slow(std::uint64_t a, std::uint64_t b) const {
  if (n_ == 1) return (a + b) % p_;
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

std::uint64_t Field::neg_slow(std::uint64_t a) const {
  if (n_ == 1) return (p_ - a) % p_;
  std::uint64_t out = 0, mult = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

std::uint64_t Field::mul_slow(std::uint64_t a, std::uint64_t b) const {
  if (n_ == 1) return (a * b) % p_;
  auto prod = mul_digits(digits_of(a), digits_of(b), p_);
  prod = rem_digits(std::move(prod), modulus_, p_);
  std::uint64_t out = 0, mult = 1;
  for (std::size_t i = 0; i < prod.size(); ++i) {
    out += prod[i] * mult;
    mult *= p_;
  }
  return out;
}

void Field::build_tables() {
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (std::uint64_t a = 0; a < q_; ++a) {
    neg_[a] = neg_slow(a);
    for (std::uint64_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = add_slow(a, b);
      mul_[a * q_ + b] = mul_slow(a, b);
    }
  }
  inv_.assign(q_, 0);
  for (std::uint64_t a = 1; a < q_; ++a) {
    inv_[a] = pow_v(a, q_ - 2);
  }
}

std::uint64_t Field::pow_v(std::uint64_t a, std::uint64_t k) const {
  std::uint64_t result = 1, base = a;
  while (k != 0) {
    if (k & 1) result = mul_v(result, base);
    k >>= 1;
    if (k != 0) base = mul_v(base, base);
  }
  return result;
}

std::uint64_t Field::inv_v(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("division by zero in F_q");
  if (!inv_.empty()) return inv_[a];
  return pow_v(a, q_ - 2);
}

FieldElement Field::zero() const { return FieldElement(shared_from_this(), 0); }

FieldElement Field::one() const { return FieldElement(shared_from_this(), 1); }

FieldElement Field::element_from_value(std::uint64_t packed) const {
  if (packed >= q_) throw std::invalid_argument("element value out of range [0, q)");
  return FieldElement(shared_from_this(), packed);
}

FieldElement Field::element_from_digits(const std::vector<std::uint64_t>& digits) const {
  if (digits.size() != n_) {
    throw std::invalid_argument("element needs exactly n digits");
  }
  std::uint64_t v = 0, mult = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (digits[i] >= p_) throw std::invalid_argument("element digit out of range [0, p)");
    v += digits[i] * mult;
    mult *= p_;
  }
  return FieldElement(shared_from_this(), v);
}

std::vector<FieldElement> Field::elements() const {
  // Lexicographic on digit vectors: the t^0 digit is compared first, so it
  // is the most significant position of the enumeration counter.
  std::vector<FieldElement> out;
  out.reserve(q_);
  std::vector<std::uint64_t> place(n_);  // packed weight of each digit slot
  std::uint64_t w = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    place[i] = w;
    w *= p_;
  }
  std::vector<std::uint64_t> digits(n_, 0);
  for (std::uint64_t count = 0; count < q_; ++count) {
    std::uint64_t v = 0;
    for (std::uint32_t i = 0; i < n_; ++i) v += digits[i] * place[i];
    out.emplace_back(shared_from_this(), v);
    int pos = static_cast<int>(n_) - 1;
    while (pos >= 0) {
      if (++digits[pos] < p_) break;
      digits[pos] = 0;
      --pos;
    }
  }
  return out;
}

FieldElement Field::primitive_element() const {
  for (const FieldElement& e : elements()) {
    if (e.is_zero()) continue;
    if (e.multiplicative_order() == q_ - 1) return e;
  }
  throw std::logic_error("no primitive element found");  // unreachable
}

std::string Field::value_to_string(std::uint64_t packed) const {
  if (n_ == 1) return std::to_string(packed);
  if (packed == 0) return "0";
  auto d = digits_of(packed);
  std::string out;
  for (int i = static_cast<int>(n_) - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]);
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string Field::to_string() const {
  std::string s = "F_" + std::to_string(q_);
  if (n_ > 1) {
    std::string mod;
    for (int i = static_cast<int>(modulus_.size()) - 1; i >= 0; --i) {
      if (modulus_[i] == 0) continue;
      if (!mod.empty()) mod += "+";
      if (i == 0) {
        mod += std::to_string(modulus_[i]);
        continue;
      }
      if (modulus_[i] != 1) mod += std::to_string(modulus_[i]);
      mod += "t";
      if (i > 1) mod += "^" + std::to_string(i);
    }
    s += " = F_" + std::to_string(p_) + "[t]/(" + mod + ")";
  }
  return s;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field()->same(*b.field())) {
    throw std::invalid_argument("elements belong to different fields");
  }
}

void require_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a->same(*b)) throw std::invalid_argument("mixed fields");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  return FieldElement(field_, field_->add_v(v_, rhs.v_));
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  return FieldElement(field_, field_->sub_v(v_, rhs.v_));
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  return FieldElement(field_, field_->mul_v(v_, rhs.v_));
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  require_same_field(*this, rhs);
  return FieldElement(field_, field_->mul_v(v_, field_->inv_v(rhs.v_)));
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_->neg_v(v_));
}

FieldElement FieldElement::inverse() const {
  return FieldElement(field_, field_->inv_v(v_));
}

FieldElement FieldElement::pow(std::uint64_t k) const {
  return FieldElement(field_, field_->pow_v(v_, k));
}

FieldElement FieldElement::frobenius() const {
  return FieldElement(field_, field_->frob_v(v_));
}

bool FieldElement::operator==(const FieldElement& rhs) const {
  return v_ == rhs.v_ && field_->same(*rhs.field_);
}

std::uint64_t FieldElement::multiplicative_order() const {
  if (v_ == 0) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t e = 1;
  std::uint64_t acc = v_;
  while (acc != 1) {
    acc = field_->mul_v(acc, v_);
    ++e;
  }
  return e;
}

}  // namespace fixedfield
