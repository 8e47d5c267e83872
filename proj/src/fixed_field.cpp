#include "fixedfield/fixed_field.hpp"

#include <map>
#include <stdexcept>

namespace fixedfield {

GeneratorSpecs::GeneratorSpecs(FieldPtr f) : field(std::move(f)) {
  const std::uint64_t q = field->q();
  m = q * q - 1;
  group_order = (q + 1) * q * (q - 1);
}

FieldElement power_sum(const FieldPtr& field, std::uint64_t k) {
  if (k == 0) {
    throw std::invalid_argument("power_sum requires k >= 1 (the k = 0 sum is 0)");
  }
  const Field& f = *field;
  std::uint64_t acc = 0;
  for (std::uint64_t v = 0; v < f.q(); ++v) {
    acc = f.add_v(acc, f.pow_v(v, k));
  }
  // The sum collapses to -1 when (q-1) | k and to 0 otherwise.
  const std::uint64_t expected = (k % (f.q() - 1) == 0) ? f.neg_v(1) : 0;
  if (acc != expected) throw std::logic_error("power sum violates its closed form");
  return FieldElement(field, acc);
}

Polynomial common_denominator(const FieldPtr& field, std::uint64_t k) {
  return x_pow_q_minus_x(field).pow(k);
}

Polynomial f_k_partial_numerator(const FieldPtr& field,
                                 std::span<const MoebiusMap> maps,
                                 std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("f_k requires k >= 1");
  const Field& f = *field;

  // Group the numerator powers by denominator class before multiplying by
  // the cofactor of the common denominator: the affine maps share the
  // cofactor (x^q-x)^k itself, and the maps with denominator x+c share
  // ((x^q-x)/(x+c))^k.
  Polynomial affine_sum = Polynomial::zero(field);
  std::map<std::uint64_t, Polynomial> fractional;  // keyed by packed c
  for (const MoebiusMap& map : maps) {
    require_same_field(field, map.field());
    if (map.is_affine()) {
      const std::uint64_t di = f.inv_v(map.d().value());
      Polynomial lin(field, std::vector<std::uint64_t>{f.mul_v(map.b().value(), di),
                                                       f.mul_v(map.a().value(), di)});
      affine_sum = affine_sum + lin.pow(k);
    } else {
      const std::uint64_t ci = f.inv_v(map.c().value());
      const std::uint64_t cpack = f.mul_v(map.d().value(), ci);
      Polynomial lin(field, std::vector<std::uint64_t>{f.mul_v(map.b().value(), ci),
                                                       f.mul_v(map.a().value(), ci)});
      auto it = fractional.try_emplace(cpack, Polynomial::zero(field)).first;
      it->second = it->second + lin.pow(k);
    }
  }

  const Polynomial xq_minus_x = x_pow_q_minus_x(field);
  Polynomial result = affine_sum * xq_minus_x.pow(k);
  for (const auto& [cpack, numerators] : fractional) {
    Polynomial lin(field, std::vector<std::uint64_t>{cpack, 1});  // x + c
    const Polynomial cofactor = xq_minus_x.exact_div(lin).pow(k);
    result = result + numerators * cofactor;
  }
  return result;
}

RationalFunction f_k_direct(const FieldPtr& field, std::uint64_t k) {
  const std::vector<MoebiusMap> group = enumerate_group(field);
  Polynomial num = f_k_partial_numerator(field, group, k);
  return RationalFunction(std::move(num), common_denominator(field, k));
}

RationalFunction f_k_factored(const FieldPtr& field, std::uint64_t k) {
  const std::uint64_t q = field->q();
  if (k == 0 || k % (q - 1) != 0) {
    throw std::invalid_argument("factored evaluation requires k to be a positive multiple of q-1");
  }
  const Polynomial x = Polynomial::x(field);
  Polynomial left = Polynomial::one(field);
  for (const FieldElement& b : field->elements()) {
    left = left + (x - Polynomial::constant(b)).pow(k);
  }
  RationalFunction right = RationalFunction::one(field);
  for (const FieldElement& c : field->elements()) {
    right = right + RationalFunction(Polynomial::one(field),
                                     (x - Polynomial::constant(c)).pow(k));
  }
  return RationalFunction::one(field) - RationalFunction(left) * right;
}

std::pair<Polynomial, Polynomial> generator_closed_form(const FieldPtr& field) {
  const std::uint64_t q = field->q();
  const std::uint64_t p = field->p();

  std::vector<std::uint64_t> g((q * (q + 1)) * (q - 1) + 1, 0);
  for (std::uint64_t i = 0; i <= q * (q + 1); ++i) {
    const bool doubled = (i >= q && i <= q * q && i % q == 0);
    g[i * (q - 1)] = (doubled ? 2 : 1) % p;
  }
  std::vector<std::uint64_t> h(q * q * (q - 1) + 1, 0);
  for (std::uint64_t i = 1; i <= q; ++i) {
    h[i * q * (q - 1)] = 1;
  }
  return {Polynomial(field, std::move(g)), Polynomial(field, std::move(h))};
}

Polynomial cleared_numerator(const FieldPtr& field, std::uint64_t k) {
  const std::uint64_t q = field->q();
  if (k == 0 || k % (q - 1) != 0) {
    throw std::invalid_argument("cleared numerator requires k to be a positive multiple of q-1");
  }
  const RationalFunction fk = f_k_direct(field, k);
  const Polynomial denom = common_denominator(field, k);
  // The canonical denominator divides (x^q-x)^k, so this is exact.
  return denom.exact_div(fk.den()) * fk.num();
}

bool cleared_numerator_degree_check(const FieldPtr& field, std::uint64_t k) {
  const Polynomial g = cleared_numerator(field, k);
  return g.degree() >= 0 &&
         static_cast<std::uint64_t>(g.degree()) == k * (field->q() + 1);
}

bool generator_fraction_check(const FieldPtr& field, std::string* diagnostic) {
  const GeneratorSpecs gs(field);
  const std::uint64_t q = field->q();
  const RationalFunction fm = f_k_direct(field, gs.m);
  const Polynomial h = x_pow_q_minus_x(field).pow(q * (q - 1));

  Polynomial g = Polynomial::zero(field);
  try {
    g = h.exact_div(fm.den()) * fm.num();
  } catch (const std::domain_error&) {
    if (diagnostic) *diagnostic = "g = (x^q-x)^(q(q-1)) * f_m is not a polynomial";
    return false;
  }
  if (g.degree() < 0 || static_cast<std::uint64_t>(g.degree()) != gs.group_order) {
    if (diagnostic) {
      *diagnostic = "deg g = " + std::to_string(g.degree()) + ", want |G| = " +
                    std::to_string(gs.group_order);
    }
    return false;
  }
  if (gcd(g, h) != Polynomial::one(field)) {
    if (diagnostic) *diagnostic = "g and h share a nontrivial factor";
    return false;
  }
  if (RationalFunction(g, h) != fm) {
    if (diagnostic) *diagnostic = "g/h does not reduce to f_m";
    return false;
  }
  return true;
}

std::uint64_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("binomial_mod_p requires prime p");
  if (k > n) return 0;
  // Lucas: multiply the digit-wise binomials in base p.
  std::uint64_t result = 1;
  while (n != 0 || k != 0) {
    const std::uint64_t ni = n % p, ki = k % p;
    n /= p;
    k /= p;
    if (ki > ni) return 0;
    // C(ni, ki) mod p via the multiplicative formula with inverses mod p.
    std::uint64_t num = 1, den = 1;
    const std::uint64_t steps = std::min(ki, ni - ki);
    for (std::uint64_t i = 1; i <= steps; ++i) {
      num = (num * ((ni + 1 - i) % p)) % p;
      den = (den * (i % p)) % p;
    }
    // den is a product of nonzero residues, hence invertible.
    std::uint64_t den_inv = 1, base = den, e = p - 2;
    while (e != 0) {
      if (e & 1) den_inv = (den_inv * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    result = (result * ((num * den_inv) % p)) % p;
    if (result == 0) return 0;
  }
  return result;
}

namespace {

FieldPtr prime_subfield_of(const FieldPtr& field) {
  return field->n() == 1 ? field : Field::make(field->p(), 1);
}

}  // namespace

FieldElement binomial_column_sum(const FieldPtr& field, std::uint64_t j) {
  const GeneratorSpecs gs(field);
  if (j > gs.m) throw std::invalid_argument("j out of range [0, m]");
  const std::uint64_t q = field->q(), p = field->p();
  std::uint64_t sum = 0;
  for (std::uint64_t i = j; i <= gs.m; ++i) {
    sum = (sum + binomial_mod_p(i * (q - 1), j * (q - 1), p)) % p;
  }
  return prime_subfield_of(field)->element_from_value(sum);
}

FieldElement binomial_column_sum_expected(const FieldPtr& field, std::uint64_t j) {
  const GeneratorSpecs gs(field);
  if (j > gs.m) throw std::invalid_argument("j out of range [0, m]");
  return prime_subfield_of(field)->element_from_value(j <= field->q() ? 0 : 1);
}

bool translation_identity_check(const FieldPtr& field, const FieldElement& alpha) {
  require_same_field(field, alpha.field());
  const std::uint64_t q = field->q();
  const Polynomial shifted = Polynomial::x(field) + Polynomial::constant(alpha);
  Polynomial lhs = Polynomial::zero(field);
  Polynomial rhs = Polynomial::zero(field);
  for (std::uint64_t i = 0; i <= q; ++i) {
    lhs = lhs + shifted.pow(i * (q - 1));
    rhs = rhs + Polynomial::monomial(field->one(), i * (q - 1));
  }
  return lhs == rhs;
}

bool freshman_expansion_check(const FieldPtr& field, const Polynomial& a,
                              const Polynomial& b, std::uint32_t k) {
  require_same_field(field, a.field());
  require_same_field(field, b.field());
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  std::uint64_t pk = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    pk *= field->p();
    if (pk > (1u << 20)) throw std::invalid_argument("p^k too large");
  }
  const std::uint64_t top = pk - 1;
  const Polynomial lhs = (a - b).pow(top);
  // sum_{i=0}^{top} a^(top-i) b^i, folded from the innermost term outward.
  Polynomial rhs = Polynomial::one(field);
  Polynomial apow = Polynomial::one(field);
  for (std::uint64_t s = 1; s <= top; ++s) {
    apow = apow * a;
    rhs = rhs * b + apow;
  }
  return lhs == rhs;
}

bool is_invariant(const FieldPtr& field, const RationalFunction& f, bool exhaustive) {
  require_same_field(field, f.field());
  const std::vector<MoebiusMap> maps =
      exhaustive ? enumerate_group(field) : group_generators(field);
  for (const MoebiusMap& sigma : maps) {
    if (sigma.apply(f) != f) return false;
  }
  return true;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::kDirect: return "direct";
    case Method::kFactored: return "factored";
    case Method::kClosedForm: return "closed";
    case Method::kAll: return "all";
  }
  return "?";
}

bool GeneratorReport::all_passed() const {
  return degree == group_order && coprime && invariant_under_group &&
         coefficients_in_prime_field && methods_agree;
}

GeneratorReport build_report(const FieldPtr& field, Method method,
                             std::optional<bool> exhaustive) {
  const GeneratorSpecs gs(field);
  auto [g_raw, h_raw] = generator_closed_form(field);
  const RationalFunction closed(g_raw, h_raw);

  GeneratorReport report{field, method, gs.m, gs.group_order, closed,
                         0,     false,  false, false,         false,
                         {},    false};
  std::vector<RationalFunction> computed;

  switch (method) {
    case Method::kDirect:
      report.generator = f_k_direct(field, gs.m);
      computed = {report.generator, closed};
      report.methods_compared = {"direct", "closed"};
      break;
    case Method::kFactored:
      report.generator = f_k_factored(field, gs.m);
      computed = {report.generator, closed};
      report.methods_compared = {"factored", "closed"};
      break;
    case Method::kClosedForm:
      report.generator = closed;
      computed = {closed};
      report.methods_compared = {"closed"};
      break;
    case Method::kAll:
      report.generator = f_k_direct(field, gs.m);
      computed = {report.generator, f_k_factored(field, gs.m), closed};
      report.methods_compared = {"direct", "factored", "closed"};
      break;
  }

  report.methods_agree = true;
  for (const RationalFunction& r : computed) {
    if (r != computed.front()) report.methods_agree = false;
  }

  report.degree = report.generator.extension_degree();
  report.coprime = gcd(g_raw, h_raw) == Polynomial::one(field) &&
                   gcd(report.generator.num(), report.generator.den()) ==
                       Polynomial::one(field);
  report.exhaustive_invariance = exhaustive.value_or(field->q() <= 5);
  report.invariant_under_group =
      is_invariant(field, report.generator, report.exhaustive_invariance);

  report.coefficients_in_prime_field = true;
  for (const FieldElement& c : report.generator.num().coefficients()) {
    if (!c.in_prime_subfield()) report.coefficients_in_prime_field = false;
  }
  for (const FieldElement& c : report.generator.den().coefficients()) {
    if (!c.in_prime_subfield()) report.coefficients_in_prime_field = false;
  }
  return report;
}

std::vector<Verdict> report_verdicts(const GeneratorReport& report) {
  std::vector<Verdict> out;
  out.push_back({"degree_equals_group_order", report.degree == report.group_order,
                 "degree = " + std::to_string(report.degree) + ", |G| = " +
                     std::to_string(report.group_order)});
  out.push_back({"coprime", report.coprime, "gcd(num, den) = 1"});
  std::string inv_detail = report.exhaustive_invariance
                               ? "checked against the full group"
                               : "checked against the generating set";
  out.push_back({"invariant_under_group", report.invariant_under_group, inv_detail});
  out.push_back({"coefficients_in_prime_field", report.coefficients_in_prime_field,
                 "every coefficient lies in F_" + std::to_string(report.field->p())});
  std::string cmp;
  for (const std::string& name : report.methods_compared) {
    if (!cmp.empty()) cmp += ", ";
    cmp += name;
  }
  out.push_back({"methods_agree", report.methods_agree, "compared: " + cmp});
  return out;
}

}  // namespace fixedfield
