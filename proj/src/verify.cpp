#include "fixedfield/verify.hpp"

#include <random>
#include <unordered_set>

namespace fixedfield {

namespace {

struct Suite {
  explicit Suite(FieldPtr f, bool exhaustive_flag)
      : field(std::move(f)),
        gs(field),
        q(field->q()),
        exhaustive(exhaustive_flag),
        elems(field->elements()),
        rng(field->q() * 1000003ULL + 17) {}

  FieldPtr field;
  GeneratorSpecs gs;
  std::uint64_t q;
  bool exhaustive;
  std::vector<FieldElement> elems;
  std::mt19937_64 rng;
  std::vector<CheckResult> results;

  std::vector<MoebiusMap> group_cache;
  std::vector<RationalFunction> fm_cache;

  const std::vector<MoebiusMap>& group() {
    if (group_cache.empty()) group_cache = enumerate_group(field);
    return group_cache;
  }

  const RationalFunction& fm() {
    if (fm_cache.empty()) fm_cache.push_back(f_k_direct(field, gs.m));
    return fm_cache.front();
  }

  FieldElement random_element() {
    return FieldElement(field, rng() % q);
  }

  Polynomial random_poly(int max_degree, bool nonzero = false) {
    std::vector<std::uint64_t> c(rng() % (max_degree + 1) + 1);
    for (auto& v : c) v = rng() % q;
    Polynomial p(field, std::move(c));
    if (nonzero && p.is_zero()) return Polynomial::one(field);
    return p;
  }

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    results.push_back({name, pass, detail});
  }
};

void check_field_axioms(Suite& s) {
  const Field& f = *s.field;
  bool ok = true;
  auto triple = [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    ok = ok && f.add_v(f.add_v(a, b), c) == f.add_v(a, f.add_v(b, c));
    ok = ok && f.mul_v(f.mul_v(a, b), c) == f.mul_v(a, f.mul_v(b, c));
    ok = ok && f.mul_v(a, f.add_v(b, c)) == f.add_v(f.mul_v(a, b), f.mul_v(a, c));
  };
  if (s.q <= 9) {
    for (std::uint64_t a = 0; a < s.q && ok; ++a)
      for (std::uint64_t b = 0; b < s.q && ok; ++b)
        for (std::uint64_t c = 0; c < s.q && ok; ++c) triple(a, b, c);
  } else {
    for (int i = 0; i < 300 && ok; ++i) triple(s.rng() % s.q, s.rng() % s.q, s.rng() % s.q);
  }
  for (std::uint64_t a = 0; a < s.q && ok; ++a) {
    ok = ok && f.add_v(a, f.neg_v(a)) == 0;
    if (a != 0) ok = ok && f.mul_v(a, f.inv_v(a)) == 1;
    for (std::uint64_t b = 0; b < s.q && ok; ++b) {
      ok = ok && f.add_v(a, b) == f.add_v(b, a) && f.mul_v(a, b) == f.mul_v(b, a);
    }
  }
  s.add("field_axioms", ok,
        s.q <= 9 ? "associativity/distributivity exhaustive" : "randomized triples");
}

void check_frobenius_additive(Suite& s) {
  const Field& f = *s.field;
  bool ok = true;
  if (s.q <= 16) {
    for (std::uint64_t a = 0; a < s.q && ok; ++a)
      for (std::uint64_t b = 0; b < s.q && ok; ++b)
        ok = f.frob_v(f.add_v(a, b)) == f.add_v(f.frob_v(a), f.frob_v(b));
  } else {
    for (int i = 0; i < 300 && ok; ++i) {
      const std::uint64_t a = s.rng() % s.q, b = s.rng() % s.q;
      ok = f.frob_v(f.add_v(a, b)) == f.add_v(f.frob_v(a), f.frob_v(b));
    }
  }
  s.add("frobenius_additive", ok);
}

void check_fermat(Suite& s) {
  const Field& f = *s.field;
  bool ok = true;
  for (std::uint64_t a = 0; a < s.q && ok; ++a) {
    ok = f.pow_v(a, s.q) == a;
    if (a != 0) ok = ok && f.pow_v(a, s.q - 1) == 1;
  }
  s.add("fermat_little", ok, "a^q = a and a^(q-1) = 1 for all elements");
}

void check_vanishing_product(Suite& s) {
  s.add("vanishing_product", vanishing_polynomial(s.field) == x_pow_q_minus_x(s.field),
        "prod (x - a) = x^q - x");
}

void check_power_sum_formula(Suite& s) {
  bool ok = true;
  std::string detail;
  for (std::uint64_t k = 1; k <= 2 * (s.q - 1) + 1 && ok; ++k) {
    const FieldElement direct = power_sum(s.field, k);
    const FieldElement expected =
        (k % (s.q - 1) == 0) ? -s.field->one() : s.field->zero();
    ok = direct == expected;
    if (!ok) detail = "mismatch at k = " + std::to_string(k);
  }
  s.add("power_sum_formula", ok, detail);
}

void check_primitive_element(Suite& s) {
  const FieldElement y = s.field->primitive_element();
  s.add("primitive_element_order", y.multiplicative_order() == s.q - 1,
        "order(" + y.to_string() + ") = " + std::to_string(s.q - 1));
}

void check_group_order(Suite& s) {
  const auto& g = s.group();
  std::unordered_set<std::uint64_t> keys;
  for (const MoebiusMap& m : g) keys.insert(m.key());
  const bool ok = g.size() == s.gs.group_order && keys.size() == g.size();
  s.add("group_order", ok,
        "|G| = " + std::to_string(g.size()) + ", expected " +
            std::to_string(s.gs.group_order));
}

void check_moebius_degree_one(Suite& s) {
  const Field& f = *s.field;
  bool ok = true;
  for (const MoebiusMap& m : s.group()) {
    const std::uint64_t det = f.sub_v(f.mul_v(m.a().value(), m.d().value()),
                                      f.mul_v(m.b().value(), m.c().value()));
    ok = ok && det != 0 && m.to_rational().extension_degree() == 1;
    if (!ok) break;
  }
  s.add("moebius_degree_one", ok, "every map is nondegenerate of degree 1");
}

void check_group_axioms(Suite& s) {
  const auto& g = s.group();
  bool ok = true;
  std::string mode;
  const MoebiusMap id = MoebiusMap::identity(s.field);
  if (s.q <= 5) {
    mode = "closure/identity/inverses exhaustive, associativity randomized";
    std::unordered_set<std::uint64_t> keys;
    for (const MoebiusMap& m : g) keys.insert(m.key());
    for (const MoebiusMap& a : g) {
      ok = ok && (a * id == a) && (id * a == a) && (a * a.inverse() == id);
      if (!ok) break;
      for (const MoebiusMap& b : g) {
        if (!keys.count((a * b).key())) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
  } else {
    mode = "randomized";
    for (int i = 0; i < 200 && ok; ++i) {
      const MoebiusMap& a = g[s.rng() % g.size()];
      const MoebiusMap& b = g[s.rng() % g.size()];
      ok = (a * id == a) && (a * a.inverse() == id);
      bool found = false;
      const MoebiusMap ab = a * b;
      for (const MoebiusMap& m : g) {
        if (m == ab) {
          found = true;
          break;
        }
      }
      ok = ok && found;
    }
  }
  for (int i = 0; i < 60 && ok; ++i) {
    const MoebiusMap& a = g[s.rng() % g.size()];
    const MoebiusMap& b = g[s.rng() % g.size()];
    const MoebiusMap& c = g[s.rng() % g.size()];
    ok = ((a * b) * c) == (a * (b * c));
  }
  s.add("group_axioms", ok, mode);
}

void check_generator_closure(Suite& s) {
  if (s.gs.group_order > 250000) {
    s.add("generator_closure", true, "skipped above desk scale");
    return;
  }
  const auto closure = generated_closure(group_generators(s.field));
  std::unordered_set<std::uint64_t> a, b;
  for (const MoebiusMap& m : closure) a.insert(m.key());
  for (const MoebiusMap& m : s.group()) b.insert(m.key());
  s.add("generator_closure", a == b,
        std::to_string(group_generators(s.field).size()) + " generators close to " +
            std::to_string(closure.size()) + " elements");
}

void check_action_homomorphism(Suite& s) {
  const auto& g = s.group();
  bool ok = true;
  for (int i = 0; i < 20 && ok; ++i) {
    const MoebiusMap& sigma = g[s.rng() % g.size()];
    const MoebiusMap& tau = g[s.rng() % g.size()];
    const RationalFunction f(s.random_poly(3), s.random_poly(3, /*nonzero=*/true));
    ok = (sigma * tau).apply(f) == sigma.apply(tau.apply(f));
  }
  s.add("action_homomorphism", ok, "apply(s*t, f) = apply(s, apply(t, f))");
}

void check_affine_sum_factorization(Suite& s) {
  const Polynomial x = Polynomial::x(s.field);
  bool ok = true;
  for (std::uint64_t k = 1; k <= 10 && ok; ++k) {
    Polynomial lhs = Polynomial::zero(s.field);
    for (const FieldElement& a : s.elems) {
      if (a.is_zero()) continue;
      for (const FieldElement& b : s.elems) {
        lhs = lhs + (Polynomial::monomial(a, 1) + Polynomial::constant(b)).pow(k);
      }
    }
    FieldElement scal = s.field->zero();
    for (const FieldElement& a : s.elems) scal = scal + a.pow(k);
    Polynomial rhs = Polynomial::zero(s.field);
    for (const FieldElement& b : s.elems) {
      rhs = rhs + (x + Polynomial::constant(b)).pow(k);
    }
    ok = lhs == rhs * scal;
  }
  s.add("affine_sum_factorization", ok,
        "sum over a!=0,b of (ax+b)^k = (sum a^k)(sum (x+b)^k), k <= 10");
}

void check_translation_identity(Suite& s) {
  bool ok = true;
  for (const FieldElement& alpha : s.elems) {
    ok = ok && translation_identity_check(s.field, alpha);
  }
  s.add("translation_identity", ok, "all shifts alpha");
}

void check_linear_quotient_identity(Suite& s) {
  const Polynomial x = Polynomial::x(s.field);
  const Polynomial xq = x_pow_q_minus_x(s.field);
  bool ok = true;
  for (const FieldElement& c : s.elems) {
    const Polynomial lin = x - Polynomial::constant(c);
    const Polynomial lhs = xq.exact_div(lin);
    const Polynomial rhs = lin.pow(s.q - 1) - Polynomial::one(s.field);
    ok = ok && lhs == rhs;
  }
  s.add("linear_quotient_identity", ok, "(x^q-x)/(x-c) = (x-c)^(q-1) - 1");
}

void check_power_sum_collapse(Suite& s) {
  const Polynomial x = Polynomial::x(s.field);
  Polynomial lhs = Polynomial::one(s.field);
  for (const FieldElement& b : s.elems) {
    lhs = lhs + (x - Polynomial::constant(b)).pow(s.gs.m);
  }
  const Polynomial rhs = -x_pow_q_minus_x(s.field).pow(s.q - 1);
  s.add("power_sum_collapse", lhs == rhs,
        "1 + sum (x-b)^m = -(x^q-x)^(q-1)");
}

void check_freshman_expansion(Suite& s) {
  bool ok = true;
  const Polynomial a0 = s.random_poly(4);
  ok = freshman_expansion_check(s.field, a0, a0, 1);
  for (int i = 0; i < 30 && ok; ++i) {
    const Polynomial a = s.random_poly(4);
    const Polynomial b = s.random_poly(4);
    const std::uint32_t k = 1 + static_cast<std::uint32_t>(s.rng() % 2);
    ok = freshman_expansion_check(s.field, a, b, k);
  }
  s.add("freshman_expansion", ok, "(A-B)^(p^k-1) expands to the homogeneous sum");
}

void check_binomial_column_sums(Suite& s) {
  bool ok = true;
  std::string detail;
  for (std::uint64_t j = 0; j <= s.gs.m && ok; ++j) {
    ok = binomial_column_sum(s.field, j) == binomial_column_sum_expected(s.field, j);
    if (!ok) detail = "mismatch at j = " + std::to_string(j);
  }
  s.add("binomial_column_sums", ok, detail);
}

void check_cleared_numerator_degree(Suite& s) {
  bool ok = true;
  std::string detail;
  for (std::uint64_t k : {s.q - 1, 2 * (s.q - 1), s.gs.m}) {
    const Polynomial g = cleared_numerator(s.field, k);
    const std::uint64_t stated = k * (s.q + 1);
    const bool pass = g.degree() >= 0 && static_cast<std::uint64_t>(g.degree()) == stated;
    if (!detail.empty()) detail += "; ";
    detail += "k=" + std::to_string(k) + ": deg=" + std::to_string(g.degree()) +
              " vs k(q+1)=" + std::to_string(stated);
    ok = ok && pass;
  }
  s.add("cleared_numerator_degree", ok, detail);
}

void check_factored_direct_agreement(Suite& s) {
  bool ok = true;
  std::string detail;
  for (std::uint64_t k : {s.q - 1, 2 * (s.q - 1), s.gs.m}) {
    const RationalFunction direct =
        (k == s.gs.m) ? s.fm() : f_k_direct(s.field, k);
    ok = ok && f_k_factored(s.field, k) == direct;
    if (!ok && detail.empty()) detail = "mismatch at k = " + std::to_string(k);
  }
  s.add("factored_direct_agreement", ok, detail);
}

void check_generator_fraction(Suite& s) {
  std::string diag;
  const bool ok = generator_fraction_check(s.field, &diag);
  s.add("generator_fraction", ok, diag);
}

void check_closed_form_agreement(Suite& s) {
  auto [g, h] = generator_closed_form(s.field);
  const bool coprime = gcd(g, h) == Polynomial::one(s.field);
  const bool degree_ok =
      g.degree() >= 0 && static_cast<std::uint64_t>(g.degree()) == s.gs.group_order;
  const bool agree = RationalFunction(g, h) == s.fm();
  s.add("closed_form_agreement", coprime && degree_ok && agree,
        std::string("gcd(g,h)=1: ") + (coprime ? "yes" : "no") +
            ", deg g = " + std::to_string(g.degree()) +
            ", matches direct sum: " + (agree ? "yes" : "no"));
}

void check_generator_degree(Suite& s) {
  const std::uint64_t deg = s.fm().extension_degree();
  s.add("generator_degree", deg == s.gs.group_order,
        "[F(x):F(f_m)] = " + std::to_string(deg));
}

void check_generator_invariance(Suite& s) {
  const bool full = s.exhaustive || s.q <= 5;
  s.add("generator_invariance", is_invariant(s.field, s.fm(), full),
        full ? "full group" : "generating set");
}

void check_prime_subfield_coefficients(Suite& s) {
  bool ok = true;
  for (const FieldElement& c : s.fm().num().coefficients()) ok = ok && c.in_prime_subfield();
  for (const FieldElement& c : s.fm().den().coefficients()) ok = ok && c.in_prime_subfield();
  s.add("prime_subfield_coefficients", ok,
        "f_m has coefficients in F_" + std::to_string(s.field->p()));
}

}  // namespace

std::vector<CheckResult> run_verification(const FieldPtr& field, bool exhaustive) {
  Suite s(field, exhaustive);
  check_field_axioms(s);
  check_frobenius_additive(s);
  check_fermat(s);
  check_vanishing_product(s);
  check_power_sum_formula(s);
  check_primitive_element(s);
  check_group_order(s);
  check_moebius_degree_one(s);
  check_group_axioms(s);
  check_generator_closure(s);
  check_action_homomorphism(s);
  check_affine_sum_factorization(s);
  check_translation_identity(s);
  check_linear_quotient_identity(s);
  check_power_sum_collapse(s);
  check_freshman_expansion(s);
  check_binomial_column_sums(s);
  check_cleared_numerator_degree(s);
  check_factored_direct_agreement(s);
  check_generator_fraction(s);
  check_closed_form_agreement(s);
  check_generator_degree(s);
  check_generator_invariance(s);
  check_prime_subfield_coefficients(s);
  return s.results;
}

}  // namespace fixedfield
