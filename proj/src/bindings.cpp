#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fixedfield/serialize.hpp"

namespace py = pybind11;
using namespace fixedfield;

namespace {

std::shared_ptr<Field> make_field_py(std::uint64_t p, std::uint32_t n,
                                     std::optional<std::vector<std::uint64_t>> modulus) {
  return std::const_pointer_cast<Field>(Field::make(p, n, std::move(modulus)));
}

FieldPtr as_const(const std::shared_ptr<Field>& f) { return f; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic in F_q(x) and the fixed field of its automorphism group";

  py::class_<Field, std::shared_ptr<Field>>(m, "Field")
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("n", &Field::n)
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("modulus", [](const Field& f) { return f.modulus(); })
      .def("zero", &Field::zero)
      .def("one", &Field::one)
      .def("element", [](const std::shared_ptr<Field>& f, std::uint64_t v) {
        return f->element_from_value(v);
      })
      .def("element_from_digits",
           [](const std::shared_ptr<Field>& f, const std::vector<std::uint64_t>& d) {
             return f->element_from_digits(d);
           })
      .def("elements", &Field::elements)
      .def("primitive_element", &Field::primitive_element)
      .def("__eq__", [](const Field& a, const Field& b) { return a.same(b); })
      .def("__repr__", &Field::to_string);

  py::class_<FieldElement>(m, "FieldElement")
      .def_property_readonly("digits", &FieldElement::digits)
      .def_property_readonly("value", &FieldElement::value)
      .def("is_zero", &FieldElement::is_zero)
      .def("in_prime_subfield", &FieldElement::in_prime_subfield)
      .def("inverse", &FieldElement::inverse)
      .def("pow", &FieldElement::pow)
      .def("frobenius", &FieldElement::frobenius)
      .def("multiplicative_order", &FieldElement::multiplicative_order)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__repr__", &FieldElement::to_string);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::shared_ptr<Field>& f, std::vector<std::uint64_t> c) {
             return Polynomial(as_const(f), std::move(c));
           }),
           py::arg("field"), py::arg("coefficients"))
      .def_static("x", [](const std::shared_ptr<Field>& f) { return Polynomial::x(f); })
      .def_static("one", [](const std::shared_ptr<Field>& f) { return Polynomial::one(f); })
      .def_static("zero", [](const std::shared_ptr<Field>& f) { return Polynomial::zero(f); })
      .def_static("monomial", &Polynomial::monomial)
      .def_property_readonly("degree", &Polynomial::degree)
      .def("coeff", &Polynomial::coeff)
      .def("coefficients", &Polynomial::coefficients)
      .def("is_zero", &Polynomial::is_zero)
      .def("pow", &Polynomial::pow)
      .def("divrem", &Polynomial::divrem)
      .def("monic", &Polynomial::monic)
      .def("eval", &Polynomial::eval)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__repr__", &Polynomial::to_string);

  m.def("gcd", &gcd, "monic polynomial gcd");
  m.def("vanishing_polynomial", [](const std::shared_ptr<Field>& f) {
    return vanishing_polynomial(f);
  });

  py::class_<RationalFunction>(m, "RationalFunction")
      .def(py::init<Polynomial, Polynomial>(), py::arg("num"), py::arg("den"))
      .def(py::init<Polynomial>(), py::arg("num"))
      .def_static("x", [](const std::shared_ptr<Field>& f) { return RationalFunction::x(f); })
      .def_property_readonly("num", &RationalFunction::num)
      .def_property_readonly("den", &RationalFunction::den)
      .def("is_constant", &RationalFunction::is_constant)
      .def("extension_degree", &RationalFunction::extension_degree)
      .def("inverse", &RationalFunction::inverse)
      .def("pow", &RationalFunction::pow)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__repr__", &RationalFunction::to_string);

  py::class_<MoebiusMap>(m, "MoebiusMap")
      .def(py::init<const FieldElement&, const FieldElement&, const FieldElement&,
                    const FieldElement&>())
      .def_static("identity",
                  [](const std::shared_ptr<Field>& f) { return MoebiusMap::identity(f); })
      .def_property_readonly("a", &MoebiusMap::a)
      .def_property_readonly("b", &MoebiusMap::b)
      .def_property_readonly("c", &MoebiusMap::c)
      .def_property_readonly("d", &MoebiusMap::d)
      .def("inverse", &MoebiusMap::inverse)
      .def("apply", &MoebiusMap::apply)
      .def("to_rational", &MoebiusMap::to_rational)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def("__repr__", &MoebiusMap::to_string);

  m.def("make_field", &make_field_py, py::arg("p"), py::arg("n") = 1,
        py::arg("modulus") = std::nullopt,
        "Construct F_{p^n}; the modulus defaults to the lexicographically "
        "smallest monic irreducible polynomial.");
  m.def("enumerate_group",
        [](const std::shared_ptr<Field>& f) { return enumerate_group(f); });
  m.def("group_generators",
        [](const std::shared_ptr<Field>& f) { return group_generators(f); });
  m.def("generated_closure", &generated_closure);

  py::enum_<Method>(m, "Method")
      .value("DIRECT", Method::kDirect)
      .value("FACTORED", Method::kFactored)
      .value("CLOSED_FORM", Method::kClosedForm)
      .value("ALL", Method::kAll);

  py::class_<GeneratorReport>(m, "GeneratorReport")
      .def_readonly("m", &GeneratorReport::m)
      .def_readonly("group_order", &GeneratorReport::group_order)
      .def_readonly("generator", &GeneratorReport::generator)
      .def_readonly("degree", &GeneratorReport::degree)
      .def_readonly("coprime", &GeneratorReport::coprime)
      .def_readonly("invariant_under_group", &GeneratorReport::invariant_under_group)
      .def_readonly("coefficients_in_prime_field",
                    &GeneratorReport::coefficients_in_prime_field)
      .def_readonly("methods_agree", &GeneratorReport::methods_agree)
      .def_readonly("methods_compared", &GeneratorReport::methods_compared)
      .def("all_passed", &GeneratorReport::all_passed);

  py::class_<CheckResult>(m, "CheckResult")
      .def_readonly("name", &CheckResult::name)
      .def_readonly("pass_", &CheckResult::pass)
      .def_readonly("detail", &CheckResult::detail)
      .def("__repr__", [](const CheckResult& c) {
        return "<" + c.name + ": " + (c.pass ? "pass" : "FAIL") + ">";
      });

  m.def("power_sum", [](const std::shared_ptr<Field>& f, std::uint64_t k) {
    return power_sum(f, k);
  });
  m.def("f_k_direct", [](const std::shared_ptr<Field>& f, std::uint64_t k) {
    return f_k_direct(f, k);
  });
  m.def("f_k_factored", [](const std::shared_ptr<Field>& f, std::uint64_t k) {
    return f_k_factored(f, k);
  });
  m.def("generator_closed_form", [](const std::shared_ptr<Field>& f) {
    return generator_closed_form(f);
  });
  m.def("cleared_numerator", [](const std::shared_ptr<Field>& f, std::uint64_t k) {
    return cleared_numerator(f, k);
  });
  m.def("binomial_mod_p", &binomial_mod_p);
  m.def("binomial_column_sum", [](const std::shared_ptr<Field>& f, std::uint64_t j) {
    return binomial_column_sum(f, j);
  });
  m.def("translation_identity_check",
        [](const std::shared_ptr<Field>& f, const FieldElement& alpha) {
          return translation_identity_check(f, alpha);
        });
  m.def("is_invariant",
        [](const std::shared_ptr<Field>& f, const RationalFunction& r, bool exhaustive) {
          return is_invariant(f, r, exhaustive);
        },
        py::arg("field"), py::arg("f"), py::arg("exhaustive") = false);
  m.def("build_report",
        [](const std::shared_ptr<Field>& f, Method method, std::optional<bool> exhaustive) {
          return build_report(f, method, exhaustive);
        },
        py::arg("field"), py::arg("method") = Method::kAll,
        py::arg("exhaustive") = std::nullopt);
  m.def("run_verification",
        [](const std::shared_ptr<Field>& f, bool exhaustive) {
          return run_verification(f, exhaustive);
        },
        py::arg("field"), py::arg("exhaustive") = false);
  m.def("report_json", [](const GeneratorReport& r) { return report_to_json(r).dump(); });
}
