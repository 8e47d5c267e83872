"""Exact arithmetic in F_q(x) and the fixed field of its automorphism group."""

from ._core import (
    CheckResult,
    Field,
    FieldElement,
    GeneratorReport,
    Method,
    MoebiusMap,
    Polynomial,
    RationalFunction,
    binomial_column_sum,
    binomial_mod_p,
    build_report,
    cleared_numerator,
    enumerate_group,
    f_k_direct,
    f_k_factored,
    gcd,
    generated_closure,
    generator_closed_form,
    group_generators,
    is_invariant,
    make_field,
    power_sum,
    report_json,
    run_verification,
    translation_identity_check,
    vanishing_polynomial,
)

__all__ = [
    "CheckResult",
    "Field",
    "FieldElement",
    "GeneratorReport",
    "Method",
    "MoebiusMap",
    "Polynomial",
    "RationalFunction",
    "binomial_column_sum",
    "binomial_mod_p",
    "build_report",
    "cleared_numerator",
    "enumerate_group",
    "f_k_direct",
    "f_k_factored",
    "gcd",
    "generated_closure",
    "generator_closed_form",
    "group_generators",
    "is_invariant",
    "make_field",
    "power_sum",
    "report_json",
    "run_verification",
    "translation_identity_check",
    "vanishing_polynomial",
]

__version__ = "0.1.0"
