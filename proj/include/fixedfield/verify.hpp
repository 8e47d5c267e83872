#ifndef FIXEDFIELD_VERIFY_HPP
#define FIXEDFIELD_VERIFY_HPP

#include <string>
#include <vector>

#include "fixedfield/fixed_field.hpp"

namespace fixedfield {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Runs the full property suite for one field: field axioms, Frobenius and
/// Fermat identities, power sums, group structure, the polynomial
/// identities behind the closed form, and the generator checks.
/// Exhaustive sweeps are bounded internally; `exhaustive` forces the
/// full-group invariance check regardless of q.
std::vector<CheckResult> run_verification(const FieldPtr& field, bool exhaustive = false);

}  // namespace fixedfield

#endif
