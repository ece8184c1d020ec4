#pragma once

#include <string>
#include <vector>

namespace atomspec::verify {

struct criterion_result {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The acceptance suite.  Each criterion is self-contained, deterministic
// (fixed RNG seeds), and reports a one-line detail string.
criterion_result adjunction_suite();        // round trips on all small models
criterion_result kolmogorov_suite();        // quotient properties
criterion_result dimension_suite();         // stage = chain dims on posets
criterion_result counterexample_fixed();    // the graded-module model values
criterion_result minimal_atom_fixed();      // minimal-atom fixed points
criterion_result theorem_suite();           // verifier verdicts + completion
criterion_result snf_suite();               // random matrices vs minor gcds
criterion_result monoform_suite();          // classify vs exhaustive check
criterion_result cross_module_suite();      // algebra vs topology agreement
criterion_result zero_module_convention();  // dimension of the zero module

// scope: "all", "finite", "symbolic", or "ring".
std::vector<criterion_result> run(const std::string& scope);

}  // namespace atomspec::verify
