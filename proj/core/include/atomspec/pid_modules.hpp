#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "atomspec/filtration.hpp"
#include "atomspec/snf.hpp"
#include "atomspec/spectrum.hpp"

namespace atomspec::pid {

// Cokernel presentation: generators g_1..g_n modulo the column span of the
// relation matrix (one column per relator).
template <typename Ring>
struct presented_module {
  Ring ring;
  std::size_t generators = 0;
  matrix<Ring> relations;

  static presented_module make(Ring ring, std::size_t generators,
                               std::vector<std::vector<typename Ring::elem>> relator_columns);
};

template <typename Ring>
struct decomposition {
  std::size_t free_rank = 0;
  // Non-unit invariant factors, canonical associates, divisibility chain.
  std::vector<typename Ring::elem> torsion;
};

template <typename Ring>
decomposition<Ring> decompose(const presented_module<Ring>& m);

// The spectrum of the ring as a tail space: a generic point "(0)" whose only
// open neighborhood is everything, plus one indexed point per maximal ideal,
// enumerated in the ring's canonical prime order and individually open.
// display_bound controls how many index labels ("(2)", "(x+1)", ...) are
// attached for rendering; membership and analysis are independent of it.
template <typename Ring>
spectrum::atom_space spec_model(const Ring& ring, std::size_t display_bound = 8);

inline const char* generic_point_name() { return "(0)"; }

struct module_analysis {
  std::string ring_name;
  std::size_t generators = 0;
  std::size_t free_rank = 0;
  std::vector<std::string> torsion;  // non-unit invariant factors, printed
  bool zero = false;

  long gkdim = -1;
  long kdim = -1;
  filtration::dim_value dim = filtration::dim_value::finite(-1);
  filtration::dim_value adim = filtration::dim_value::finite(-1);

  // Point sets in spec-model coordinates plus printed forms ("all", "{}",
  // "{(2), (3)}").
  tailspace::symbolic_set asupp, aass, amin, lambda;
  std::string asupp_str, aass_str, amin_str, lambda_str;

  bool simple = false;
  bool monoform = false;
  bool compressible = false;
  std::optional<long> critical;         // 0, 1, or nullopt for "none"
  std::optional<long> atomic_critical;  // coincides with critical here
};

std::string critical_str(const std::optional<long>& c);

template <typename Ring>
module_analysis analyze(const presented_module<Ring>& m, std::size_t display_bound = 8);

// Largest submodule whose support avoids the closure of alpha; nullopt means
// the generic point (0).  Computed from the decomposition: the full torsion
// part for (0), the torsion prime to p for alpha = (p).
template <typename Ring>
presented_module<Ring> t_alpha(const presented_module<Ring>& m,
                               const std::optional<typename Ring::elem>& alpha);

// {alpha : t_alpha(M) = 0} in spec-model coordinates.
template <typename Ring>
tailspace::symbolic_set lambda_m(const presented_module<Ring>& m);

// Exhaustive monoform check for finite torsion modules over the integers:
// walks the subgroup lattice breadth-first from 0, and for each nonzero
// submodule N asks whether some nonzero cyclic submodule of M embeds into
// M/N (decided by invariant factors); any hit is a witness against
// monoformity.  Exits on the first witness.
bool monoform_bruteforce(const presented_module<integer_ring>& m, std::size_t bound = 256);

extern template struct presented_module<integer_ring>;
extern template struct presented_module<fp_poly_ring>;
extern template decomposition<integer_ring> decompose(const presented_module<integer_ring>&);
extern template decomposition<fp_poly_ring> decompose(const presented_module<fp_poly_ring>&);
extern template spectrum::atom_space spec_model(const integer_ring&, std::size_t);
extern template spectrum::atom_space spec_model(const fp_poly_ring&, std::size_t);
extern template module_analysis analyze(const presented_module<integer_ring>&, std::size_t);
extern template module_analysis analyze(const presented_module<fp_poly_ring>&, std::size_t);
extern template presented_module<integer_ring> t_alpha(
    const presented_module<integer_ring>&, const std::optional<integer_ring::elem>&);
extern template presented_module<fp_poly_ring> t_alpha(const presented_module<fp_poly_ring>&,
                                                       const std::optional<fp_poly_ring::elem>&);
extern template tailspace::symbolic_set lambda_m(const presented_module<integer_ring>&);
extern template tailspace::symbolic_set lambda_m(const presented_module<fp_poly_ring>&);

}  // namespace atomspec::pid
