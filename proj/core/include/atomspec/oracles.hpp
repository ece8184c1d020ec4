#pragma once

#include <cstddef>
#include <vector>

#include "atomspec/finspace.hpp"
#include "atomspec/order.hpp"
#include "atomspec/snf.hpp"

// Brute-force reference implementations kept deliberately separate from the
// production algorithms so tests can cross-check the two.
namespace atomspec::oracles {

// Every reflexive-transitive relation on n labeled points (a, b, c, ...),
// found by filtering all off-diagonal bit patterns.  Counts: 1, 1, 4, 29,
// 355, 6942 for n = 0..5.
std::vector<order::preorder> all_preorders(std::size_t n);

// The antisymmetric ones: 1, 1, 3, 19, 219, 4231 for n = 0..5.
std::vector<order::preorder> all_posets(std::size_t n);

// Every distinct topology on n labeled points, generated from every family
// of subsets taken as a subbasis (2^(2^n) families; n <= 4).
std::vector<finspace::fin_space> all_topologies(std::size_t n);

// Longest strict ascending chain from i, by plain depth-first enumeration of
// all chains (no memoization; n is tiny).
long up_height(const order::preorder& p, std::size_t i);

// Invariant factors (units included) through the minor-gcd identity:
// d_k = gcd(k-minors) / gcd((k-1)-minors), stopping at the rank.
template <typename Ring>
std::vector<typename Ring::elem> minor_gcd_factors(const Ring& ring,
                                                   const pid::matrix<Ring>& m);

extern template std::vector<pid::integer_ring::elem> minor_gcd_factors(
    const pid::integer_ring&, const pid::matrix<pid::integer_ring>&);
extern template std::vector<pid::fp_poly_ring::elem> minor_gcd_factors(
    const pid::fp_poly_ring&, const pid::matrix<pid::fp_poly_ring>&);

}  // namespace atomspec::oracles
