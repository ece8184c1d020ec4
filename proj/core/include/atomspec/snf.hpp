#pragma once

#include <cstddef>
#include <vector>

#include "atomspec/errors.hpp"
#include "atomspec/pid_ring.hpp"

namespace atomspec::pid {

template <typename Ring>
struct matrix {
  using elem = typename Ring::elem;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<elem> a;  // row-major

  matrix() = default;
  matrix(std::size_t r, std::size_t c, elem fill) : rows(r), cols(c), a(r * c, fill) {}

  elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const elem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static matrix identity(const Ring& ring, std::size_t n) {
    matrix m(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
    return m;
  }

  bool operator==(const matrix&) const = default;
};

template <typename Ring>
matrix<Ring> mat_mul(const Ring& ring, const matrix<Ring>& x, const matrix<Ring>& y);

template <typename Ring>
typename Ring::elem det(const Ring& ring, const matrix<Ring>& m);

// left * input * right == diagonal, with the invariant factors (the nonzero
// diagonal, units included) forming a divisibility chain.  free_rank is the
// row count minus the rank: the free rank of the module the columns present.
template <typename Ring>
struct snf_result {
  std::vector<typename Ring::elem> invariant_factors;
  std::size_t free_rank = 0;
  matrix<Ring> left, right, diagonal;
};

// Deterministic Smith normal form: pivots are the nonzero entries of least
// Euclidean size, ties broken row-major; both transforms are products of
// elementary operations, so their determinants are units.
template <typename Ring>
snf_result<Ring> smith_normal_form(const Ring& ring, const matrix<Ring>& input);

extern template struct matrix<integer_ring>;
extern template struct matrix<fp_poly_ring>;
extern template matrix<integer_ring> mat_mul(const integer_ring&, const matrix<integer_ring>&,
                                             const matrix<integer_ring>&);
extern template matrix<fp_poly_ring> mat_mul(const fp_poly_ring&, const matrix<fp_poly_ring>&,
                                             const matrix<fp_poly_ring>&);
extern template integer_ring::elem det(const integer_ring&, const matrix<integer_ring>&);
extern template fp_poly_ring::elem det(const fp_poly_ring&, const matrix<fp_poly_ring>&);
extern template snf_result<integer_ring> smith_normal_form(const integer_ring&,
                                                           const matrix<integer_ring>&);
extern template snf_result<fp_poly_ring> smith_normal_form(const fp_poly_ring&,
                                                           const matrix<fp_poly_ring>&);

}  // namespace atomspec::pid
