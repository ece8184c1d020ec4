#include "atomspec/snf.hpp"

#include <optional>
#include <utility>

namespace atomspec::pid {

template <typename Ring>
matrix<Ring> mat_mul(const Ring& ring, const matrix<Ring>& x, const matrix<Ring>& y) {
  if (x.cols != y.rows) throw input_error("matrix size mismatch in product");
  matrix<Ring> r(x.rows, y.cols, ring.zero());
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (ring.is_zero(x.at(i, k))) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r.at(i, j) = ring.add(r.at(i, j), ring.mul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

template <typename Ring>
typename Ring::elem det(const Ring& ring, const matrix<Ring>& m) {
  if (m.rows != m.cols) throw input_error("determinant of a non-square matrix");
  const std::size_t n = m.rows;
  if (n > 16) throw input_error("determinant size cap exceeded");
  if (n == 0) return ring.one();
  // Subset DP over chosen columns, one row at a time, with inversion parity.
  std::vector<typename Ring::elem> dp(std::size_t(1) << n, ring.zero());
  dp[0] = ring.one();
  for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
    if (ring.is_zero(dp[mask])) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    for (std::size_t j = 0; j < n; ++j) {
      if (mask >> j & 1u) continue;
      if (ring.is_zero(m.at(row, j))) continue;
      auto term = ring.mul(dp[mask], m.at(row, j));
      if (__builtin_popcountll(mask >> (j + 1)) & 1) term = ring.neg(term);
      dp[mask | std::size_t(1) << j] = ring.add(dp[mask | std::size_t(1) << j], term);
    }
  }
  return dp.back();
}

template <typename Ring>
snf_result<Ring> smith_normal_form(const Ring& ring, const matrix<Ring>& input) {
  const std::size_t n = input.rows;
  const std::size_t m = input.cols;
  matrix<Ring> a = input;
  matrix<Ring> u = matrix<Ring>::identity(ring, n);
  matrix<Ring> v = matrix<Ring>::identity(ring, m);

  auto row_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < m; ++k) std::swap(a.at(i, k), a.at(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(u.at(i, k), u.at(j, k));
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a.at(k, i), a.at(k, j));
    for (std::size_t k = 0; k < m; ++k) std::swap(v.at(k, i), v.at(k, j));
  };
  // row i -= q * row j
  auto row_sub = [&](std::size_t i, std::size_t j, const typename Ring::elem& q) {
    for (std::size_t k = 0; k < m; ++k) a.at(i, k) = ring.sub(a.at(i, k), ring.mul(q, a.at(j, k)));
    for (std::size_t k = 0; k < n; ++k) u.at(i, k) = ring.sub(u.at(i, k), ring.mul(q, u.at(j, k)));
  };
  // col i -= q * col j
  auto col_sub = [&](std::size_t i, std::size_t j, const typename Ring::elem& q) {
    for (std::size_t k = 0; k < n; ++k) a.at(k, i) = ring.sub(a.at(k, i), ring.mul(q, a.at(k, j)));
    for (std::size_t k = 0; k < m; ++k) v.at(k, i) = ring.sub(v.at(k, i), ring.mul(q, v.at(k, j)));
  };
  auto row_add = [&](std::size_t i, std::size_t j) { row_sub(i, j, ring.neg(ring.one())); };

  std::size_t t = 0;
  while (t < n && t < m) {
    bool settled = false;
    while (!settled) {
      // Least Euclidean size wins, ties row-major.
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < m; ++j) {
          if (ring.is_zero(a.at(i, j))) continue;
          if (!piv || ring.smaller(a.at(i, j), a.at(piv->first, piv->second))) piv = {{i, j}};
        }
      if (!piv) {
        t = std::min(n, m);  // the rest of the matrix is zero
        settled = true;
        break;
      }
      if (piv->first != t) row_swap(piv->first, t);
      if (piv->second != t) col_swap(piv->second, t);

      bool restart = false;
      for (std::size_t i = t + 1; i < n && !restart; ++i) {
        if (ring.is_zero(a.at(i, t))) continue;
        auto [q, r] = ring.divmod(a.at(i, t), a.at(t, t));
        row_sub(i, t, q);
        restart = !ring.is_zero(r);  // a smaller entry appeared; re-pivot
      }
      for (std::size_t j = t + 1; j < m && !restart; ++j) {
        if (ring.is_zero(a.at(t, j))) continue;
        auto [q, r] = ring.divmod(a.at(t, j), a.at(t, t));
        col_sub(j, t, q);
        restart = !ring.is_zero(r);
      }
      if (restart) continue;

      for (std::size_t i = t + 1; i < n && !restart; ++i)
        for (std::size_t j = t + 1; j < m && !restart; ++j) {
          if (ring.is_zero(a.at(i, j))) continue;
          auto [q, r] = ring.divmod(a.at(i, j), a.at(t, t));
          if (!ring.is_zero(r)) {
            row_add(t, i);  // pulls the offending row up; the next pivot shrinks
            restart = true;
          }
        }
      if (restart) continue;
      settled = true;
      ++t;
    }
    if (t == std::min(n, m)) break;
  }

  // Canonical associates on the diagonal, folded into the left transform.
  for (std::size_t k = 0; k < std::min(n, m); ++k) {
    if (ring.is_zero(a.at(k, k))) continue;
    const auto unit = ring.canonical_unit(a.at(k, k));
    if (unit == ring.one()) continue;
    for (std::size_t j = 0; j < m; ++j) a.at(k, j) = ring.mul(unit, a.at(k, j));
    for (std::size_t j = 0; j < n; ++j) u.at(k, j) = ring.mul(unit, u.at(k, j));
  }

  snf_result<Ring> out;
  for (std::size_t k = 0; k < std::min(n, m); ++k) {
    if (!ring.is_zero(a.at(k, k))) out.invariant_factors.push_back(a.at(k, k));
  }
  out.free_rank = n - out.invariant_factors.size();
  out.left = u;
  out.right = v;
  out.diagonal = a;

  if (!(mat_mul(ring, mat_mul(ring, u, input), v) == a)) {
    throw internal_error("transform product does not reproduce the diagonal");
  }
  for (std::size_t k = 0; k + 1 < out.invariant_factors.size(); ++k) {
    if (!ring.is_zero(
            ring.divmod(out.invariant_factors[k + 1], out.invariant_factors[k]).second)) {
      throw internal_error("invariant factors do not form a divisibility chain");
    }
  }
  return out;
}

template struct matrix<integer_ring>;
template struct matrix<fp_poly_ring>;
template matrix<integer_ring> mat_mul(const integer_ring&, const matrix<integer_ring>&,
                                      const matrix<integer_ring>&);
template matrix<fp_poly_ring> mat_mul(const fp_poly_ring&, const matrix<fp_poly_ring>&,
                                      const matrix<fp_poly_ring>&);
template integer_ring::elem det(const integer_ring&, const matrix<integer_ring>&);
template fp_poly_ring::elem det(const fp_poly_ring&, const matrix<fp_poly_ring>&);
template snf_result<integer_ring> smith_normal_form(const integer_ring&,
                                                    const matrix<integer_ring>&);
template snf_result<fp_poly_ring> smith_normal_form(const fp_poly_ring&,
                                                    const matrix<fp_poly_ring>&);

}  // namespace atomspec::pid
