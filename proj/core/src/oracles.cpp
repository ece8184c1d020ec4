#include "atomspec/oracles.hpp"

#include <algorithm>
#include <set>

namespace atomspec::oracles {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  if (n > 8) throw input_error("oracle enumerations support at most 8 points");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

}  // namespace

std::vector<order::preorder> all_preorders(std::size_t n) {
  const auto names = default_names(n);
  std::vector<order::preorder> out;
  const std::size_t offdiag = n * n - n;
  if (n > 5) throw input_error("preorder enumeration supports at most 5 points");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);

  std::vector<bool> rel(n * n);
  for (std::size_t mask = 0; mask < (std::size_t(1) << offdiag); ++mask) {
    std::fill(rel.begin(), rel.end(), false);
    for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = true;
    for (std::size_t b = 0; b < offdiag; ++b) {
      if (mask >> b & 1u) rel[slots[b].first * n + slots[b].second] = true;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j) {
        if (!rel[i * n + j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (rel[j * n + k] && !rel[i * n + k]) {
            transitive = false;
            break;
          }
        }
      }
    if (transitive) out.push_back(order::preorder::from_matrix(names, rel));
  }
  return out;
}

std::vector<order::preorder> all_posets(std::size_t n) {
  auto pre = all_preorders(n);
  std::vector<order::preorder> out;
  for (auto& p : pre) {
    if (p.is_poset()) out.push_back(std::move(p));
  }
  return out;
}

std::vector<finspace::fin_space> all_topologies(std::size_t n) {
  if (n > 4) throw input_error("topology enumeration supports at most 4 points");
  const auto names = default_names(n);
  const std::size_t subset_count = std::size_t(1) << n;
  std::set<std::vector<finspace::subset>> seen;
  std::vector<finspace::fin_space> out;
  for (std::size_t fam = 0; fam < (std::size_t(1) << subset_count); ++fam) {
    std::vector<finspace::subset> subbasis;
    for (std::size_t s = 0; s < subset_count; ++s) {
      if (fam >> s & 1u) subbasis.push_back(static_cast<finspace::subset>(s));
    }
    auto space = finspace::fin_space::generate(names, subbasis);
    if (seen.insert(space.opens()).second) out.push_back(std::move(space));
  }
  return out;
}

long up_height(const order::preorder& p, std::size_t i) {
  long best = 0;
  for (std::size_t q = 0; q < p.size(); ++q) {
    if (q == i || !p.leq(i, q) || p.leq(q, i)) continue;
    best = std::max(best, 1 + up_height(p, q));
  }
  return best;
}

template <typename Ring>
std::vector<typename Ring::elem> minor_gcd_factors(const Ring& ring,
                                                   const pid::matrix<Ring>& m) {
  const std::size_t n = m.rows;
  const std::size_t c = m.cols;
  if (n > 6 || c > 6) throw input_error("minor-gcd oracle supports at most 6x6 matrices");
  std::vector<typename Ring::elem> out;
  auto prev_gcd = ring.one();
  for (std::size_t k = 1; k <= std::min(n, c); ++k) {
    auto g = ring.zero();
    for (std::size_t rows = 0; rows < (std::size_t(1) << n); ++rows) {
      if (static_cast<std::size_t>(__builtin_popcountll(rows)) != k) continue;
      for (std::size_t cols = 0; cols < (std::size_t(1) << c); ++cols) {
        if (static_cast<std::size_t>(__builtin_popcountll(cols)) != k) continue;
        pid::matrix<Ring> sub(k, k, ring.zero());
        std::size_t si = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (!(rows >> i & 1u)) continue;
          std::size_t sj = 0;
          for (std::size_t j = 0; j < c; ++j) {
            if (!(cols >> j & 1u)) continue;
            sub.at(si, sj++) = m.at(i, j);
          }
          ++si;
        }
        g = ring.gcd(g, pid::det(ring, sub));
      }
    }
    if (ring.is_zero(g)) break;  // rank reached
    auto [d, r] = ring.divmod(g, prev_gcd);
    if (!ring.is_zero(r)) throw internal_error("minor gcds failed to divide");
    out.push_back(ring.mul(ring.canonical_unit(d), d));
    prev_gcd = g;
  }
  return out;
}

template std::vector<pid::integer_ring::elem> minor_gcd_factors(const pid::integer_ring&,
                                                                const pid::matrix<pid::integer_ring>&);
template std::vector<pid::fp_poly_ring::elem> minor_gcd_factors(const pid::fp_poly_ring&,
                                                                const pid::matrix<pid::fp_poly_ring>&);

}  // namespace atomspec::oracles
