#include "atomspec/order.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace atomspec::order {

namespace {

std::unordered_map<std::string, std::size_t> index_points(const std::vector<std::string>& points) {
  std::unordered_map<std::string, std::size_t> idx;
  idx.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!idx.emplace(points[i], i).second) {
      throw input_error("duplicate point name: " + points[i]);
    }
  }
  return idx;
}

}  // namespace

preorder preorder::from_generators(std::vector<std::string> points,
                                   const std::vector<std::pair<std::string, std::string>>& pairs,
                                   std::size_t max_points) {
  if (points.size() > max_points) {
    throw input_error("point count " + std::to_string(points.size()) +
                      " exceeds cap " + std::to_string(max_points));
  }
  auto idx = index_points(points);
  const std::size_t n = points.size();
  std::vector<bool> rel(n * n, false);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = true;
  for (const auto& [a, b] : pairs) {
    auto ia = idx.find(a);
    if (ia == idx.end()) throw input_error("unknown point in relation: " + a);
    auto ib = idx.find(b);
    if (ib == idx.end()) throw input_error("unknown point in relation: " + b);
    rel[ia->second * n + ib->second] = true;
  }
  // Warshall transitive closure; n is capped so cubic is fine.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k * n + j]) rel[i * n + j] = true;
  return preorder(std::move(points), std::move(rel));
}

preorder preorder::from_matrix(std::vector<std::string> points, std::vector<bool> leq_matrix) {
  index_points(points);  // just the duplicate check
  const std::size_t n = points.size();
  if (leq_matrix.size() != n * n) throw input_error("relation matrix has wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq_matrix[i * n + i]) throw input_error("relation not reflexive at " + points[i]);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (leq_matrix[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq_matrix[k * n + j] && !leq_matrix[i * n + j]) {
            throw input_error("relation not transitive: " + points[i] + " <= " + points[k] +
                              " <= " + points[j]);
          }
  return preorder(std::move(points), std::move(leq_matrix));
}

std::size_t preorder::index_of(const std::string& name) const {
  auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) throw input_error("unknown point: " + name);
  return static_cast<std::size_t>(it - points_.begin());
}

bool preorder::leq(const std::string& p, const std::string& q) const {
  return leq(index_of(p), index_of(q));
}

bool preorder::is_poset() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel_[i * n + j] && rel_[j * n + i]) return false;
  return true;
}

std::vector<std::size_t> preorder::up_set(std::size_t p) const {
  std::vector<std::size_t> up;
  for (std::size_t q = 0; q < size(); ++q)
    if (leq(p, q)) up.push_back(q);
  return up;
}

std::vector<std::size_t> preorder::extremal_elements(extremal which) const {
  const std::size_t n = size();
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < n; ++p) {
    bool extreme = true;
    for (std::size_t q = 0; q < n && extreme; ++q) {
      if (q == p) continue;
      // p maximal: nothing strictly above it.  Strict means one-directional
      // comparability, so symmetric pairs do not disqualify each other.
      const bool strictly_beyond = (which == extremal::maximal)
                                       ? (leq(p, q) && !leq(q, p))
                                       : (leq(q, p) && !leq(p, q));
      if (strictly_beyond) extreme = false;
    }
    if (extreme) out.push_back(p);
  }
  return out;
}

std::pair<preorder, std::vector<std::size_t>> preorder::kolmogorov_collapse() const {
  const std::size_t n = size();
  std::vector<std::size_t> cls(n, SIZE_MAX);
  std::vector<std::string> class_names;
  std::vector<std::size_t> reps;
  for (std::size_t p = 0; p < n; ++p) {
    if (cls[p] != SIZE_MAX) continue;
    const std::size_t c = reps.size();
    reps.push_back(p);
    class_names.push_back(points_[p]);
    for (std::size_t q = p; q < n; ++q)
      if (leq(p, q) && leq(q, p)) cls[q] = c;
  }
  const std::size_t m = reps.size();
  std::vector<bool> qrel(m * m, false);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) qrel[a * m + b] = leq(reps[a], reps[b]);
  return {preorder(std::move(class_names), std::move(qrel)), std::move(cls)};
}

poset::poset(preorder p) : p_(std::move(p)) {
  const std::size_t n = p_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p_.leq(i, j) && p_.leq(j, i)) {
        throw input_error("not a poset: " + p_.point_name(i) + " and " + p_.point_name(j) +
                          " are mutually comparable");
      }
}

std::size_t poset::longest_chain_above(std::size_t p) const {
  return longest_strict_chain_above(p_, p);
}

long poset::longest_chain_within(const std::vector<std::size_t>& within) const {
  return longest_strict_chain_within(p_, within);
}

std::size_t longest_strict_chain_above(const preorder& p, std::size_t from) {
  const std::size_t n = p.size();
  // Memoized longest strict path; strictness can never cycle, so plain
  // recursion terminates.
  std::vector<long> memo(n, -1);
  std::function<std::size_t(std::size_t)> height = [&](std::size_t a) -> std::size_t {
    if (memo[a] >= 0) return static_cast<std::size_t>(memo[a]);
    std::size_t best = 0;
    for (std::size_t q = 0; q < n; ++q)
      if (q != a && p.leq(a, q) && !p.leq(q, a)) best = std::max(best, 1 + height(q));
    memo[a] = static_cast<long>(best);
    return best;
  };
  return height(from);
}

long longest_strict_chain_within(const preorder& p, const std::vector<std::size_t>& within) {
  if (within.empty()) return -1;
  std::vector<long> memo(p.size(), -1);
  std::vector<bool> member(p.size(), false);
  for (std::size_t q : within) member[q] = true;
  std::function<long(std::size_t)> height = [&](std::size_t a) -> long {
    if (memo[a] >= 0) return memo[a];
    long best = 0;
    for (std::size_t q = 0; q < p.size(); ++q)
      if (q != a && member[q] && p.leq(a, q) && !p.leq(q, a)) best = std::max(best, 1 + height(q));
    memo[a] = best;
    return best;
  };
  long best = 0;
  for (std::size_t q : within) best = std::max(best, height(q));
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(const preorder& p) {
  const std::size_t n = p.size();
  auto strict = [&](std::size_t a, std::size_t b) { return p.leq(a, b) && !p.leq(b, a); };
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!strict(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c)
        if (strict(a, c) && strict(c, b)) direct = false;
      if (direct) covers.emplace_back(a, b);
    }
  return covers;
}

std::string to_dot(const preorder& p, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    out << "  \"" << p.point_name(i) << "\";\n";
  }
  for (const auto& [a, b] : cover_pairs(p)) {
    out << "  \"" << p.point_name(a) << "\" -> \"" << p.point_name(b) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace atomspec::order
