#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atomspec/errors.hpp"

namespace atomspec::order {

inline constexpr std::size_t default_max_points = 64;

// Finite preorder on named points.  The point list fixes iteration order
// everywhere (up_set results, extremal elements, tie-breaking), so all
// operations are deterministic.  The relation is stored as a dense
// reflexive-transitive boolean matrix.
class preorder {
 public:
  // Builds the reflexive-transitive closure of the generating pairs.
  // Unknown identifiers in `pairs` and duplicate point names are input
  // errors, as is exceeding `max_points`.
  static preorder from_generators(std::vector<std::string> points,
                                  const std::vector<std::pair<std::string, std::string>>& pairs,
                                  std::size_t max_points = default_max_points);

  // Relation given directly as an n*n row-major matrix; must already be
  // reflexive and transitive (checked).
  static preorder from_matrix(std::vector<std::string> points, std::vector<bool> leq_matrix);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point_name(std::size_t i) const { return points_[i]; }
  std::size_t index_of(const std::string& name) const;  // input_error if unknown

  bool leq(std::size_t p, std::size_t q) const { return rel_[p * size() + q]; }
  bool leq(const std::string& p, const std::string& q) const;

  bool is_poset() const;  // antisymmetry

  // Up-set of p: every q with p <= q, in point-list order.  This is the
  // minimal open of p in the induced topology.
  std::vector<std::size_t> up_set(std::size_t p) const;

  enum class extremal { maximal, minimal };
  std::vector<std::size_t> extremal_elements(extremal which) const;

  // Identify mutually comparable points.  Returns the quotient (always a
  // poset, classes named after their first member in point-list order) and
  // the projection point index -> class index.
  std::pair<preorder, std::vector<std::size_t>> kolmogorov_collapse() const;

  bool operator==(const preorder& other) const = default;

 private:
  preorder(std::vector<std::string> points, std::vector<bool> rel)
      : points_(std::move(points)), rel_(std::move(rel)) {}

  std::vector<std::string> points_;
  std::vector<bool> rel_;  // rel_[p*n + q] means p <= q
};

// A preorder whose relation is antisymmetric.  Construction checks this; the
// named pair of violating points goes into the error message.
class poset {
 public:
  explicit poset(preorder p);

  const preorder& rel() const { return p_; }
  std::size_t size() const { return p_.size(); }
  const std::vector<std::string>& points() const { return p_.points(); }
  std::size_t index_of(const std::string& name) const { return p_.index_of(name); }
  bool leq(std::size_t a, std::size_t b) const { return p_.leq(a, b); }

  // Length (edge count) of the longest strict chain p < q1 < ... < qk.
  // Zero exactly when p is maximal.
  std::size_t longest_chain_above(std::size_t p) const;

  // Longest strict chain whose members all lie in `within` (point indices);
  // -1 if `within` is empty.  Used for chain-based dimensions.
  long longest_chain_within(const std::vector<std::size_t>& within) const;

  bool operator==(const poset& other) const = default;

 private:
  preorder p_;
};

// Length (edge count) of the longest chain a < q1 < ... < qk starting at a.
// The strict part of any preorder is acyclic, so this is well defined even
// off posets; symmetric pairs contribute nothing.
std::size_t longest_strict_chain_above(const preorder& p, std::size_t from);

// Longest strict chain whose members all lie in `within`; -1 when empty.
long longest_strict_chain_within(const preorder& p, const std::vector<std::size_t>& within);

// Strict cover relation q covers p (p < q with nothing strictly between).
// For a poset this is the transitive reduction.
std::vector<std::pair<std::size_t, std::size_t>> cover_pairs(const preorder& p);

// Graphviz rendering of the cover relation, one node per point.
std::string to_dot(const preorder& p, const std::string& graph_name = "order");

}  // namespace atomspec::order
