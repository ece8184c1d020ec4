#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atomspec/errors.hpp"
#include "atomspec/order.hpp"

namespace atomspec::finspace {

inline constexpr std::size_t default_max_points = 16;

// Subsets of a finite point list are bitmasks: bit i set means point i is in
// the subset.  Keeping masks in the public interface keeps the topology
// algebra branch-free; name translation happens at the edges.
using subset = std::uint32_t;

// Finite topological space: named points plus the full family of open sets.
// The family is kept canonical (sorted ascending as masks, deduplicated) and
// is checked at construction to contain the empty set and the whole space and
// to be closed under pairwise union and intersection.
class fin_space {
 public:
  // Closes `subbasis` under finite unions and intersections.  The empty
  // family generates the indiscrete topology.
  static fin_space generate(std::vector<std::string> points, const std::vector<subset>& subbasis,
                            std::size_t max_points = default_max_points);

  // Takes the family as the complete topology; construction validates it.
  static fin_space from_opens(std::vector<std::string> points, std::vector<subset> opens,
                              std::size_t max_points = default_max_points);

  // Opens are exactly the up-closed subsets of the preorder.
  static fin_space alexandroff(const order::preorder& p);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point_name(std::size_t i) const { return points_[i]; }
  std::size_t index_of(const std::string& name) const;
  subset everything() const {
    return size() == 0 ? 0 : static_cast<subset>((1u << size()) - 1);
  }

  const std::vector<subset>& opens() const { return opens_; }
  bool is_open(subset s) const;

  // x <= y iff every open containing x contains y.
  order::preorder specialization_preorder() const;

  // Intersection of all opens containing x; open in any finite space.
  subset minimal_open(std::size_t x) const;

  bool is_kolmogorov() const;

  // Identifies points with identical minimal opens.  Returns the quotient
  // space and the projection point index -> class index.  Classes are named
  // after their first member.
  std::pair<fin_space, std::vector<std::size_t>> kolmogorov_quotient() const;

  bool operator==(const fin_space& other) const = default;

 private:
  fin_space(std::vector<std::string> points, std::vector<subset> opens)
      : points_(std::move(points)), opens_(std::move(opens)) {}

  std::vector<std::string> points_;
  std::vector<subset> opens_;  // sorted, deduplicated
};

// Rebuilds the space from its own specialization preorder and reports the
// first open set (as a mask) present in one topology but not the other.
// Empty result means the rebuilt space equals the original, which is the only
// possible outcome for finite spaces; the witness path exists because the
// symbolic backend shares this interface and can genuinely differ.
std::optional<subset> counit_witness(const fin_space& x);

// Exhaustively checks that a map p -> y is continuous as a map from the
// order-generated space of `p` to `y` exactly when it is monotone from `p`
// to the specialization preorder of `y`.  Enumerates all |Y|^|P| functions;
// throws input_error past `max_maps`.
bool adjunction_check(const order::preorder& p, const fin_space& y,
                      std::uint64_t max_maps = 1'000'000);

std::vector<std::string> subset_names(const fin_space& x, subset s);

}  // namespace atomspec::finspace
