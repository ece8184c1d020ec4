#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "atomspec/spectrum.hpp"

namespace atomspec::filtration {

inline constexpr std::size_t default_stage_cap = 64;

// A dimension: a finite value >= -1, "at least omega" for points the stage
// peeling never reaches, or "does not exist" for the chain-defined dimension
// when no witnessing chain is long enough.
class dim_value {
 public:
  static dim_value finite(long n) { return dim_value(kind::finite, n); }
  static dim_value omega() { return dim_value(kind::omega, 0); }
  static dim_value none() { return dim_value(kind::none, 0); }

  bool is_finite() const { return k_ == kind::finite; }
  bool is_omega() const { return k_ == kind::omega; }
  bool exists() const { return k_ != kind::none; }
  long value() const;  // pre: is_finite()

  // "3", ">=omega", "does-not-exist": the tokens the CLI prints.
  std::string str() const;

  bool operator==(const dim_value& o) const = default;

 private:
  enum class kind { finite, omega, none };
  dim_value(kind k, long n) : k_(k), n_(n) {}
  kind k_;
  long n_;
};

// Stagewise peeling of maximal atoms.  stages[k] holds the points removed at
// step k; residual holds points never reached (their stage is >= omega),
// either because peeling genuinely stalled or because the cap cut it off.
struct filtration_result {
  tailspace::symbolic_set all_points;
  std::vector<tailspace::symbolic_set> stages;
  tailspace::symbolic_set residual;
  bool cap_hit = false;

  bool stalled() const { return !residual.empty(); }
};

// Repeatedly removes the open set of maximal atoms until nothing is left or
// no progress is possible.
filtration_result gabriel_filtration(const spectrum::atom_space& a,
                                     std::size_t stage_cap = default_stage_cap);

// Stage number of a point; omega for residual points.  Class handles are
// resolved on probe indices and must be uniform.
dim_value stage_of(const filtration_result& f, const spectrum::atom_ref& p);

dim_value gkdim_point(const filtration_result& f, const spectrum::atom_ref& p);
// Largest stage met by the set; -1 for the empty set, omega if it meets the
// residual.
dim_value gkdim_open(const filtration_result& f, const tailspace::symbolic_set& o);

// Length of the longest strict specialization chain starting at p (edges).
long chain_above(const spectrum::atom_space& a, const spectrum::atom_ref& p);
// Longest strict chain inside the set; -1 when empty.
long chain_within(const spectrum::atom_space& a, const tailspace::symbolic_set& o);

// Chain-certified dimension: equals the stage when a strict chain of that
// length starts at p, otherwise does not exist.  Errors on points without a
// finite stage.
dim_value dim_point(const spectrum::atom_space& a, const filtration_result& f,
                    const spectrum::atom_ref& p);
// Largest certified dimension among the points of the set; -1 for the empty
// set, does-not-exist when no point of a nonempty set has one.
dim_value dim_open(const spectrum::atom_space& a, const filtration_result& f,
                   const tailspace::symbolic_set& o);

dim_value adim_point(const spectrum::atom_space& a, const spectrum::atom_ref& p);
dim_value adim_open(const spectrum::atom_space& a, const tailspace::symbolic_set& o);

struct theorem_item {
  std::string name;
  bool applicable = true;  // false: precondition absent, counts as pass
  bool pass = true;
  std::vector<std::string> witnesses;
  std::string note;
};

struct theorem_report {
  bool kolmogorov = true;
  bool alexandroff = true;
  std::optional<std::string> alexandroff_witness;
  std::array<theorem_item, 7> items;

  bool all_pass() const;
};

// The seven structural claims tied together by the stage peeling:
//   1 chain dimension never exceeds the stage dimension
//   2 strict chains descend strictly through stages
//   3 each stage is an antichain
//   4 removing stage 0 shifts every surviving stage down by one
//   5 off-maximal points have a successor one stage down iff Alexandroff
//   6 Alexandroff: the chain dimension exists everywhere and equals the stage
//   7 Alexandroff: plain chain length, chain dimension and stage agree
// Items 5-7 are skipped when the order is not antisymmetric, and 6-7 when the
// space is not Alexandroff.
theorem_report verify_theorems(const spectrum::atom_space& a,
                               std::size_t stage_cap = default_stage_cap);

}  // namespace atomspec::filtration
