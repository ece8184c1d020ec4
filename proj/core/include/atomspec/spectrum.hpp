#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atomspec/errors.hpp"
#include "atomspec/finspace.hpp"
#include "atomspec/order.hpp"
#include "atomspec/tailspace.hpp"

namespace atomspec::spectrum {

// Point handle across backends.  `indexed_class` stands for a generic member
// of the indexed family; class-level answers are evaluated on probe indices
// and must agree, otherwise the query is rejected as not index-uniform.
struct atom_ref {
  enum class kind { named, indexed, indexed_class };
  kind k = kind::named;
  std::string name;
  long index = 0;

  static atom_ref named_point(std::string n) { return {kind::named, std::move(n), 0}; }
  static atom_ref indexed_point(long i) { return {kind::indexed, {}, i}; }
  static atom_ref whole_class() { return {kind::indexed_class, {}, 0}; }
  bool operator==(const atom_ref& o) const = default;
};

// A space of atoms together with named supports (each an open set) and the
// set of points still alive after removals.  All topological queries answer
// for the subspace topology on the live points, so removing an open and
// asking again is the same as asking about the complement once.
class atom_space {
 public:
  struct support_entry {
    tailspace::symbolic_set set;
    bool noetherian = false;
    bool operator==(const support_entry&) const = default;
  };
  using support_list = std::vector<std::pair<std::string, support_entry>>;

  static atom_space from_finite(finspace::fin_space space, support_list supports = {});
  static atom_space from_schema(tailspace::tail_schema schema, support_list supports = {},
                                std::map<long, std::string> index_labels = {});
  // "grmod_kx" or "goodearl", with their literature supports attached.
  static atom_space builtin(const std::string& name);

  bool symbolic() const { return schema_.has_value(); }
  const finspace::fin_space& finite_space() const;
  const tailspace::tail_schema& schema() const;
  const tailspace::symbolic_set& live() const { return live_; }
  const support_list& supports() const { return supports_; }
  const support_entry* find_support(const std::string& name) const;
  const std::map<long, std::string>& index_labels() const { return index_labels_; }

  bool contains(const atom_ref& p) const;
  // All live points of the finite backend as a mask, and conversions between
  // masks and symbolic sets (finite backend only).
  finspace::subset live_mask() const;
  finspace::subset mask_of(const tailspace::symbolic_set& s) const;
  tailspace::symbolic_set set_of(finspace::subset m) const;

  bool is_open(const tailspace::symbolic_set& s) const;

  // Points whose singleton is open: the classes of the simple objects.
  tailspace::symbolic_set maximal_atoms() const;
  // Maximal under the specialization order.  Contains maximal_atoms; the two
  // agree exactly on Alexandroff spaces.
  tailspace::symbolic_set order_maximal() const;

  atom_space remove_open(const tailspace::symbolic_set& o) const;

  // Minimal points of `o` under the specialization order; may be an infinite
  // symbolic class.
  tailspace::symbolic_set amin(const tailspace::symbolic_set& o) const;

  // Up-set of p, equal to the minimal open of p as a point set.
  tailspace::symbolic_set lambda(const atom_ref& p) const;
  bool lambda_open(const atom_ref& p) const;
  struct lambda_entry {
    atom_ref point;
    bool open = false;
  };
  std::vector<lambda_entry> lambda_open_report(const tailspace::symbolic_set& pts) const;

  bool leq(const atom_ref& p, const atom_ref& q) const;
  bool strictly_less(const atom_ref& p, const atom_ref& q) const {
    return leq(p, q) && !leq(q, p);
  }
  // Antisymmetry of the specialization order on live points.
  bool is_kolmogorov() const;

  tailspace::alexandroff_report check_alexandroff() const;
  // Schema spaces gain a point descriptor per non-open minimal open; finite
  // spaces are already Alexandroff and come back unchanged.
  atom_space completed() const;

  // Probe indices for class-level evaluation over an index set.
  std::vector<long> probes(const tailspace::index_set& s) const;
  // Evaluates f at the probes of s and insists on one answer.
  bool uniform(const tailspace::index_set& s, const char* what,
               const std::function<bool(long)>& f) const;

  std::string display(const atom_ref& p) const;
  std::string set_to_string(const tailspace::symbolic_set& s) const;

  bool operator==(const atom_space& o) const = default;

 private:
  atom_space() = default;
  void validate_supports();
  tailspace::symbolic_set checked_subset(const tailspace::symbolic_set& s, const char* what) const;

  std::optional<finspace::fin_space> finite_;
  std::optional<tailspace::tail_schema> schema_;
  tailspace::symbolic_set live_;
  support_list supports_;
  std::map<long, std::string> index_labels_;
};

}  // namespace atomspec::spectrum
