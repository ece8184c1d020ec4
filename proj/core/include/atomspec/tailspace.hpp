#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atomspec/errors.hpp"

namespace atomspec::tailspace {

enum class index_domain { naturals, integers };
enum class tail_dir { up, down };  // up: {i : i >= n}, down: {i : i <= n}

// Subset of the index line that is eventually constant in both directions:
// exactly the finite unions of finite sets and tails, closed under union,
// intersection, difference and complement.  Membership is
//   {i < lo : below} u {i in [lo,hi] : listed} u {i > hi : above}
// and the canonical form keeps the window minimal, so equality is
// structural.  Sets over the naturals are those with below == false and no
// member < 0.
class index_set {
 public:
  index_set() = default;  // empty

  static index_set empty_set() { return {}; }
  static index_set finite(std::vector<long> indices);
  static index_set up_tail(long from);    // {i : i >= from}
  static index_set down_tail(long upto);  // {i : i <= upto}
  static index_set all(index_domain d);
  static index_set cofinite(const std::vector<long>& excluded, index_domain d);

  bool contains(long i) const;
  bool empty() const { return !below_ && !above_ && members_.empty(); }
  bool is_finite() const { return !below_ && !above_; }
  bool unbounded_up() const { return above_; }
  bool unbounded_down() const { return below_; }
  // Finite edge of the set, when it exists on that side.
  std::optional<long> min_element() const;
  std::optional<long> max_element() const;
  std::vector<long> finite_elements() const;  // pre: is_finite()

  index_set unite(const index_set& o) const;
  index_set intersect(const index_set& o) const;
  index_set subtract(const index_set& o) const;
  index_set complement(index_domain d) const;
  bool subset_of(const index_set& o) const { return subtract(o).empty(); }

  bool valid_in(index_domain d) const;

  // Up to three member indices spread over the set's shape (edges first).
  // Class-level answers are evaluated at these probes and must agree.
  std::vector<long> probes() const;

  bool operator==(const index_set& o) const = default;

  bool eventually_below() const { return below_; }
  bool eventually_above() const { return above_; }
  long window_lo() const { return lo_; }
  long window_hi() const { return hi_; }
  const std::vector<long>& window_members() const { return members_; }

 private:
  template <typename F>
  static index_set combine(const index_set& a, const index_set& b, F&& f);
  void canonicalize();

  bool below_ = false;
  bool above_ = false;
  long lo_ = 0;
  long hi_ = -1;  // window empty when hi_ < lo_; lo_ then marks the boundary
  std::vector<long> members_;
};

// Finitely described point set of a tail schema: some of the named points
// plus an index_set of the indexed family.
struct symbolic_set {
  std::vector<std::string> named;  // sorted, unique
  index_set indexed;

  static symbolic_set of_named(std::vector<std::string> names);
  static symbolic_set of_indexed(index_set s);

  bool empty() const { return named.empty() && indexed.empty(); }
  bool contains_named(const std::string& n) const;

  symbolic_set unite(const symbolic_set& o) const;
  symbolic_set intersect(const symbolic_set& o) const;
  symbolic_set subtract(const symbolic_set& o) const;
  bool subset_of(const symbolic_set& o) const;

  bool operator==(const symbolic_set& o) const = default;
};

// A point: either a named point or one member of the indexed family.
struct point_ref {
  enum class kind { named, indexed };
  kind k = kind::named;
  std::string name;  // named only
  long index = 0;    // indexed only

  static point_ref named_point(std::string n) { return {kind::named, std::move(n), 0}; }
  static point_ref indexed_point(long i) { return {kind::indexed, {}, i}; }
  bool operator==(const point_ref& o) const = default;
};

struct descriptor {
  enum class kind {
    singletons,  // every {x_i} is open
    tail,        // {p} u {x_i : i >= n} (or <=) for every n, one direction per schema
    cone,        // {p} u all indexed points
    point,       // {p} itself (used by completions)
  };
  kind k = kind::singletons;
  std::string point;        // tail/cone/point
  tail_dir dir = tail_dir::up;  // tail only

  bool operator==(const descriptor& o) const = default;
};

struct alexandroff_report {
  bool alexandroff = true;
  // First point whose minimal open is not open, and that minimal open: an
  // up-closed set missing from the topology.
  std::optional<std::string> witness_point;
  std::optional<symbolic_set> witness_set;
};

// Infinite space given symbolically: finitely many named points plus one
// indexed family x_i over N or Z, topology generated by the descriptors.
// Construction rejects schemas whose descriptor family is not a basis
// (a named point in no basic open) or not closed under finite intersections
// (two tailed/coned points force the singleton descriptor), and schemas
// mixing tail directions.
class tail_schema {
 public:
  static tail_schema make(std::vector<std::string> named_points, index_domain domain,
                          std::string family, std::vector<descriptor> descriptors);

  const std::vector<std::string>& named_points() const { return named_points_; }
  index_domain domain() const { return domain_; }
  const std::string& family() const { return family_; }
  const std::vector<descriptor>& descriptors() const { return descriptors_; }

  bool has_singletons() const;
  std::optional<tail_dir> schema_tail_dir() const;
  bool has_tail(const std::string& p) const;
  bool has_cone(const std::string& p) const;
  bool has_point(const std::string& p) const;

  symbolic_set whole() const;
  bool contains(const point_ref& p) const;  // also validates index domain

  // A set is open iff every one of its points lies in a basic open contained
  // in it.  The `within` variants answer for the subspace topology on a live
  // point set L: traces B n L of basic opens B play the role of basics.
  bool is_open(const symbolic_set& a) const;
  bool is_open_within(const symbolic_set& live, const symbolic_set& a) const;

  // Intersection of all (trace) opens containing p; equals the up-set
  // Lambda(p) of the specialization order as a set of points.
  symbolic_set minimal_open(const point_ref& p) const;
  symbolic_set minimal_open_within(const symbolic_set& live, const point_ref& p) const;
  symbolic_set lambda(const point_ref& p) const { return minimal_open(p); }

  // p <= q iff every open containing p contains q.
  bool leq(const point_ref& p, const point_ref& q) const;
  bool leq_within(const symbolic_set& live, const point_ref& p, const point_ref& q) const;

  alexandroff_report check_alexandroff() const;
  // Non-open minimal open found when rebuilding the topology from the order;
  // empty exactly when the schema is Alexandroff.
  std::optional<std::pair<std::string, symbolic_set>> counit_witness() const;

  // Adds a point descriptor for every named point whose minimal open is not
  // open.  Leaves the point set and the specialization order untouched;
  // idempotent.  The result always passes check_alexandroff.
  tail_schema completion() const;

  std::string display(const point_ref& p) const;
  std::string class_display() const;  // e.g. "s_i"

  bool operator==(const tail_schema& o) const = default;

 private:
  tail_schema() = default;

  index_set tail_at(long i) const;      // tail through index i in schema direction
  index_set tail_intersection() const;  // intersection of all tails (may be nonempty over N)

  std::vector<std::string> named_points_;
  index_domain domain_ = index_domain::naturals;
  std::string family_;
  std::vector<descriptor> descriptors_;
};

// The two literature models and the prime-spectrum shape:
//   grmod_kx:  named b, family s over Z, singletons + downward tails at b
//   goodearl:  named b, family m over N, singletons + upward tails at b
//   spec_pid:  named g, family over N, singletons + cone at g
tail_schema grmod_kx_schema();
tail_schema goodearl_schema();
tail_schema spec_pid_schema(const std::string& family);

// Deterministic ASCII rendering, e.g. "{b} + {s_i : i <= 0}".  `labels`
// overrides the display of individual indexed points (used by prime spectra).
std::string to_string(const symbolic_set& s, const tail_schema& schema,
                      const std::map<long, std::string>* labels = nullptr);

}  // namespace atomspec::tailspace
