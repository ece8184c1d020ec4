#include "atomspec/tailspace.hpp"

#include <algorithm>
#include <sstream>

namespace atomspec::tailspace {

// ---------------------------------------------------------------- index_set

void index_set::canonicalize() {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty()) {
    lo_ = std::min(lo_, members_.front());
    hi_ = std::max(hi_, members_.back());
  }
  // Shrink the window while its edge agrees with the constant outside it.
  while (hi_ >= lo_) {
    const bool member = std::binary_search(members_.begin(), members_.end(), lo_);
    if (member != below_) break;
    if (member) members_.erase(members_.begin());
    ++lo_;
  }
  while (hi_ >= lo_) {
    const bool member = std::binary_search(members_.begin(), members_.end(), hi_);
    if (member != above_) break;
    if (member) members_.pop_back();
    --hi_;
  }
  if (hi_ < lo_) {
    // Empty window: lo_ is the boundary between the two constant regions,
    // meaningful only when they differ.
    if (below_ == above_) lo_ = 0;
    hi_ = lo_ - 1;
  }
}

index_set index_set::finite(std::vector<long> indices) {
  index_set s;
  if (indices.empty()) return s;
  s.members_ = std::move(indices);
  std::sort(s.members_.begin(), s.members_.end());
  s.members_.erase(std::unique(s.members_.begin(), s.members_.end()), s.members_.end());
  s.lo_ = s.members_.front();
  s.hi_ = s.members_.back();
  s.canonicalize();
  return s;
}

index_set index_set::up_tail(long from) {
  index_set s;
  s.above_ = true;
  s.lo_ = from;
  s.hi_ = from - 1;
  return s;
}

index_set index_set::down_tail(long upto) {
  index_set s;
  s.below_ = true;
  s.lo_ = upto + 1;
  s.hi_ = upto;
  return s;
}

index_set index_set::all(index_domain d) {
  if (d == index_domain::naturals) return up_tail(0);
  index_set s;
  s.below_ = s.above_ = true;
  s.lo_ = 0;
  s.hi_ = -1;
  return s;
}

index_set index_set::cofinite(const std::vector<long>& excluded, index_domain d) {
  return all(d).subtract(finite(excluded));
}

bool index_set::contains(long i) const {
  if (i < lo_) return below_;
  if (i > hi_) return above_;
  return std::binary_search(members_.begin(), members_.end(), i);
}

std::optional<long> index_set::min_element() const {
  if (below_) return std::nullopt;
  if (!members_.empty()) return members_.front();
  if (above_) return lo_;
  return std::nullopt;  // empty
}

std::optional<long> index_set::max_element() const {
  if (above_) return std::nullopt;
  if (!members_.empty()) return members_.back();
  if (below_) return hi_;
  return std::nullopt;
}

std::vector<long> index_set::finite_elements() const {
  if (!is_finite()) throw internal_error("finite_elements on an infinite index set");
  return members_;
}

template <typename F>
index_set index_set::combine(const index_set& a, const index_set& b, F&& f) {
  index_set r;
  r.below_ = f(a.below_, b.below_);
  r.above_ = f(a.above_, b.above_);
  const long lo = std::min(a.lo_, b.lo_) - 1;
  const long hi = std::max(std::max(a.hi_, a.lo_), std::max(b.hi_, b.lo_)) + 1;
  r.lo_ = lo;
  r.hi_ = hi;
  for (long i = lo; i <= hi; ++i)
    if (f(a.contains(i), b.contains(i))) r.members_.push_back(i);
  r.canonicalize();
  return r;
}

index_set index_set::unite(const index_set& o) const {
  return combine(*this, o, [](bool x, bool y) { return x || y; });
}

index_set index_set::intersect(const index_set& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && y; });
}

index_set index_set::subtract(const index_set& o) const {
  return combine(*this, o, [](bool x, bool y) { return x && !y; });
}

index_set index_set::complement(index_domain d) const {
  return all(d).subtract(*this);
}

bool index_set::valid_in(index_domain d) const {
  if (d == index_domain::integers) return true;
  return intersect(down_tail(-1)).empty();
}

std::vector<long> index_set::probes() const {
  std::vector<long> cand = members_;
  if (below_) {
    cand.push_back(lo_ - 1);
    cand.push_back(lo_ - 2);
    cand.push_back(lo_ - 17);
  }
  if (above_) {
    cand.push_back(hi_ + 1);
    cand.push_back(hi_ + 2);
    cand.push_back(hi_ + 17);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::erase_if(cand, [this](long i) { return !contains(i); });
  if (cand.size() <= 3) return cand;
  return {cand.front(), cand[cand.size() / 2], cand.back()};
}

// ------------------------------------------------------------- symbolic_set

symbolic_set symbolic_set::of_named(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return {std::move(names), index_set::empty_set()};
}

symbolic_set symbolic_set::of_indexed(index_set s) { return {{}, std::move(s)}; }

bool symbolic_set::contains_named(const std::string& n) const {
  return std::binary_search(named.begin(), named.end(), n);
}

symbolic_set symbolic_set::unite(const symbolic_set& o) const {
  symbolic_set r;
  std::set_union(named.begin(), named.end(), o.named.begin(), o.named.end(),
                 std::back_inserter(r.named));
  r.indexed = indexed.unite(o.indexed);
  return r;
}

symbolic_set symbolic_set::intersect(const symbolic_set& o) const {
  symbolic_set r;
  std::set_intersection(named.begin(), named.end(), o.named.begin(), o.named.end(),
                        std::back_inserter(r.named));
  r.indexed = indexed.intersect(o.indexed);
  return r;
}

symbolic_set symbolic_set::subtract(const symbolic_set& o) const {
  symbolic_set r;
  std::set_difference(named.begin(), named.end(), o.named.begin(), o.named.end(),
                      std::back_inserter(r.named));
  r.indexed = indexed.subtract(o.indexed);
  return r;
}

bool symbolic_set::subset_of(const symbolic_set& o) const { return subtract(o).empty(); }

// -------------------------------------------------------------- tail_schema

tail_schema tail_schema::make(std::vector<std::string> named_points, index_domain domain,
                              std::string family, std::vector<descriptor> descriptors) {
  if (family.empty()) throw input_error("indexed family needs a name");
  {
    auto sorted = named_points;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw input_error("duplicate named point");
    }
  }
  for (const auto& n : named_points) {
    if (n.empty()) throw input_error("named point with empty name");
  }

  auto declared = [&](const std::string& p) {
    return std::find(named_points.begin(), named_points.end(), p) != named_points.end();
  };

  bool singletons = false;
  std::optional<tail_dir> dir;
  std::vector<std::string> tailed, coned, pointed;
  for (const auto& d : descriptors) {
    switch (d.k) {
      case descriptor::kind::singletons:
        if (singletons) throw input_error("duplicate singletons descriptor");
        singletons = true;
        break;
      case descriptor::kind::tail:
        if (!declared(d.point)) throw input_error("tail descriptor names unknown point " + d.point);
        if (dir && *dir != d.dir) throw input_error("schema mixes tail directions");
        dir = d.dir;
        if (std::count(tailed.begin(), tailed.end(), d.point)) {
          throw input_error("duplicate tail descriptor for " + d.point);
        }
        tailed.push_back(d.point);
        break;
      case descriptor::kind::cone:
        if (!declared(d.point)) throw input_error("cone descriptor names unknown point " + d.point);
        if (std::count(coned.begin(), coned.end(), d.point)) {
          throw input_error("duplicate cone descriptor for " + d.point);
        }
        coned.push_back(d.point);
        break;
      case descriptor::kind::point:
        if (!declared(d.point)) {
          throw input_error("point descriptor names unknown point " + d.point);
        }
        if (std::count(pointed.begin(), pointed.end(), d.point)) {
          throw input_error("duplicate point descriptor for " + d.point);
        }
        pointed.push_back(d.point);
        break;
    }
  }
  for (const auto& p : tailed) {
    if (std::count(coned.begin(), coned.end(), p)) {
      throw input_error("point " + p + " has both tail and cone descriptors");
    }
  }
  // Basis conditions.  Every named point must sit in some basic open, and
  // the indexed family must be covered.
  for (const auto& p : named_points) {
    if (!std::count(tailed.begin(), tailed.end(), p) && !std::count(coned.begin(), coned.end(), p) &&
        !std::count(pointed.begin(), pointed.end(), p)) {
      throw input_error("named point " + p + " lies in no basic open");
    }
  }
  if (!singletons && tailed.empty() && coned.empty()) {
    throw input_error("indexed family is covered by no descriptor");
  }
  // Closure under finite intersections: two distinct tailed or coned points
  // intersect to a bare set of indexed points, which only the singleton
  // descriptor can cover.
  if (tailed.size() + coned.size() >= 2 && !singletons) {
    throw input_error("descriptor family is not intersection-closed without singletons");
  }

  tail_schema s;
  s.named_points_ = std::move(named_points);
  s.domain_ = domain;
  s.family_ = std::move(family);
  s.descriptors_ = std::move(descriptors);
  return s;
}

bool tail_schema::has_singletons() const {
  return std::any_of(descriptors_.begin(), descriptors_.end(),
                     [](const descriptor& d) { return d.k == descriptor::kind::singletons; });
}

std::optional<tail_dir> tail_schema::schema_tail_dir() const {
  for (const auto& d : descriptors_)
    if (d.k == descriptor::kind::tail) return d.dir;
  return std::nullopt;
}

namespace {

bool has_desc(const std::vector<descriptor>& ds, descriptor::kind k, const std::string& p) {
  return std::any_of(ds.begin(), ds.end(),
                     [&](const descriptor& d) { return d.k == k && d.point == p; });
}

}  // namespace

bool tail_schema::has_tail(const std::string& p) const {
  return has_desc(descriptors_, descriptor::kind::tail, p);
}
bool tail_schema::has_cone(const std::string& p) const {
  return has_desc(descriptors_, descriptor::kind::cone, p);
}
bool tail_schema::has_point(const std::string& p) const {
  return has_desc(descriptors_, descriptor::kind::point, p);
}

symbolic_set tail_schema::whole() const {
  auto s = symbolic_set::of_named(named_points_);
  s.indexed = index_set::all(domain_);
  return s;
}

bool tail_schema::contains(const point_ref& p) const {
  if (p.k == point_ref::kind::named) {
    return std::find(named_points_.begin(), named_points_.end(), p.name) != named_points_.end();
  }
  return index_set::all(domain_).contains(p.index);
}

index_set tail_schema::tail_at(long i) const {
  auto dir = schema_tail_dir();
  if (!dir) throw internal_error("tail_at without tail descriptors");
  index_set t = (*dir == tail_dir::up) ? index_set::up_tail(i) : index_set::down_tail(i);
  return t.intersect(index_set::all(domain_));
}

index_set tail_schema::tail_intersection() const {
  auto dir = schema_tail_dir();
  if (!dir) throw internal_error("tail_intersection without tail descriptors");
  // Tails over Z, and upward tails over N, shrink to nothing; downward tails
  // over N all contain index 0.
  if (domain_ == index_domain::naturals && *dir == tail_dir::down) {
    return index_set::finite({0});
  }
  return index_set::empty_set();
}

namespace {

void validate_set(const tail_schema& s, const symbolic_set& a, const char* what) {
  for (const auto& n : a.named) {
    if (std::find(s.named_points().begin(), s.named_points().end(), n) ==
        s.named_points().end()) {
      throw input_error(std::string(what) + " mentions unknown named point " + n);
    }
  }
  if (!a.indexed.valid_in(s.domain())) {
    throw input_error(std::string(what) + " has indices outside the domain");
  }
}

}  // namespace

bool tail_schema::is_open(const symbolic_set& a) const { return is_open_within(whole(), a); }

bool tail_schema::is_open_within(const symbolic_set& live, const symbolic_set& a) const {
  validate_set(*this, live, "live set");
  validate_set(*this, a, "query set");
  if (!a.subset_of(live)) throw input_error("query set is not inside the live set");

  // d: indexed points present in the subspace that must stay outside the
  // candidate open.  A trace of a tail avoids them iff the tail stops short.
  const index_set d = live.indexed.subtract(a.indexed);
  const auto dir = schema_tail_dir();

  for (const auto& p : a.named) {
    bool covered = false;
    if (has_point(p)) {
      covered = true;
    } else if (has_tail(p)) {
      if (*dir == tail_dir::down) {
        // Over the naturals the shortest downward tail is {0}, so the trace
        // avoids d exactly when 0 stays outside it.
        covered = (domain_ == index_domain::naturals) ? !d.contains(0) : !d.unbounded_down();
      } else {
        covered = !d.unbounded_up();
      }
    } else if (has_cone(p)) {
      covered = d.empty();
    }
    if (!covered) return false;
  }

  if (a.indexed.empty() || has_singletons()) return true;

  // No singleton descriptor: indexed points must be reached through a tail
  // or cone whose named point either left the subspace or joins the set.
  index_set covered = index_set::empty_set();
  bool covered_all = false;
  for (const auto& q : named_points_) {
    const bool gate = !live.contains_named(q) || a.contains_named(q);
    if (!gate) continue;
    if (has_tail(q)) {
      if (d.empty()) {
        covered_all = true;
      } else if (*dir == tail_dir::down) {
        if (!d.unbounded_down()) covered = covered.unite(index_set::down_tail(*d.min_element() - 1));
      } else {
        if (!d.unbounded_up()) covered = covered.unite(index_set::up_tail(*d.max_element() + 1));
      }
    }
    if (has_cone(q) && d.empty()) covered_all = true;
    if (covered_all) break;
  }
  return covered_all || a.indexed.subset_of(covered);
}

symbolic_set tail_schema::minimal_open(const point_ref& p) const {
  return minimal_open_within(whole(), p);
}

symbolic_set tail_schema::minimal_open_within(const symbolic_set& live, const point_ref& p) const {
  validate_set(*this, live, "live set");
  if (!contains(p)) throw input_error("unknown point " + display(p));

  // Intersection of the basic opens through p, then traced to the subspace.
  std::vector<symbolic_set> fams;
  if (p.k == point_ref::kind::named) {
    if (!live.contains_named(p.name)) throw input_error(display(p) + " is not in the live set");
    if (has_point(p.name)) fams.push_back(symbolic_set::of_named({p.name}));
    if (has_tail(p.name)) fams.push_back({{p.name}, tail_intersection()});
    if (has_cone(p.name)) fams.push_back({{p.name}, index_set::all(domain_)});
  } else {
    if (!live.indexed.contains(p.index)) throw input_error(display(p) + " is not in the live set");
    if (has_singletons()) fams.push_back(symbolic_set::of_indexed(index_set::finite({p.index})));
    for (const auto& q : named_points_) {
      if (has_tail(q)) fams.push_back({{q}, tail_at(p.index)});
      if (has_cone(q)) fams.push_back({{q}, index_set::all(domain_)});
    }
  }
  if (fams.empty()) throw internal_error("point " + display(p) + " lies in no basic open");
  symbolic_set u = fams.front();
  for (std::size_t i = 1; i < fams.size(); ++i) u = u.intersect(fams[i]);
  return u.intersect(live);
}

bool tail_schema::leq(const point_ref& p, const point_ref& q) const {
  return leq_within(whole(), p, q);
}

bool tail_schema::leq_within(const symbolic_set& live, const point_ref& p,
                             const point_ref& q) const {
  const symbolic_set u = minimal_open_within(live, p);
  if (q.k == point_ref::kind::named) {
    if (!live.contains_named(q.name)) throw input_error(display(q) + " is not in the live set");
    return u.contains_named(q.name);
  }
  if (!live.indexed.contains(q.index)) throw input_error(display(q) + " is not in the live set");
  return u.indexed.contains(q.index);
}

alexandroff_report tail_schema::check_alexandroff() const {
  for (const auto& p : named_points_) {
    const symbolic_set u = minimal_open(point_ref::named_point(p));
    if (!is_open(u)) return {false, p, u};
  }
  // Indexed class: the verdict must not depend on the index.
  const auto probes = index_set::all(domain_).probes();
  std::optional<bool> verdict;
  std::optional<symbolic_set> sample;
  for (long i : probes) {
    const symbolic_set u = minimal_open(point_ref::indexed_point(i));
    const bool open = is_open(u);
    if (verdict && *verdict != open) {
      throw input_error("openness of minimal opens is not uniform across the indexed family");
    }
    verdict = open;
    if (!open && !sample) sample = u;
  }
  if (verdict && !*verdict) return {false, class_display(), sample};
  return {true, std::nullopt, std::nullopt};
}

std::optional<std::pair<std::string, symbolic_set>> tail_schema::counit_witness() const {
  const auto rep = check_alexandroff();
  if (rep.alexandroff) return std::nullopt;
  return std::make_pair(*rep.witness_point, *rep.witness_set);
}

tail_schema tail_schema::completion() const {
  std::vector<descriptor> ds = descriptors_;
  for (const auto& p : named_points_) {
    if (!is_open(minimal_open(point_ref::named_point(p))) && !has_point(p)) {
      ds.push_back({descriptor::kind::point, p, tail_dir::up});
    }
  }
  tail_schema c = make(named_points_, domain_, family_, std::move(ds));
  if (!c.check_alexandroff().alexandroff) {
    throw internal_error("completion failed to make every minimal open open");
  }
  return c;
}

std::string tail_schema::display(const point_ref& p) const {
  if (p.k == point_ref::kind::named) return p.name;
  return family_ + "_" + std::to_string(p.index);
}

std::string tail_schema::class_display() const { return family_ + "_i"; }

tail_schema grmod_kx_schema() {
  return tail_schema::make({"b"}, index_domain::integers, "s",
                           {{descriptor::kind::singletons, "", tail_dir::up},
                            {descriptor::kind::tail, "b", tail_dir::down}});
}

tail_schema goodearl_schema() {
  return tail_schema::make({"b"}, index_domain::naturals, "m",
                           {{descriptor::kind::singletons, "", tail_dir::up},
                            {descriptor::kind::tail, "b", tail_dir::up}});
}

tail_schema spec_pid_schema(const std::string& family) {
  return tail_schema::make({"g"}, index_domain::naturals, family,
                           {{descriptor::kind::singletons, "", tail_dir::up},
                            {descriptor::kind::cone, "g", tail_dir::up}});
}

std::string to_string(const symbolic_set& s, const tail_schema& schema,
                      const std::map<long, std::string>* labels) {
  const auto& fam = schema.family();
  auto point_label = [&](long i) {
    if (labels) {
      auto it = labels->find(i);
      if (it != labels->end()) return it->second;
    }
    return fam + "_" + std::to_string(i);
  };

  std::vector<std::string> blocks;
  if (!s.named.empty()) {
    std::ostringstream b;
    b << "{";
    for (std::size_t i = 0; i < s.named.size(); ++i) b << (i ? ", " : "") << s.named[i];
    b << "}";
    blocks.push_back(b.str());
  }

  const index_set& ix = s.indexed;
  auto list_block = [&](const std::vector<long>& idx) {
    std::ostringstream b;
    b << "{";
    for (std::size_t i = 0; i < idx.size(); ++i) b << (i ? ", " : "") << point_label(idx[i]);
    b << "}";
    return b.str();
  };

  if (!ix.empty()) {
    if (ix == index_set::all(schema.domain())) {
      blocks.push_back("{" + fam + "_i : all i}");
    } else if (ix.is_finite()) {
      blocks.push_back(list_block(ix.finite_elements()));
    } else if (ix.unbounded_down() && ix.unbounded_up()) {
      std::vector<long> excluded;
      for (long i = ix.window_lo(); i <= ix.window_hi(); ++i)
        if (!ix.contains(i)) excluded.push_back(i);
      blocks.push_back("{" + fam + "_i : all i} - " + list_block(excluded));
    } else if (ix.unbounded_up()) {
      if (!ix.window_members().empty()) blocks.push_back(list_block(ix.window_members()));
      blocks.push_back("{" + fam + "_i : i >= " + std::to_string(ix.window_hi() + 1) + "}");
    } else {
      blocks.push_back("{" + fam + "_i : i <= " + std::to_string(ix.window_lo() - 1) + "}");
      if (!ix.window_members().empty()) blocks.push_back(list_block(ix.window_members()));
    }
  }

  if (blocks.empty()) return "{}";
  std::string out = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i) out += " + " + blocks[i];
  return out;
}

}  // namespace atomspec::tailspace
