#include "atomspec/spectrum.hpp"

#include <algorithm>
#include <sstream>

namespace atomspec::spectrum {

using tailspace::index_set;
using tailspace::point_ref;
using tailspace::symbolic_set;

namespace {

point_ref as_point(const atom_ref& p) {
  if (p.k == atom_ref::kind::named) return point_ref::named_point(p.name);
  if (p.k == atom_ref::kind::indexed) return point_ref::indexed_point(p.index);
  throw internal_error("class handle where a single point is required");
}

}  // namespace

atom_space atom_space::from_finite(finspace::fin_space space, support_list supports) {
  atom_space a;
  a.live_ = symbolic_set::of_named(space.points());
  a.finite_ = std::move(space);
  a.supports_ = std::move(supports);
  std::sort(a.supports_.begin(), a.supports_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  a.validate_supports();
  return a;
}

atom_space atom_space::from_schema(tailspace::tail_schema schema, support_list supports,
                                   std::map<long, std::string> index_labels) {
  atom_space a;
  a.live_ = schema.whole();
  a.schema_ = std::move(schema);
  a.supports_ = std::move(supports);
  a.index_labels_ = std::move(index_labels);
  std::sort(a.supports_.begin(), a.supports_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  a.validate_supports();
  return a;
}

atom_space atom_space::builtin(const std::string& name) {
  if (name == "grmod_kx") {
    // Supports of the graded modules k[x] and its shifts: the generic atom b
    // together with the simple atoms s_j below the top degree.
    support_entry kx{{{"b"}, index_set::down_tail(0)}, true};
    return from_schema(tailspace::grmod_kx_schema(), {{"k[x]", std::move(kx)}});
  }
  if (name == "goodearl") {
    support_entry b_mod{{{"b"}, index_set::all(tailspace::index_domain::naturals)}, true};
    support_entry tb_mod{{{"b"}, index_set::up_tail(1)}, true};
    return from_schema(tailspace::goodearl_schema(),
                       {{"B", std::move(b_mod)}, {"tB", std::move(tb_mod)}});
  }
  throw input_error("unknown builtin space: " + name);
}

void atom_space::validate_supports() {
  for (const auto& [name, entry] : supports_) {
    if (name.empty()) throw input_error("support with empty name");
    if (!is_open(entry.set)) {
      throw input_error("support " + name + " is not an open set");
    }
  }
}

const finspace::fin_space& atom_space::finite_space() const {
  if (!finite_) throw internal_error("finite_space() on a symbolic atom space");
  return *finite_;
}

const tailspace::tail_schema& atom_space::schema() const {
  if (!schema_) throw internal_error("schema() on a finite atom space");
  return *schema_;
}

const atom_space::support_entry* atom_space::find_support(const std::string& name) const {
  for (const auto& [n, e] : supports_)
    if (n == name) return &e;
  return nullptr;
}

bool atom_space::contains(const atom_ref& p) const {
  switch (p.k) {
    case atom_ref::kind::named:
      return live_.contains_named(p.name);
    case atom_ref::kind::indexed:
      return live_.indexed.contains(p.index);
    case atom_ref::kind::indexed_class:
      return !live_.indexed.empty();
  }
  return false;
}

finspace::subset atom_space::live_mask() const { return mask_of(live_); }

finspace::subset atom_space::mask_of(const symbolic_set& s) const {
  const auto& space = finite_space();
  if (!s.indexed.empty()) throw input_error("finite space has no indexed points");
  finspace::subset m = 0;
  for (const auto& n : s.named) m |= static_cast<finspace::subset>(1u << space.index_of(n));
  return m;
}

symbolic_set atom_space::set_of(finspace::subset m) const {
  return symbolic_set::of_named(subset_names(finite_space(), m));
}

tailspace::symbolic_set atom_space::checked_subset(const symbolic_set& s,
                                                   const char* what) const {
  if (!s.subset_of(live_)) {
    throw input_error(std::string(what) + " is not a subset of the live points");
  }
  if (finite_) mask_of(s);  // validates names and shape
  return s;
}

bool atom_space::is_open(const symbolic_set& s) const {
  if (schema_) return schema_->is_open_within(live_, s);
  const finspace::subset m = mask_of(checked_subset(s, "query set"));
  const finspace::subset lv = live_mask();
  for (finspace::subset o : finite_space().opens())
    if ((o & lv) == m) return true;
  return false;
}

std::vector<long> atom_space::probes(const index_set& s) const { return s.probes(); }

bool atom_space::uniform(const index_set& s, const char* what,
                         const std::function<bool(long)>& f) const {
  const auto ps = s.probes();
  if (ps.empty()) throw internal_error(std::string("probing an empty index class for ") + what);
  const bool first = f(ps.front());
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (f(ps[i]) != first) {
      throw input_error(std::string(what) + " is not uniform across the indexed family");
    }
  }
  return first;
}

tailspace::symbolic_set atom_space::maximal_atoms() const {
  symbolic_set out;
  if (schema_) {
    for (const auto& n : live_.named) {
      if (schema_->is_open_within(live_, symbolic_set::of_named({n}))) out.named.push_back(n);
    }
    if (!live_.indexed.empty()) {
      const bool open = uniform(live_.indexed, "singleton openness", [&](long i) {
        return schema_->is_open_within(live_, symbolic_set::of_indexed(index_set::finite({i})));
      });
      if (open) out.indexed = live_.indexed;
    }
    return out;
  }
  const auto& space = finite_space();
  const finspace::subset lv = live_mask();
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (!(lv >> x & 1u)) continue;
    const finspace::subset sing = static_cast<finspace::subset>(1u << x);
    bool open = false;
    for (finspace::subset o : space.opens())
      if ((o & lv) == sing) {
        open = true;
        break;
      }
    if (open) out.named.push_back(space.point_name(x));
  }
  std::sort(out.named.begin(), out.named.end());
  return out;
}

tailspace::symbolic_set atom_space::order_maximal() const {
  symbolic_set out;
  if (schema_) {
    auto strictly_above = [&](const point_ref& p, const point_ref& q) {
      return schema_->leq_within(live_, p, q) && !schema_->leq_within(live_, q, p);
    };
    for (const auto& n : live_.named) {
      const auto p = point_ref::named_point(n);
      bool maximal = true;
      for (const auto& m : live_.named)
        if (m != n && strictly_above(p, point_ref::named_point(m))) maximal = false;
      if (maximal && !live_.indexed.empty()) {
        if (uniform(live_.indexed, "order comparison against the class",
                    [&](long i) { return strictly_above(p, point_ref::indexed_point(i)); })) {
          maximal = false;
        }
      }
      if (maximal) out.named.push_back(n);
    }
    if (!live_.indexed.empty()) {
      bool maximal = true;
      for (const auto& m : live_.named) {
        if (uniform(live_.indexed, "order comparison against the class", [&](long i) {
              return strictly_above(point_ref::indexed_point(i), point_ref::named_point(m));
            })) {
          maximal = false;
        }
      }
      // Within the class the order is discrete or symmetric whenever answers
      // are uniform, so members never exclude each other.
      if (maximal) out.indexed = live_.indexed;
    }
    return out;
  }
  const auto& space = finite_space();
  const auto pre = space.specialization_preorder();
  const finspace::subset lv = live_mask();
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (!(lv >> x & 1u)) continue;
    bool maximal = true;
    for (std::size_t y = 0; y < space.size() && maximal; ++y) {
      if (y == x || !(lv >> y & 1u)) continue;
      if (pre.leq(x, y) && !pre.leq(y, x)) maximal = false;
    }
    if (maximal) out.named.push_back(space.point_name(x));
  }
  std::sort(out.named.begin(), out.named.end());
  return out;
}

atom_space atom_space::remove_open(const symbolic_set& o) const {
  if (!is_open(o)) {
    throw input_error("remove_open needs an open set of the current subspace");
  }
  atom_space rest = *this;
  rest.live_ = live_.subtract(o);
  // Supports are traced to the surviving points; traces of opens stay open.
  for (auto& [name, entry] : rest.supports_) entry.set = entry.set.intersect(rest.live_);
  return rest;
}

tailspace::symbolic_set atom_space::amin(const symbolic_set& o) const {
  checked_subset(o, "amin target");
  symbolic_set out;
  if (schema_) {
    auto strict = [&](const point_ref& p, const point_ref& q) {
      return schema_->leq_within(live_, p, q) && !schema_->leq_within(live_, q, p);
    };
    for (const auto& n : o.named) {
      const auto p = point_ref::named_point(n);
      bool minimal = true;
      for (const auto& m : o.named)
        if (m != n && strict(point_ref::named_point(m), p)) minimal = false;
      if (minimal && !o.indexed.empty()) {
        if (uniform(o.indexed, "order comparison against the class",
                    [&](long i) { return strict(point_ref::indexed_point(i), p); })) {
          minimal = false;
        }
      }
      if (minimal) out.named.push_back(n);
    }
    if (!o.indexed.empty()) {
      bool minimal = true;
      for (const auto& m : o.named) {
        if (uniform(o.indexed, "order comparison against the class", [&](long i) {
              return strict(point_ref::named_point(m), point_ref::indexed_point(i));
            })) {
          minimal = false;
        }
      }
      if (minimal) {
        // Guard against an index-dependent order inside the class itself.
        const auto ps = o.indexed.probes();
        for (long i : ps)
          for (long j : ps)
            if (i != j && strict(point_ref::indexed_point(i), point_ref::indexed_point(j))) {
              throw input_error("order within the indexed class is not uniform");
            }
        out.indexed = o.indexed;
      }
    }
    return out;
  }
  const auto& space = finite_space();
  const auto pre = space.specialization_preorder();
  const finspace::subset om = mask_of(o);
  for (std::size_t x = 0; x < space.size(); ++x) {
    if (!(om >> x & 1u)) continue;
    bool minimal = true;
    for (std::size_t y = 0; y < space.size() && minimal; ++y) {
      if (y == x || !(om >> y & 1u)) continue;
      if (pre.leq(y, x) && !pre.leq(x, y)) minimal = false;
    }
    if (minimal) out.named.push_back(space.point_name(x));
  }
  std::sort(out.named.begin(), out.named.end());
  return out;
}

tailspace::symbolic_set atom_space::lambda(const atom_ref& p) const {
  if (p.k == atom_ref::kind::indexed_class) {
    throw input_error("lambda of the whole class is index-dependent; ask per point");
  }
  if (schema_) return schema_->minimal_open_within(live_, as_point(p));
  const auto& space = finite_space();
  const std::size_t x = space.index_of(p.name);
  if (!contains(p)) throw input_error(p.name + " is not in the live set");
  return set_of(space.minimal_open(x) & live_mask());
}

bool atom_space::lambda_open(const atom_ref& p) const {
  if (p.k == atom_ref::kind::indexed_class) {
    return uniform(live_.indexed, "lambda openness",
                   [&](long i) { return is_open(lambda(atom_ref::indexed_point(i))); });
  }
  return is_open(lambda(p));
}

std::vector<atom_space::lambda_entry> atom_space::lambda_open_report(
    const symbolic_set& pts) const {
  checked_subset(pts, "lambda report set");
  std::vector<lambda_entry> out;
  for (const auto& n : pts.named) {
    out.push_back({atom_ref::named_point(n), lambda_open(atom_ref::named_point(n))});
  }
  if (!pts.indexed.empty()) {
    const bool open = uniform(pts.indexed, "lambda openness",
                              [&](long i) { return is_open(lambda(atom_ref::indexed_point(i))); });
    out.push_back({atom_ref::whole_class(), open});
  }
  return out;
}

bool atom_space::leq(const atom_ref& p, const atom_ref& q) const {
  if (p.k == atom_ref::kind::indexed_class && q.k == atom_ref::kind::indexed_class) {
    throw input_error("class-to-class order comparison is ambiguous");
  }
  if (p.k == atom_ref::kind::indexed_class) {
    return uniform(live_.indexed, "order comparison",
                   [&](long i) { return leq(atom_ref::indexed_point(i), q); });
  }
  if (q.k == atom_ref::kind::indexed_class) {
    return uniform(live_.indexed, "order comparison",
                   [&](long i) { return leq(p, atom_ref::indexed_point(i)); });
  }
  if (schema_) return schema_->leq_within(live_, as_point(p), as_point(q));
  const auto& space = finite_space();
  if (!contains(p) || !contains(q)) throw input_error("order query outside the live set");
  return (space.minimal_open(space.index_of(p.name)) >> space.index_of(q.name) & 1u) != 0;
}

bool atom_space::is_kolmogorov() const {
  if (!schema_) {
    const auto& space = finite_space();
    const auto pre = space.specialization_preorder();
    const finspace::subset lv = live_mask();
    for (std::size_t x = 0; x < space.size(); ++x)
      for (std::size_t y = x + 1; y < space.size(); ++y) {
        if (!(lv >> x & 1u) || !(lv >> y & 1u)) continue;
        if (pre.leq(x, y) && pre.leq(y, x)) return false;
      }
    return true;
  }
  auto mutual = [&](const point_ref& a, const point_ref& b) {
    return schema_->leq_within(live_, a, b) && schema_->leq_within(live_, b, a);
  };
  for (const auto& n : live_.named)
    for (const auto& m : live_.named)
      if (n < m && mutual(point_ref::named_point(n), point_ref::named_point(m))) return false;
  if (!live_.indexed.empty()) {
    for (const auto& n : live_.named) {
      if (uniform(live_.indexed, "order comparison", [&](long i) {
            return mutual(point_ref::named_point(n), point_ref::indexed_point(i));
          })) {
        return false;
      }
    }
    const auto ps = live_.indexed.probes();
    for (long i : ps)
      for (long j : ps)
        if (i < j && mutual(point_ref::indexed_point(i), point_ref::indexed_point(j))) {
          return false;
        }
  }
  return true;
}

tailspace::alexandroff_report atom_space::check_alexandroff() const {
  if (schema_) {
    // The schema-level check answers for the full space; on a subspace walk
    // the live points directly.
    for (const auto& n : live_.named) {
      const auto u = lambda(atom_ref::named_point(n));
      if (!is_open(u)) return {false, n, u};
    }
    if (!live_.indexed.empty()) {
      std::optional<symbolic_set> sample;
      const bool open = uniform(live_.indexed, "lambda openness", [&](long i) {
        const auto u = lambda(atom_ref::indexed_point(i));
        const bool ok = is_open(u);
        if (!ok && !sample) sample = u;
        return ok;
      });
      if (!open) return {false, schema_->class_display(), sample};
    }
    return {true, std::nullopt, std::nullopt};
  }
  // A finite space is Alexandroff outright: minimal opens are finite
  // intersections of opens.
  return {true, std::nullopt, std::nullopt};
}

atom_space atom_space::completed() const {
  if (!schema_) return *this;
  atom_space c = *this;
  c.schema_ = schema_->completion();
  c.validate_supports();
  return c;
}

std::string atom_space::display(const atom_ref& p) const {
  switch (p.k) {
    case atom_ref::kind::named:
      return p.name;
    case atom_ref::kind::indexed: {
      auto it = index_labels_.find(p.index);
      if (it != index_labels_.end()) return it->second;
      return schema().display(point_ref::indexed_point(p.index));
    }
    case atom_ref::kind::indexed_class:
      return schema().class_display();
  }
  return {};
}

std::string atom_space::set_to_string(const symbolic_set& s) const {
  if (schema_) {
    return tailspace::to_string(s, *schema_, index_labels_.empty() ? nullptr : &index_labels_);
  }
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < s.named.size(); ++i) out << (i ? ", " : "") << s.named[i];
  out << "}";
  return out.str();
}

}  // namespace atomspec::spectrum
