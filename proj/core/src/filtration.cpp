#include "atomspec/filtration.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace atomspec::filtration {

using spectrum::atom_ref;
using spectrum::atom_space;
using tailspace::index_set;
using tailspace::symbolic_set;

long dim_value::value() const {
  if (!is_finite()) throw internal_error("value() of a non-finite dimension");
  return n_;
}

std::string dim_value::str() const {
  switch (k_) {
    case kind::finite:
      return std::to_string(n_);
    case kind::omega:
      return ">=omega";
    case kind::none:
      return "does-not-exist";
  }
  return {};
}

filtration_result gabriel_filtration(const atom_space& a, std::size_t stage_cap) {
  filtration_result r;
  r.all_points = a.live();
  atom_space cur = a;
  while (!cur.live().empty()) {
    if (r.stages.size() >= stage_cap) {
      r.residual = cur.live();
      r.cap_hit = true;
      break;
    }
    const symbolic_set m = cur.maximal_atoms();
    if (m.empty()) {
      // No open singletons left: the peeling is genuinely stuck and the
      // survivors sit at stage omega or beyond.
      r.residual = cur.live();
      break;
    }
    r.stages.push_back(m);
    cur = cur.remove_open(m);
  }
  return r;
}

namespace {

template <typename F>
auto uniform_probe(const index_set& s, const char* what, F&& f) {
  const auto ps = s.probes();
  if (ps.empty()) throw internal_error(std::string("probing an empty class for ") + what);
  auto v = f(ps.front());
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (f(ps[i]) != v) {
      throw input_error(std::string(what) + " is not uniform across the indexed family");
    }
  }
  return v;
}

bool strict_point(const atom_space& a, const atom_ref& p, const atom_ref& q) {
  return a.leq(p, q) && !a.leq(q, p);
}

// Strictness between handles; class handles are resolved on the probes of
// `cls` (the index set the class handle stands for).
bool strict_handle(const atom_space& a, const index_set& cls, const atom_ref& p,
                   const atom_ref& q) {
  if (p.k == atom_ref::kind::indexed_class && q.k == atom_ref::kind::indexed_class) return false;
  if (p.k == atom_ref::kind::indexed_class) {
    return uniform_probe(cls, "order comparison", [&](long i) {
      return strict_point(a, atom_ref::indexed_point(i), q);
    });
  }
  if (q.k == atom_ref::kind::indexed_class) {
    return uniform_probe(cls, "order comparison", [&](long i) {
      return strict_point(a, p, atom_ref::indexed_point(i));
    });
  }
  return strict_point(a, p, q);
}

// Longest strict chain length per point of the finite backend, restricted to
// a point mask; -1 outside the mask.
std::vector<long> finite_heights(const atom_space& a, finspace::subset within) {
  const auto& sp = a.finite_space();
  const auto pre = sp.specialization_preorder();
  const std::size_t n = sp.size();
  std::vector<long> memo(n, -2);
  std::function<long(std::size_t)> h = [&](std::size_t x) -> long {
    if (!(within >> x & 1u)) return -1;
    if (memo[x] != -2) return memo[x];
    long best = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x || !(within >> y & 1u)) continue;
      if (pre.leq(x, y) && !pre.leq(y, x)) best = std::max(best, 1 + h(y));
    }
    memo[x] = best;
    return best;
  };
  for (std::size_t x = 0; x < n; ++x) h(x);
  return memo;
}

// Node graph for symbolic chain computations: the named points of `within`
// plus one node for the indexed part (either a pinned single index or the
// whole class evaluated on probes).  A chain can only ever use one member of
// the class: a strict relation inside it would not be index-uniform.
struct chain_graph {
  std::vector<atom_ref> nodes;
  std::vector<char> strict;

  bool edge(std::size_t u, std::size_t v) const { return strict[u * nodes.size() + v] != 0; }
};

chain_graph build_chain_graph(const atom_space& a, const symbolic_set& within,
                              std::optional<long> pinned_index) {
  chain_graph g;
  for (const auto& nm : within.named) g.nodes.push_back(atom_ref::named_point(nm));
  std::optional<std::size_t> cls;
  if (pinned_index) {
    g.nodes.push_back(atom_ref::indexed_point(*pinned_index));
    cls = g.nodes.size() - 1;
  } else if (!within.indexed.empty()) {
    g.nodes.push_back(atom_ref::whole_class());
    cls = g.nodes.size() - 1;
  }
  const std::size_t n = g.nodes.size();
  g.strict.assign(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const bool u_cls = cls && u == *cls && !pinned_index;
      const bool v_cls = cls && v == *cls && !pinned_index;
      bool s = false;
      if (u_cls || v_cls) {
        s = strict_handle(a, within.indexed, g.nodes[u], g.nodes[v]);
      } else {
        s = strict_point(a, g.nodes[u], g.nodes[v]);
      }
      g.strict[u * n + v] = s ? 1 : 0;
    }
  }
  if (cls && !pinned_index) {
    // The class node is sound only if members are mutually unrelated.
    const auto ps = within.indexed.probes();
    for (long i : ps)
      for (long j : ps)
        if (i != j &&
            strict_point(a, atom_ref::indexed_point(i), atom_ref::indexed_point(j))) {
          throw input_error("order within the indexed class is not uniform");
        }
  }
  return g;
}

std::vector<long> graph_heights(const chain_graph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<long> memo(n, -2);
  std::function<long(std::size_t)> h = [&](std::size_t u) -> long {
    if (memo[u] != -2) return memo[u];
    long best = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (v != u && g.edge(u, v)) best = std::max(best, 1 + h(v));
    memo[u] = best;
    return best;
  };
  for (std::size_t u = 0; u < n; ++u) h(u);
  return memo;
}

}  // namespace

dim_value stage_of(const filtration_result& f, const atom_ref& p) {
  switch (p.k) {
    case atom_ref::kind::named: {
      for (std::size_t k = 0; k < f.stages.size(); ++k)
        if (f.stages[k].contains_named(p.name)) return dim_value::finite(static_cast<long>(k));
      if (f.residual.contains_named(p.name)) return dim_value::omega();
      throw input_error("unknown point " + p.name + " in stage lookup");
    }
    case atom_ref::kind::indexed: {
      for (std::size_t k = 0; k < f.stages.size(); ++k)
        if (f.stages[k].indexed.contains(p.index)) return dim_value::finite(static_cast<long>(k));
      if (f.residual.indexed.contains(p.index)) return dim_value::omega();
      throw input_error("unknown indexed point in stage lookup");
    }
    case atom_ref::kind::indexed_class:
      return uniform_probe(f.all_points.indexed, "stage",
                           [&](long i) { return stage_of(f, atom_ref::indexed_point(i)); });
  }
  throw internal_error("bad atom_ref");
}

dim_value gkdim_point(const filtration_result& f, const atom_ref& p) { return stage_of(f, p); }

dim_value gkdim_open(const filtration_result& f, const symbolic_set& o) {
  if (!o.subset_of(f.all_points)) {
    throw input_error("gkdim target mentions points outside the space");
  }
  if (o.empty()) return dim_value::finite(-1);
  if (!f.residual.intersect(o).empty()) return dim_value::omega();
  for (std::size_t k = f.stages.size(); k-- > 0;)
    if (!f.stages[k].intersect(o).empty()) return dim_value::finite(static_cast<long>(k));
  throw internal_error("point set met no stage and no residual");
}

long chain_above(const atom_space& a, const atom_ref& p) {
  if (!a.symbolic()) {
    const auto heights = finite_heights(a, a.live_mask());
    return heights[a.finite_space().index_of(p.name)];
  }
  switch (p.k) {
    case atom_ref::kind::named: {
      const auto g = build_chain_graph(a, a.live(), std::nullopt);
      const auto h = graph_heights(g);
      for (std::size_t u = 0; u < g.nodes.size(); ++u)
        if (g.nodes[u] == atom_ref::named_point(p.name)) return h[u];
      throw input_error("unknown point " + p.name);
    }
    case atom_ref::kind::indexed: {
      const auto g = build_chain_graph(a, a.live(), p.index);
      // A longer chain through a second class member would need a named point
      // strictly between two members, which transitivity turns into a strict
      // relation inside the class; reject that as non-uniform.
      const index_set rest = a.live().indexed.subtract(index_set::finite({p.index}));
      if (!rest.empty()) {
        for (const auto& nm : a.live().named) {
          const auto q = atom_ref::named_point(nm);
          if (strict_point(a, p, q) &&
              uniform_probe(rest, "order comparison", [&](long j) {
                return strict_point(a, q, atom_ref::indexed_point(j));
              })) {
            throw input_error("order within the indexed class is not uniform");
          }
        }
      }
      const auto h = graph_heights(g);
      return h.back();  // the pinned node is last
    }
    case atom_ref::kind::indexed_class:
      return uniform_probe(a.live().indexed, "chain length",
                           [&](long i) { return chain_above(a, atom_ref::indexed_point(i)); });
  }
  throw internal_error("bad atom_ref");
}

long chain_within(const atom_space& a, const symbolic_set& o) {
  if (o.empty()) return -1;
  if (!a.symbolic()) {
    const auto heights = finite_heights(a, a.mask_of(o));
    long best = -1;
    for (const auto& nm : o.named) {
      best = std::max(best, heights[a.finite_space().index_of(nm)]);
    }
    return best;
  }
  const auto g = build_chain_graph(a, o, std::nullopt);
  const auto h = graph_heights(g);
  long best = -1;
  for (std::size_t u = 0; u < g.nodes.size(); ++u) best = std::max(best, h[u]);
  return best;
}

dim_value dim_point(const atom_space& a, const filtration_result& f, const atom_ref& p) {
  const dim_value st = stage_of(f, p);
  if (!st.is_finite()) {
    throw input_error("stage of " + a.display(p) + " is undefined (>= omega)");
  }
  return chain_above(a, p) >= st.value() ? st : dim_value::none();
}

namespace {

// Certified dimension without throwing: nullopt means "no finite stage".
std::optional<dim_value> certified_dim(const atom_space& a, const filtration_result& f,
                                       const atom_ref& p) {
  const dim_value st = stage_of(f, p);
  if (!st.is_finite()) return std::nullopt;
  return chain_above(a, p) >= st.value() ? st : dim_value::none();
}

}  // namespace

dim_value dim_open(const atom_space& a, const filtration_result& f, const symbolic_set& o) {
  if (o.empty()) return dim_value::finite(-1);
  std::optional<long> best;
  auto consider = [&](const atom_ref& p) {
    const auto d = certified_dim(a, f, p);
    if (d && d->exists() && (!best || d->value() > *best)) best = d->value();
  };
  for (const auto& nm : o.named) consider(atom_ref::named_point(nm));
  if (!o.indexed.empty()) {
    // -2: no finite stage, -3: stage not certified by a chain, else the value.
    const long code = uniform_probe(o.indexed, "certified dimension", [&](long i) {
      const auto d = certified_dim(a, f, atom_ref::indexed_point(i));
      if (!d) return -2L;
      if (!d->exists()) return -3L;
      return d->value();
    });
    if (code >= -1 && (!best || code > *best)) best = code;
  }
  return best ? dim_value::finite(*best) : dim_value::none();
}

dim_value adim_point(const atom_space& a, const atom_ref& p) {
  return dim_value::finite(chain_above(a, p));
}

dim_value adim_open(const atom_space& a, const symbolic_set& o) {
  return dim_value::finite(chain_within(a, o));
}

bool theorem_report::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const theorem_item& i) { return i.pass; });
}

theorem_report verify_theorems(const atom_space& a, std::size_t stage_cap) {
  theorem_report r;
  r.kolmogorov = a.is_kolmogorov();
  const auto alex = a.check_alexandroff();
  r.alexandroff = alex.alexandroff;
  r.alexandroff_witness = alex.witness_point;
  const auto f = gabriel_filtration(a, stage_cap);

  std::vector<atom_ref> handles;
  for (const auto& nm : a.live().named) handles.push_back(atom_ref::named_point(nm));
  const bool has_class = a.symbolic() && !a.live().indexed.empty();
  if (has_class) handles.push_back(atom_ref::whole_class());
  const index_set cls = a.live().indexed;

  auto handle_in = [&](const atom_ref& p, const symbolic_set& s) {
    if (p.k == atom_ref::kind::named) return s.contains_named(p.name);
    return !s.indexed.empty();
  };

  // Opens the dimension items are evaluated on: the whole space, every named
  // support, and (finite backend) every open of the subspace.
  std::vector<symbolic_set> test_opens;
  test_opens.push_back(a.live());
  for (const auto& [name, entry] : a.supports()) test_opens.push_back(entry.set);
  if (!a.symbolic()) {
    std::vector<finspace::subset> traces;
    const finspace::subset lv = a.live_mask();
    for (finspace::subset o : a.finite_space().opens()) traces.push_back(o & lv);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    for (finspace::subset t : traces) test_opens.push_back(a.set_of(t));
  }

  auto& i1 = r.items[0];
  i1.name = "dim<=gkdim";
  for (const auto& p : handles) {
    const auto d = certified_dim(a, f, p);
    if (d && d->exists() && *d != stage_of(f, p)) {
      i1.pass = false;
      i1.witnesses.push_back(a.display(p));
    }
  }
  for (const auto& o : test_opens) {
    const auto dv = dim_open(a, f, o);
    const auto gv = gkdim_open(f, o);
    if (dv.is_finite() && gv.is_finite() && dv.value() > gv.value()) {
      i1.pass = false;
      i1.witnesses.push_back(a.set_to_string(o));
    }
  }

  auto& i2 = r.items[1];
  i2.name = "chains-descend";
  for (const auto& p : handles) {
    for (const auto& q : handles) {
      if (p == q || !strict_handle(a, cls, p, q)) continue;
      const auto sp = stage_of(f, p);
      const auto sq = stage_of(f, q);
      const bool ok = sp.is_omega() || (sp.is_finite() && sq.is_finite() && sq.value() < sp.value());
      if (!ok) {
        i2.pass = false;
        i2.witnesses.push_back(a.display(p) + " < " + a.display(q));
      }
    }
  }

  auto& i3 = r.items[2];
  i3.name = "stage-antichain";
  for (std::size_t k = 0; k < f.stages.size(); ++k) {
    const auto& s = f.stages[k];
    std::vector<atom_ref> members;
    for (const auto& nm : s.named) members.push_back(atom_ref::named_point(nm));
    if (!s.indexed.empty()) members.push_back(atom_ref::whole_class());
    for (const auto& p : members)
      for (const auto& q : members)
        if (!(p == q) && strict_handle(a, s.indexed, p, q)) {
          i3.pass = false;
          i3.witnesses.push_back("stage " + std::to_string(k) + ": " + a.display(p) + " < " +
                                 a.display(q));
        }
    if (!s.indexed.empty()) {
      const auto ps = s.indexed.probes();
      for (long i : ps)
        for (long j : ps)
          if (i != j && strict_point(a, atom_ref::indexed_point(i), atom_ref::indexed_point(j))) {
            i3.pass = false;
            i3.witnesses.push_back("stage " + std::to_string(k) + ": class order");
          }
    }
  }

  auto& i4 = r.items[3];
  i4.name = "stage-shift";
  if (f.stages.empty()) {
    i4.applicable = false;
    i4.note = "no stage 0 to remove";
  } else {
    const auto rest = a.remove_open(f.stages[0]);
    const auto f2 = gabriel_filtration(rest, stage_cap);
    const std::vector<symbolic_set> expect(f.stages.begin() + 1, f.stages.end());
    if (f2.stages != expect || !(f2.residual == f.residual)) {
      i4.pass = false;
      i4.witnesses.push_back("stages after removal differ from the tail of the original");
    }
  }

  auto& i5 = r.items[4];
  i5.name = "alexchar";
  if (!r.kolmogorov) {
    i5.applicable = false;
    i5.note = "order is not antisymmetric";
  } else {
    const auto maximal = a.maximal_atoms();
    std::vector<std::string> violations;
    for (const auto& p : handles) {
      if (handle_in(p, maximal)) continue;
      const auto sp = stage_of(f, p);
      if (!sp.is_finite()) {
        violations.push_back(a.display(p) + " (no finite stage)");
        continue;
      }
      bool found = false;
      for (const auto& q : handles) {
        if (p == q || !strict_handle(a, cls, p, q)) continue;
        const auto sq = stage_of(f, q);
        if (sq.is_finite() && sq.value() == sp.value() - 1) {
          found = true;
          break;
        }
      }
      if (!found) violations.push_back(a.display(p) + " (no successor one stage down)");
    }
    i5.witnesses = violations;
    i5.pass = violations.empty() == r.alexandroff;
    i5.note = r.alexandroff ? "space is Alexandroff; no violation expected"
                            : "space is not Alexandroff; a violation must appear";
  }

  auto& i6 = r.items[5];
  i6.name = "dim-exists";
  if (!r.alexandroff || !r.kolmogorov) {
    i6.applicable = false;
    i6.note = "needs an Alexandroff space with antisymmetric order";
  } else {
    for (const auto& p : handles) {
      const auto d = certified_dim(a, f, p);
      if (!d || !d->exists() || *d != stage_of(f, p)) {
        i6.pass = false;
        i6.witnesses.push_back(a.display(p));
      }
    }
  }

  auto& i7 = r.items[6];
  i7.name = "adim-agrees";
  if (!r.alexandroff || !r.kolmogorov) {
    i7.applicable = false;
    i7.note = "needs an Alexandroff space with antisymmetric order";
  } else {
    for (const auto& p : handles) {
      const auto ad = adim_point(a, p);
      if (!(ad == stage_of(f, p))) {
        i7.pass = false;
        i7.witnesses.push_back(a.display(p));
      }
    }
    for (const auto& o : test_opens) {
      const auto ad = adim_open(a, o);
      const auto gv = gkdim_open(f, o);
      const auto dv = dim_open(a, f, o);
      const bool ok = ad == gv && (o.empty() ? dv == dim_value::finite(-1) : dv == gv);
      if (!ok) {
        i7.pass = false;
        i7.witnesses.push_back(a.set_to_string(o));
      }
    }
  }

  return r;
}

}  // namespace atomspec::filtration
