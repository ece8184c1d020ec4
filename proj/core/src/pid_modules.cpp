#include "atomspec/pid_modules.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

#include "atomspec/tailspace.hpp"

namespace atomspec::pid {

using spectrum::atom_space;
using tailspace::index_set;
using tailspace::symbolic_set;

template <typename Ring>
presented_module<Ring> presented_module<Ring>::make(
    Ring ring, std::size_t generators,
    std::vector<std::vector<typename Ring::elem>> relator_columns) {
  matrix<Ring> rel(generators, relator_columns.size(), ring.zero());
  for (std::size_t j = 0; j < relator_columns.size(); ++j) {
    if (relator_columns[j].size() != generators) {
      throw input_error("relator column length does not match the generator count");
    }
    for (std::size_t i = 0; i < generators; ++i) rel.at(i, j) = relator_columns[j][i];
  }
  return presented_module<Ring>{std::move(ring), generators, std::move(rel)};
}

template <typename Ring>
decomposition<Ring> decompose(const presented_module<Ring>& m) {
  const auto snf = smith_normal_form(m.ring, m.relations);
  decomposition<Ring> d;
  d.free_rank = snf.free_rank;
  for (const auto& f : snf.invariant_factors) {
    if (!m.ring.is_unit(f)) d.torsion.push_back(f);
  }
  return d;
}

template <typename Ring>
spectrum::atom_space spec_model(const Ring& ring, std::size_t display_bound) {
  if (display_bound < 1) throw input_error("display bound must be at least 1");
  auto schema = tailspace::tail_schema::make(
      {generic_point_name()}, tailspace::index_domain::naturals, "m",
      {{tailspace::descriptor::kind::singletons, "", tailspace::tail_dir::up},
       {tailspace::descriptor::kind::cone, generic_point_name(), tailspace::tail_dir::up}});
  std::map<long, std::string> labels;
  for (std::size_t i = 0; i < display_bound; ++i) {
    labels[static_cast<long>(i)] = "(" + ring.str(ring.nth_prime(i)) + ")";
  }
  return atom_space::from_schema(std::move(schema), {}, std::move(labels));
}

std::string critical_str(const std::optional<long>& c) {
  return c ? std::to_string(*c) + "-critical" : "none";
}

namespace {

// Distinct prime divisors across all torsion factors, as spec-model indices.
template <typename Ring>
std::vector<long> torsion_prime_indices(const Ring& ring,
                                        const std::vector<typename Ring::elem>& torsion) {
  std::set<long> idx;
  for (const auto& d : torsion) {
    for (const auto& [p, mult] : ring.factor(d)) {
      idx.insert(static_cast<long>(ring.prime_index(p)));
    }
  }
  return {idx.begin(), idx.end()};
}

template <typename Ring>
std::string render_points(const Ring& ring, const symbolic_set& s, const symbolic_set& whole) {
  if (s == whole) return "all";
  if (s.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (const auto& n : s.named) {
    if (!std::exchange(first, false)) out += ", ";
    out += n;
  }
  if (!s.indexed.is_finite()) throw internal_error("unexpected infinite point set in a report");
  for (long i : s.indexed.finite_elements()) {
    if (!std::exchange(first, false)) out += ", ";
    out += "(" + ring.str(ring.nth_prime(static_cast<std::size_t>(i))) + ")";
  }
  return out + "}";
}

}  // namespace

template <typename Ring>
module_analysis analyze(const presented_module<Ring>& m, std::size_t display_bound) {
  const auto dec = decompose(m);
  const Ring& ring = m.ring;

  module_analysis a;
  a.ring_name = ring.name();
  a.generators = m.generators;
  a.free_rank = dec.free_rank;
  for (const auto& d : dec.torsion) a.torsion.push_back(ring.str(d));
  a.zero = dec.free_rank == 0 && dec.torsion.empty();

  const auto model = spec_model(ring, display_bound);
  const symbolic_set whole = model.live();
  const auto prime_idx = torsion_prime_indices(ring, dec.torsion);
  const symbolic_set maximal_part = symbolic_set::of_indexed(index_set::finite(prime_idx));

  if (a.zero) {
    a.gkdim = a.kdim = -1;
    // asupp, aass, amin, lambda: empty except lambda, which is everything
    // (every torsion part of the zero module vanishes).
    a.lambda = whole;
  } else if (dec.free_rank > 0) {
    a.gkdim = a.kdim = 1;
    a.asupp = whole;
    a.aass = symbolic_set::of_named({generic_point_name()}).unite(maximal_part);
    a.amin = symbolic_set::of_named({generic_point_name()});
    a.lambda = lambda_m(m);
  } else {
    a.gkdim = a.kdim = 0;
    a.asupp = maximal_part;
    a.aass = maximal_part;
    a.amin = maximal_part;
    a.lambda = lambda_m(m);
  }

  const auto filt = filtration::gabriel_filtration(model);
  a.dim = filtration::dim_open(model, filt, a.asupp);
  a.adim = filtration::adim_open(model, a.asupp);

  a.asupp_str = render_points(ring, a.asupp, whole);
  a.aass_str = render_points(ring, a.aass, whole);
  a.amin_str = render_points(ring, a.amin, whole);
  a.lambda_str = render_points(ring, a.lambda, whole);

  a.simple = dec.free_rank == 0 && dec.torsion.size() == 1 && ring.is_prime_elem(dec.torsion[0]);
  const bool is_ring = dec.free_rank == 1 && dec.torsion.empty();
  a.monoform = a.simple || is_ring;
  a.compressible = a.monoform;
  if (a.simple) {
    a.critical = 0;
  } else if (is_ring) {
    a.critical = 1;
  }
  a.atomic_critical = a.critical;
  return a;
}

template <typename Ring>
presented_module<Ring> t_alpha(const presented_module<Ring>& m,
                               const std::optional<typename Ring::elem>& alpha) {
  const Ring& ring = m.ring;
  typename Ring::elem p = ring.zero();
  if (alpha) {
    p = *alpha;
    if (!ring.is_prime_elem(p)) throw input_error(ring.str(p) + " is not a prime of " + ring.name());
    p = ring.mul(ring.canonical_unit(p), p);
  }

  const auto dec = decompose(m);
  std::vector<std::vector<typename Ring::elem>> columns;
  std::vector<typename Ring::elem> kept;
  for (auto d : dec.torsion) {
    if (alpha) {
      while (true) {
        auto [q, r] = ring.divmod(d, p);
        if (!ring.is_zero(r)) break;
        d = q;
      }
      d = ring.mul(ring.canonical_unit(d), d);
      if (ring.is_unit(d)) continue;  // the factor was a pure p-power
    }
    kept.push_back(d);
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<typename Ring::elem> col(kept.size(), ring.zero());
    col[i] = kept[i];
    columns.push_back(std::move(col));
  }
  return presented_module<Ring>::make(ring, kept.size(), std::move(columns));
}

template <typename Ring>
tailspace::symbolic_set lambda_m(const presented_module<Ring>& m) {
  const Ring& ring = m.ring;
  const auto dec = decompose(m);
  if (dec.torsion.empty()) {
    // No torsion: every t_alpha vanishes, so lambda is the whole spectrum.
    return symbolic_set::of_named({generic_point_name()})
        .unite(symbolic_set::of_indexed(index_set::all(tailspace::index_domain::naturals)));
  }
  const auto idx = torsion_prime_indices(ring, dec.torsion);
  if (idx.size() == 1) {
    // All torsion lives at one prime: t_p removes it entirely.
    return symbolic_set::of_indexed(index_set::finite(idx));
  }
  return {};
}

namespace {

// Dense element-set representation for subgroups of a finite abelian group
// of order <= 256.
struct elem_mask {
  std::array<std::uint64_t, 4> bits{};
  bool operator<(const elem_mask& o) const { return bits < o.bits; }
  bool test(std::size_t i) const { return bits[i / 64] >> (i % 64) & 1u; }
  void set(std::size_t i) { bits[i / 64] |= std::uint64_t(1) << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : bits) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
};

}  // namespace

bool monoform_bruteforce(const presented_module<integer_ring>& m, std::size_t bound) {
  const integer_ring ring;
  const auto dec = decompose(m);
  if (dec.free_rank > 0) {
    throw input_error("the exhaustive check needs a finite torsion module");
  }
  mpz_class order = 1;
  for (const auto& d : dec.torsion) order *= d;
  if (order > static_cast<unsigned long>(bound)) {
    throw input_error("module order exceeds the exhaustive-check bound");
  }
  if (order == 1) return false;  // the zero object is not monoform
  const std::size_t n = order.get_ui();
  const std::size_t k = dec.torsion.size();

  std::vector<long> mods(k);
  for (std::size_t i = 0; i < k; ++i) mods[i] = dec.torsion[i].get_si();

  // Mixed-radix codes <-> tuples in the cyclic factors.
  auto decode = [&](std::size_t code) {
    std::vector<long> t(k);
    for (std::size_t i = 0; i < k; ++i) {
      t[i] = static_cast<long>(code) % mods[i];
      code /= static_cast<std::size_t>(mods[i]);
    }
    return t;
  };
  auto encode = [&](const std::vector<long>& t) {
    std::size_t code = 0;
    for (std::size_t i = k; i-- > 0;) code = code * static_cast<std::size_t>(mods[i]) +
                                             static_cast<std::size_t>(t[i]);
    return code;
  };
  std::vector<std::size_t> add_table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto tx = decode(x);
    for (std::size_t y = 0; y < n; ++y) {
      auto ty = decode(y);
      for (std::size_t i = 0; i < k; ++i) ty[i] = (ty[i] + tx[i]) % mods[i];
      add_table[x * n + y] = encode(ty);
    }
  }
  std::vector<long> elem_order(n, 1);
  for (std::size_t x = 1; x < n; ++x) {
    std::size_t cur = x;
    long ord = 1;
    while (cur != 0) {
      cur = add_table[cur * n + x];
      ++ord;
    }
    elem_order[x] = ord;
  }

  auto closure = [&](elem_mask seed) {
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < n; ++i)
      if (seed.test(i)) gens.push_back(i);
    elem_mask out;
    out.set(0);
    std::deque<std::size_t> work{0};
    while (!work.empty()) {
      const std::size_t u = work.front();
      work.pop_front();
      for (std::size_t g : gens) {
        const std::size_t v = add_table[u * n + g];
        if (!out.test(v)) {
          out.set(v);
          work.push_back(v);
        }
      }
    }
    return out;
  };

  // Invariant factors of M/N: the diagonal relations of M plus one column
  // per element of N, lifted to the free cover.
  auto quotient_factors = [&](const elem_mask& sub) {
    std::vector<std::vector<mpz_class>> cols;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<mpz_class> col(k, 0);
      col[i] = dec.torsion[i];
      cols.push_back(std::move(col));
    }
    for (std::size_t x = 1; x < n; ++x) {
      if (!sub.test(x)) continue;
      const auto t = decode(x);
      cols.emplace_back(t.begin(), t.end());
    }
    const auto q = presented_module<integer_ring>::make(ring, k, std::move(cols));
    return decompose(q).torsion;
  };

  // Does Z/c embed into the group with the given invariant factors?  True
  // iff every prime power of c fits under the largest factor's valuation.
  auto cyclic_embeds = [&](long c, const std::vector<mpz_class>& factors) {
    if (factors.empty()) return false;
    for (const auto& [p, mult] : ring.factor(mpz_class(c))) {
      unsigned best = 0;
      for (const auto& f : factors) {
        unsigned v = 0;
        mpz_class cur = f;
        while (cur % p == 0) {
          cur /= p;
          ++v;
        }
        best = std::max(best, v);
      }
      if (best < mult) return false;
    }
    return true;
  };

  elem_mask zero_only;
  zero_only.set(0);
  std::set<elem_mask> seen{zero_only};
  std::deque<elem_mask> queue{zero_only};
  while (!queue.empty()) {
    const elem_mask sub = queue.front();
    queue.pop_front();

    if (sub.count() > 1) {
      const auto qf = quotient_factors(sub);
      for (std::size_t x = 1; x < n; ++x) {
        if (cyclic_embeds(elem_order[x], qf)) return false;  // witness found
      }
    }

    for (std::size_t y = 1; y < n; ++y) {
      if (sub.test(y)) continue;
      elem_mask seed = sub;
      seed.set(y);
      auto child = closure(seed);
      if (seen.insert(child).second) queue.push_back(child);
    }
  }
  return true;
}

template struct presented_module<integer_ring>;
template struct presented_module<fp_poly_ring>;
template decomposition<integer_ring> decompose(const presented_module<integer_ring>&);
template decomposition<fp_poly_ring> decompose(const presented_module<fp_poly_ring>&);
template spectrum::atom_space spec_model(const integer_ring&, std::size_t);
template spectrum::atom_space spec_model(const fp_poly_ring&, std::size_t);
template module_analysis analyze(const presented_module<integer_ring>&, std::size_t);
template module_analysis analyze(const presented_module<fp_poly_ring>&, std::size_t);
template presented_module<integer_ring> t_alpha(const presented_module<integer_ring>&,
                                                const std::optional<integer_ring::elem>&);
template presented_module<fp_poly_ring> t_alpha(const presented_module<fp_poly_ring>&,
                                                const std::optional<fp_poly_ring::elem>&);
template tailspace::symbolic_set lambda_m(const presented_module<integer_ring>&);
template tailspace::symbolic_set lambda_m(const presented_module<fp_poly_ring>&);

}  // namespace atomspec::pid
