#include "atomspec/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "atomspec/errors.hpp"
#include "atomspec/filtration.hpp"
#include "atomspec/finspace.hpp"
#include "atomspec/oracles.hpp"
#include "atomspec/order.hpp"
#include "atomspec/pid_modules.hpp"
#include "atomspec/snf.hpp"
#include "atomspec/spectrum.hpp"

namespace atomspec::verify {

using filtration::dim_value;
using spectrum::atom_ref;
using spectrum::atom_space;
using tailspace::symbolic_set;

namespace {

std::string plural(std::size_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

}  // namespace

criterion_result adjunction_suite() {
  criterion_result r{"adjunction round trips", true, ""};
  std::size_t preorders = 0;
  std::size_t topologies = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& p : oracles::all_preorders(n)) {
      ++preorders;
      const auto back = finspace::fin_space::alexandroff(p).specialization_preorder();
      if (!(back == p)) {
        r.pass = false;
        r.detail = "order round trip failed on " + std::to_string(n) + " points";
        return r;
      }
    }
    for (const auto& x : oracles::all_topologies(n)) {
      ++topologies;
      const auto rebuilt = finspace::fin_space::alexandroff(x.specialization_preorder());
      const bool alexandroff = rebuilt == x;
      const auto witness = finspace::counit_witness(x);
      if (alexandroff != !witness.has_value()) {
        r.pass = false;
        r.detail = "counit witness disagrees with the rebuild comparison";
        return r;
      }
      if (!alexandroff) {
        r.pass = false;
        r.detail = "a space on <= 4 points failed the Alexandroff round trip";
        return r;
      }
    }
  }
  r.detail = plural(preorders, "preorder") + " and " + std::to_string(topologies) +
             " topologies round-tripped exactly";
  return r;
}

criterion_result kolmogorov_suite() {
  criterion_result r{"Kolmogorov quotients", true, ""};
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& x : oracles::all_topologies(n)) {
      ++checked;
      const auto [q, proj] = x.kolmogorov_quotient();
      if (!q.is_kolmogorov()) {
        r.pass = false;
        r.detail = "a quotient failed is_kolmogorov";
        return r;
      }
      const auto [q2, proj2] = q.kolmogorov_quotient();
      if (!(q2 == q)) {
        r.pass = false;
        r.detail = "a quotient was not idempotent";
        return r;
      }
      if (proj.size() != x.size()) {
        r.pass = false;
        r.detail = "projection map has the wrong length";
        return r;
      }
    }
  }
  r.detail = plural(checked, "space") + " quotiented, all T0 and idempotent";
  return r;
}

criterion_result dimension_suite() {
  criterion_result r{"dimension equalities on posets", true, ""};
  std::size_t posets = 0;
  std::size_t opens = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& p : oracles::all_posets(n)) {
      ++posets;
      const auto space = finspace::fin_space::alexandroff(p);
      const auto a = atom_space::from_finite(space);
      const auto f = filtration::gabriel_filtration(a);
      if (f.stalled()) {
        r.pass = false;
        r.detail = "peeling stalled on a poset model";
        return r;
      }
      for (std::size_t i = 0; i < p.size(); ++i) {
        const auto pt = atom_ref::named_point(p.point_name(i));
        const long height = oracles::up_height(p, i);
        const auto want = dim_value::finite(height);
        if (filtration::gkdim_point(f, pt) != want ||
            filtration::dim_point(a, f, pt) != want ||
            filtration::adim_point(a, pt) != want) {
          r.pass = false;
          r.detail = "point dimensions diverged from the up-height at " + p.point_name(i);
          return r;
        }
      }
      for (const auto o : space.opens()) {
        ++opens;
        const auto os = a.set_of(o);
        long want = -1;
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (o >> i & 1u) want = std::max(want, oracles::up_height(p, i));
        }
        const auto wantv = dim_value::finite(want);
        if (filtration::gkdim_open(f, os) != wantv ||
            filtration::dim_open(a, f, os) != wantv || filtration::adim_open(a, os) != wantv) {
          r.pass = false;
          r.detail = "open-set dimensions diverged from the up-height";
          return r;
        }
      }
    }
  }
  r.detail = plural(posets, "poset") + " and " + plural(opens, "open") + " agreed on all four dimensions";
  return r;
}

criterion_result counterexample_fixed() {
  criterion_result r{"graded-module fixed point", true, ""};
  const auto a = atom_space::builtin("grmod_kx");
  const auto f = filtration::gabriel_filtration(a);
  const auto* sup = a.find_support("k[x]");
  if (!sup) {
    r.pass = false;
    r.detail = "builtin support missing";
    return r;
  }
  const auto gk = filtration::gkdim_open(f, sup->set);
  const auto dm = filtration::dim_open(a, f, sup->set);
  const auto alex = a.check_alexandroff();
  const auto dim_b = filtration::dim_point(a, f, atom_ref::named_point("b"));
  r.pass = gk == dim_value::finite(1) && dm == dim_value::finite(0) && !alex.alexandroff &&
           alex.witness_point == "b" && !dim_b.exists();
  std::ostringstream os;
  os << "gkdim(support)=" << gk.str() << " dim(support)=" << dm.str() << " alexandroff="
     << (alex.alexandroff ? "true" : "false") << " witness="
     << (alex.witness_point ? *alex.witness_point : "-") << " dim(b)=" << dim_b.str();
  r.detail = os.str();
  return r;
}

criterion_result minimal_atom_fixed() {
  criterion_result r{"minimal-atom fixed points", true, ""};
  const auto g = atom_space::builtin("goodearl");
  const auto amin_g = g.amin(g.live());
  const bool goodearl_ok =
      amin_g == g.live() && amin_g.contains_named("b") && amin_g.indexed.unbounded_up() &&
      !g.lambda_open(atom_ref::named_point("b"));

  const auto k = atom_space::builtin("grmod_kx");
  const auto* sup = k.find_support("k[x]");
  const bool grmod_ok = sup && k.amin(sup->set) == sup->set;

  r.pass = goodearl_ok && grmod_ok;
  r.detail = std::string("infinite minimal set ") + (goodearl_ok ? "confirmed" : "wrong") +
             "; minimal set of the tail support " + (grmod_ok ? "equals the support" : "wrong");
  return r;
}

criterion_result theorem_suite() {
  criterion_result r{"theorem verifier", true, ""};
  std::size_t models = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& p : oracles::all_posets(n)) {
      ++models;
      const auto a = atom_space::from_finite(finspace::fin_space::alexandroff(p));
      const auto rep = filtration::verify_theorems(a);
      if (!rep.all_pass()) {
        r.pass = false;
        r.detail = "a poset model failed the verifier";
        return r;
      }
    }
  }
  for (const auto* name : {"grmod_kx", "goodearl"}) {
    const auto a = atom_space::builtin(name);
    const auto rep = filtration::verify_theorems(a);
    const auto& alexchar = rep.items[4];
    const bool one_witness_at_b = alexchar.applicable && alexchar.pass &&
                                  alexchar.witnesses.size() == 1 &&
                                  alexchar.witnesses[0].find('b') != std::string::npos;
    if (rep.alexandroff || !one_witness_at_b || !rep.all_pass()) {
      r.pass = false;
      r.detail = std::string("expected exactly one successor violation at b on ") + name;
      return r;
    }
    const auto done = a.completed();
    const auto rep2 = filtration::verify_theorems(done);
    if (!rep2.all_pass()) {
      r.pass = false;
      r.detail = std::string("completion of ") + name + " still fails the verifier";
      return r;
    }
    // Order preservation, pointwise over named points, probes, and the class.
    std::vector<atom_ref> pts;
    for (const auto& nm : a.live().named) pts.push_back(atom_ref::named_point(nm));
    for (long i : a.probes(a.live().indexed)) pts.push_back(atom_ref::indexed_point(i));
    for (const auto& x : pts) {
      for (const auto& y : pts) {
        if (a.leq(x, y) != done.leq(x, y)) {
          r.pass = false;
          r.detail = "completion changed the specialization order";
          return r;
        }
      }
    }
  }
  r.detail = plural(models, "poset model") + " plus both counterexamples behaved as predicted";
  return r;
}

namespace {

template <typename Ring>
bool snf_matches_oracle(const Ring& ring, const pid::matrix<Ring>& m, std::string& err) {
  const auto snf = pid::smith_normal_form(ring, m);
  const auto prod = pid::mat_mul(ring, pid::mat_mul(ring, snf.left, m), snf.right);
  if (!(prod == snf.diagonal)) {
    err = "transform product mismatch";
    return false;
  }
  if (!ring.is_unit(pid::det(ring, snf.left)) || !ring.is_unit(pid::det(ring, snf.right))) {
    err = "transform determinant is not a unit";
    return false;
  }
  const auto oracle = oracles::minor_gcd_factors(ring, m);
  if (oracle != snf.invariant_factors) {
    err = "invariant factors disagree with the minor-gcd oracle";
    return false;
  }
  return true;
}

}  // namespace

criterion_result snf_suite() {
  criterion_result r{"normal-form oracle agreement", true, ""};
  std::mt19937_64 rng(0x5eedf00dULL);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_int_distribution<long> zent(-20, 20);
  std::uniform_int_distribution<int> deg(-1, 3);  // -1: zero polynomial
  const long ps[3] = {2, 3, 5};
  std::string err;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    const std::size_t c = static_cast<std::size_t>(dim(rng));
    if (trial % 2 == 0) {
      const pid::integer_ring ring;
      pid::matrix<pid::integer_ring> m(n, c, ring.zero());
      for (auto& e : m.a) e = zent(rng);
      if (!snf_matches_oracle(ring, m, err)) {
        r.pass = false;
        r.detail = err + " (integer trial " + std::to_string(trial) + ")";
        return r;
      }
    } else {
      const pid::fp_poly_ring ring(ps[(trial / 2) % 3]);
      std::uniform_int_distribution<long> coef(0, ring.characteristic() - 1);
      pid::matrix<pid::fp_poly_ring> m(n, c, ring.zero());
      for (auto& e : m.a) {
        const int d = deg(rng);
        if (d < 0) continue;
        std::vector<long> coeffs(static_cast<std::size_t>(d) + 1);
        for (auto& v : coeffs) v = coef(rng);
        coeffs.back() = std::max(coeffs.back(), 1L);
        e = ring.from_coeffs(std::move(coeffs));
      }
      if (!snf_matches_oracle(ring, m, err)) {
        r.pass = false;
        r.detail = err + " (polynomial trial " + std::to_string(trial) + ")";
        return r;
      }
    }
  }
  r.detail = "500 random matrices matched the minor-gcd oracle in both rings";
  return r;
}

criterion_result monoform_suite() {
  criterion_result r{"monoform oracle agreement", true, ""};
  const pid::integer_ring ring;
  std::vector<std::vector<long>> shapes{{}};
  // Divisibility chains d1 | d2 | ... with product <= 256.
  std::vector<long> cur;
  const std::function<void(long, long)> extend = [&](long last, long budget) {
    for (long d = (cur.empty() ? 2 : last); d <= budget; cur.empty() ? ++d : d += last) {
      cur.push_back(d);
      shapes.push_back(cur);
      extend(d, budget / d);
      cur.pop_back();
    }
  };
  extend(2, 256);
  for (const auto& shape : shapes) {
    std::vector<std::vector<mpz_class>> cols;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      std::vector<mpz_class> col(shape.size(), 0);
      col[i] = shape[i];
      cols.push_back(std::move(col));
    }
    const auto m = pid::presented_module<pid::integer_ring>::make(ring, shape.size(), cols);
    const auto a = pid::analyze(m);
    const bool brute = pid::monoform_bruteforce(m);
    if (a.monoform != brute) {
      std::string desc;
      for (long d : shape) desc += (desc.empty() ? "" : ",") + std::to_string(d);
      r.pass = false;
      r.detail = "disagreement on invariant factors (" + desc + ")";
      return r;
    }
  }
  r.detail = plural(shapes.size(), "invariant-factor shape") + " agreed with the exhaustive check";
  return r;
}

criterion_result cross_module_suite() {
  criterion_result r{"cross-module consistency", true, ""};
  std::mt19937_64 rng(0xa70a70a7ULL);
  std::uniform_int_distribution<int> gens(0, 3);
  std::uniform_int_distribution<int> rels(0, 4);
  std::uniform_int_distribution<long> ent(-9, 9);
  const pid::integer_ring ring;
  const auto model = pid::spec_model(ring);
  const auto filt = filtration::gabriel_filtration(model);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gens(rng));
    const std::size_t c = static_cast<std::size_t>(rels(rng));
    std::vector<std::vector<mpz_class>> cols(c, std::vector<mpz_class>(n));
    for (auto& col : cols)
      for (auto& e : col) e = ent(rng);
    const auto m = pid::presented_module<pid::integer_ring>::make(ring, n, cols);
    const auto a = pid::analyze(m);

    const auto topo_gk =
        a.asupp.empty() ? dim_value::finite(-1) : filtration::gkdim_open(filt, a.asupp);
    if (topo_gk != dim_value::finite(a.gkdim)) {
      r.pass = false;
      r.detail = "algebraic and stage dimensions disagree (trial " + std::to_string(trial) + ")";
      return r;
    }
    if (!a.amin.indexed.is_finite()) {
      r.pass = false;
      r.detail = "minimal atom set came out infinite";
      return r;
    }
    if (a.dim != dim_value::finite(a.gkdim) || a.adim != dim_value::finite(a.gkdim)) {
      r.pass = false;
      r.detail = "dim/adim diverged from gkdim on the spectrum model";
      return r;
    }
    // lambda(M) must equal the intersection of the up-sets of the
    // associated atoms; the empty intersection is the whole spectrum.
    symbolic_set expect = model.live();
    for (const auto& nm : a.aass.named) {
      expect = expect.intersect(model.lambda(atom_ref::named_point(nm)));
    }
    if (!a.aass.indexed.is_finite()) {
      r.pass = false;
      r.detail = "associated atom set came out infinite";
      return r;
    }
    for (long i : a.aass.indexed.finite_elements()) {
      expect = expect.intersect(model.lambda(atom_ref::indexed_point(i)));
    }
    if (!(a.lambda == expect)) {
      r.pass = false;
      r.detail = "lambda(M) is not the intersection of the associated up-sets";
      return r;
    }
  }
  r.detail = "100 random modules: dimensions and lambda identities all agree";
  return r;
}

criterion_result zero_module_convention() {
  criterion_result r{"zero-module convention", true, ""};
  const pid::integer_ring ring;
  const auto zero = pid::presented_module<pid::integer_ring>::make(ring, 0, {});
  const auto a = pid::analyze(zero);
  r.pass = a.zero && a.gkdim == -1 && a.kdim == -1 && a.dim == dim_value::finite(-1) &&
           a.adim == dim_value::finite(-1) && a.asupp.empty() && a.aass.empty() && a.amin.empty();
  r.detail = "gkdim=" + std::to_string(a.gkdim) + " dim=" + a.dim.str();
  return r;
}

std::vector<criterion_result> run(const std::string& scope) {
  std::vector<criterion_result (*)()> picked;
  const bool all = scope == "all";
  if (all || scope == "finite") {
    picked.insert(picked.end(), {&adjunction_suite, &kolmogorov_suite, &dimension_suite});
  }
  if (all || scope == "symbolic") {
    picked.insert(picked.end(), {&counterexample_fixed, &minimal_atom_fixed, &theorem_suite});
  }
  if (all || scope == "ring") {
    picked.insert(picked.end(),
                  {&snf_suite, &monoform_suite, &cross_module_suite, &zero_module_convention});
  }
  if (picked.empty()) {
    throw input_error("verify scope must be all, finite, symbolic, or ring");
  }
  std::vector<criterion_result> out;
  for (auto* fn : picked) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({"(criterion aborted)", false, e.what()});
    }
  }
  return out;
}

}  // namespace atomspec::verify
