#include "atomspec/pid_modules.hpp"

#include <vector>

#include "doctest.h"

using atomspec::input_error;
using namespace atomspec::pid;
namespace tl = atomspec::tailspace;
using atomspec::filtration::dim_value;

namespace {

const integer_ring z;

presented_module<integer_ring> zmod(std::size_t gens, std::vector<std::vector<long>> cols) {
  std::vector<std::vector<mpz_class>> columns;
  for (auto& c : cols) columns.emplace_back(c.begin(), c.end());
  return presented_module<integer_ring>::make(z, gens, columns);
}

}  // namespace

TEST_CASE("presentations decompose into invariant factors") {
  const auto d = decompose(zmod(2, {{2, 0}, {0, 3}}));
  CHECK(d.free_rank == 0);
  CHECK(d.torsion == std::vector<integer_ring::elem>{6});

  const auto free2 = decompose(zmod(2, {}));
  CHECK(free2.free_rank == 2);
  CHECK(free2.torsion.empty());

  const auto zero_col = decompose(zmod(1, {{0}}));
  CHECK(zero_col.free_rank == 1);
  CHECK(zero_col.torsion.empty());

  const auto mixed = decompose(zmod(3, {{2, 0, 0}, {0, 4, 0}}));
  CHECK(mixed.free_rank == 1);
  CHECK(mixed.torsion == std::vector<integer_ring::elem>{2, 4});

  const fp_poly_ring f2(2);
  const auto m = presented_module<fp_poly_ring>::make(f2, 1, {{f2.from_coeffs({0, 1, 1})}});
  const auto df = decompose(m);
  CHECK(df.free_rank == 0);
  CHECK(df.torsion == std::vector<fp_poly_ring::elem>{{0, 1, 1}});

  CHECK_THROWS_AS(zmod(2, {{1, 2, 3}}), input_error);
}

TEST_CASE("spectrum model of the integers") {
  const auto a = spec_model(z);
  CHECK(a.symbolic());
  CHECK(a.live() == tl::symbolic_set::of_named({"(0)"}).unite(tl::symbolic_set::of_indexed(
                        tl::index_set::all(tl::index_domain::naturals))));
  CHECK(a.set_to_string(tl::symbolic_set::of_indexed(tl::index_set::finite({0, 1}))) ==
        "{(2), (3)}");
  CHECK(a.set_to_string(tl::symbolic_set::of_indexed(tl::index_set::finite({2}))) == "{(5)}");
  CHECK(a.lambda(atomspec::spectrum::atom_ref::named_point("(0)")) == a.live());
  CHECK(a.maximal_atoms() ==
        tl::symbolic_set::of_indexed(tl::index_set::all(tl::index_domain::naturals)));
  CHECK_THROWS_AS(spec_model(z, 0), input_error);

  const auto af = spec_model(fp_poly_ring(2));
  CHECK(af.set_to_string(tl::symbolic_set::of_indexed(tl::index_set::finite({0, 1, 2}))) ==
        "{(x), (x+1), (x^2+x+1)}");
}

TEST_CASE("analysis fixed points") {
  const auto z6 = analyze(zmod(1, {{6}}));
  CHECK(z6.ring_name == "Z");
  CHECK_FALSE(z6.zero);
  CHECK(z6.free_rank == 0);
  CHECK(z6.torsion == std::vector<std::string>{"6"});
  CHECK(z6.gkdim == 0);
  CHECK(z6.kdim == 0);
  CHECK(z6.dim == dim_value::finite(0));
  CHECK(z6.adim == dim_value::finite(0));
  CHECK(z6.asupp_str == "{(2), (3)}");
  CHECK(z6.aass_str == "{(2), (3)}");
  CHECK(z6.amin_str == "{(2), (3)}");
  CHECK(z6.lambda_str == "{}");
  CHECK_FALSE(z6.simple);
  CHECK_FALSE(z6.monoform);
  CHECK_FALSE(z6.compressible);
  CHECK_FALSE(z6.critical.has_value());
  CHECK(critical_str(z6.critical) == "none");

  const auto ring_mod = analyze(zmod(1, {}));
  CHECK(ring_mod.free_rank == 1);
  CHECK(ring_mod.gkdim == 1);
  CHECK(ring_mod.kdim == 1);
  CHECK(ring_mod.dim == dim_value::finite(1));
  CHECK(ring_mod.adim == dim_value::finite(1));
  CHECK(ring_mod.asupp_str == "all");
  CHECK(ring_mod.aass_str == "{(0)}");
  CHECK(ring_mod.amin_str == "{(0)}");
  CHECK(ring_mod.lambda_str == "all");
  CHECK_FALSE(ring_mod.simple);
  CHECK(ring_mod.monoform);
  CHECK(ring_mod.compressible);
  CHECK(ring_mod.critical == 1);
  CHECK(critical_str(ring_mod.critical) == "1-critical");
  CHECK(ring_mod.atomic_critical == 1);

  const auto z7 = analyze(zmod(1, {{7}}));
  CHECK(z7.simple);
  CHECK(z7.monoform);
  CHECK(z7.compressible);
  CHECK(z7.critical == 0);
  CHECK(z7.gkdim == 0);
  CHECK(z7.aass_str == "{(7)}");

  const auto zero = analyze(zmod(0, {}));
  CHECK(zero.zero);
  CHECK(zero.gkdim == -1);
  CHECK(zero.kdim == -1);
  CHECK(zero.dim == dim_value::finite(-1));
  CHECK(zero.adim == dim_value::finite(-1));
  CHECK(zero.asupp.empty());
  CHECK(zero.aass.empty());
  CHECK(zero.amin.empty());
  CHECK(zero.asupp_str == "{}");
  CHECK(zero.lambda_str == "all");
  CHECK_FALSE(zero.monoform);
  CHECK_FALSE(zero.critical.has_value());

  const auto mixed = analyze(zmod(2, {{0, 2}}));
  CHECK(mixed.free_rank == 1);
  CHECK(mixed.torsion == std::vector<std::string>{"2"});
  CHECK(mixed.gkdim == 1);
  CHECK(mixed.aass_str == "{(0), (2)}");
  CHECK(mixed.amin_str == "{(0)}");
  CHECK(mixed.lambda_str == "{(2)}");
  CHECK_FALSE(mixed.monoform);
  CHECK_FALSE(mixed.critical.has_value());
}

TEST_CASE("polynomial module analysis") {
  const fp_poly_ring f2(2);
  const auto m = presented_module<fp_poly_ring>::make(f2, 1, {{f2.from_coeffs({0, 1, 1})}});
  const auto a = analyze(m);
  CHECK(a.ring_name == "F2[x]");
  CHECK(a.gkdim == 0);
  CHECK(a.torsion == std::vector<std::string>{"x^2+x"});
  CHECK(a.aass_str == "{(x), (x+1)}");
  CHECK_FALSE(a.monoform);

  const auto simple = analyze(presented_module<fp_poly_ring>::make(
      f2, 1, {{f2.from_coeffs({1, 1, 1})}}));
  CHECK(simple.simple);
  CHECK(simple.aass_str == "{(x^2+x+1)}");
  CHECK(simple.critical == 0);
}

TEST_CASE("torsion relative to an atom") {
  const auto m = zmod(2, {{0, 6}});  // Z + Z/6

  const auto whole_torsion = decompose(t_alpha(m, std::nullopt));
  CHECK(whole_torsion.free_rank == 0);
  CHECK(whole_torsion.torsion == std::vector<integer_ring::elem>{6});

  const auto at2 = decompose(t_alpha(m, integer_ring::elem(2)));
  CHECK(at2.torsion == std::vector<integer_ring::elem>{3});
  const auto at3 = decompose(t_alpha(m, integer_ring::elem(3)));
  CHECK(at3.torsion == std::vector<integer_ring::elem>{2});
  const auto at5 = decompose(t_alpha(m, integer_ring::elem(5)));
  CHECK(at5.torsion == std::vector<integer_ring::elem>{6});
  const auto neg = decompose(t_alpha(m, integer_ring::elem(-2)));
  CHECK(neg.torsion == std::vector<integer_ring::elem>{3});
  CHECK_THROWS_AS(t_alpha(m, integer_ring::elem(4)), input_error);

  CHECK(lambda_m(zmod(1, {})) ==
        tl::symbolic_set::of_named({"(0)"}).unite(tl::symbolic_set::of_indexed(
            tl::index_set::all(tl::index_domain::naturals))));
  CHECK(lambda_m(zmod(1, {{4}})) == tl::symbolic_set::of_indexed(tl::index_set::finite({0})));
  CHECK(lambda_m(zmod(1, {{6}})) == tl::symbolic_set{});
  CHECK(lambda_m(zmod(0, {})) ==
        tl::symbolic_set::of_named({"(0)"}).unite(tl::symbolic_set::of_indexed(
            tl::index_set::all(tl::index_domain::naturals))));
}

TEST_CASE("exhaustive monoform check") {
  CHECK(monoform_bruteforce(zmod(1, {{7}})));
  CHECK(monoform_bruteforce(zmod(1, {{2}})));
  CHECK_FALSE(monoform_bruteforce(zmod(1, {{4}})));
  CHECK_FALSE(monoform_bruteforce(zmod(2, {{2, 0}, {0, 2}})));
  CHECK_FALSE(monoform_bruteforce(zmod(1, {{6}})));
  CHECK_FALSE(monoform_bruteforce(zmod(0, {})));
  CHECK_THROWS_AS(monoform_bruteforce(zmod(1, {})), input_error);
  CHECK_THROWS_AS(monoform_bruteforce(zmod(1, {{512}})), input_error);

  // classify and the exhaustive check agree on small shapes.
  for (const auto& shape : std::vector<std::vector<long>>{
           {2}, {3}, {4}, {9}, {2, 2}, {2, 4}, {3, 3}, {6}, {30}, {5, 5}}) {
    std::vector<std::vector<long>> cols;
    for (std::size_t i = 0; i < shape.size(); ++i) {
      std::vector<long> col(shape.size(), 0);
      col[i] = shape[i];
      cols.push_back(col);
    }
    const auto m = zmod(shape.size(), cols);
    CHECK(analyze(m).monoform == monoform_bruteforce(m));
  }
}
