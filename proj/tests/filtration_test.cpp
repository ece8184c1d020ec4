#include "atomspec/filtration.hpp"

#include <vector>

#include "atomspec/pid_modules.hpp"
#include "doctest.h"

using atomspec::input_error;
using namespace atomspec::filtration;
namespace fin = atomspec::finspace;
namespace ord = atomspec::order;
namespace tl = atomspec::tailspace;
using atomspec::spectrum::atom_ref;
using atomspec::spectrum::atom_space;

namespace {

atom_space chain3_space() {
  const auto p = ord::preorder::from_generators({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  return atom_space::from_finite(fin::fin_space::alexandroff(p));
}

tl::symbolic_set named(std::vector<std::string> n) {
  return tl::symbolic_set::of_named(std::move(n));
}

}  // namespace

TEST_CASE("peeling a chain") {
  const auto a = chain3_space();
  const auto f = gabriel_filtration(a);
  REQUIRE(f.stages.size() == 3);
  CHECK(f.stages[0] == named({"c"}));
  CHECK(f.stages[1] == named({"b"}));
  CHECK(f.stages[2] == named({"a"}));
  CHECK_FALSE(f.stalled());
  CHECK_FALSE(f.cap_hit);

  CHECK(stage_of(f, atom_ref::named_point("a")) == dim_value::finite(2));
  CHECK(gkdim_point(f, atom_ref::named_point("a")) == dim_value::finite(2));
  CHECK(gkdim_open(f, f.all_points) == dim_value::finite(2));
  CHECK(gkdim_open(f, tl::symbolic_set{}) == dim_value::finite(-1));
  CHECK(chain_above(a, atom_ref::named_point("a")) == 2);
  CHECK(chain_within(a, f.all_points) == 2);
  CHECK(chain_within(a, tl::symbolic_set{}) == -1);
  CHECK(dim_point(a, f, atom_ref::named_point("a")) == dim_value::finite(2));
  CHECK(dim_open(a, f, f.all_points) == dim_value::finite(2));
  CHECK(dim_open(a, f, named({"b"})) == dim_value::finite(1));
  CHECK(adim_point(a, atom_ref::named_point("b")) == dim_value::finite(1));
  CHECK(adim_open(a, f.all_points) == dim_value::finite(2));

  const auto rep = verify_theorems(a);
  CHECK(rep.kolmogorov);
  CHECK(rep.alexandroff);
  CHECK(rep.all_pass());
}

TEST_CASE("indiscrete pairs stall") {
  const auto a = atom_space::from_finite(fin::fin_space::generate({"a", "b"}, {}));
  const auto f = gabriel_filtration(a);
  CHECK(f.stalled());
  CHECK_FALSE(f.cap_hit);
  CHECK(f.stages.empty());
  CHECK(f.residual == named({"a", "b"}));
  CHECK(stage_of(f, atom_ref::named_point("a")) == dim_value::omega());
  CHECK(stage_of(f, atom_ref::named_point("a")).str() == ">=omega");
  CHECK(gkdim_open(f, f.all_points) == dim_value::omega());
  CHECK_THROWS_AS(dim_point(a, f, atom_ref::named_point("a")), input_error);

  const auto rep = verify_theorems(a);
  CHECK_FALSE(rep.kolmogorov);
  CHECK_FALSE(rep.items[4].applicable);
  CHECK(rep.all_pass());
}

TEST_CASE("stage cap marks leftovers") {
  const auto f = gabriel_filtration(chain3_space(), 1);
  CHECK(f.cap_hit);
  CHECK(f.stalled());
  CHECK(f.stages.size() == 1);
  CHECK(f.residual == named({"a", "b"}));
}

TEST_CASE("downward tail model separates the two dimensions") {
  const auto a = atom_space::builtin("grmod_kx");
  const auto f = gabriel_filtration(a);
  REQUIRE(f.stages.size() == 2);
  CHECK(f.stages[0] ==
        tl::symbolic_set::of_indexed(tl::index_set::all(tl::index_domain::integers)));
  CHECK(f.stages[1] == named({"b"}));
  CHECK_FALSE(f.stalled());

  CHECK(stage_of(f, atom_ref::named_point("b")) == dim_value::finite(1));
  CHECK(stage_of(f, atom_ref::whole_class()) == dim_value::finite(0));
  CHECK(stage_of(f, atom_ref::indexed_point(-4)) == dim_value::finite(0));

  const auto* sup = a.find_support("k[x]");
  REQUIRE(sup != nullptr);
  CHECK(gkdim_open(f, sup->set) == dim_value::finite(1));
  CHECK(dim_open(a, f, sup->set) == dim_value::finite(0));
  CHECK(adim_open(a, sup->set) == dim_value::finite(0));

  const auto dim_b = dim_point(a, f, atom_ref::named_point("b"));
  CHECK_FALSE(dim_b.exists());
  CHECK(dim_b.str() == "does-not-exist");
  CHECK(chain_above(a, atom_ref::named_point("b")) == 0);

  const auto rep = verify_theorems(a);
  CHECK(rep.kolmogorov);
  CHECK_FALSE(rep.alexandroff);
  CHECK(rep.alexandroff_witness == "b");
  CHECK(rep.items[4].name == "alexchar");
  CHECK(rep.items[4].applicable);
  CHECK(rep.items[4].pass);
  REQUIRE(rep.items[4].witnesses.size() == 1);
  CHECK(rep.items[4].witnesses[0].find("b") != std::string::npos);
  CHECK_FALSE(rep.items[5].applicable);
  CHECK_FALSE(rep.items[6].applicable);
  CHECK(rep.all_pass());
}

TEST_CASE("completion restores the chain characterization") {
  const auto done = atom_space::builtin("grmod_kx").completed();
  const auto f = gabriel_filtration(done);
  REQUIRE(f.stages.size() == 1);
  CHECK(f.stages[0] == done.live());
  CHECK(dim_point(done, f, atom_ref::named_point("b")) == dim_value::finite(0));
  const auto rep = verify_theorems(done);
  CHECK(rep.alexandroff);
  CHECK(rep.all_pass());
}

TEST_CASE("upward tail model") {
  const auto a = atom_space::builtin("goodearl");
  const auto f = gabriel_filtration(a);
  REQUIRE(f.stages.size() == 2);
  CHECK(stage_of(f, atom_ref::named_point("b")) == dim_value::finite(1));
  CHECK(gkdim_open(f, a.live()) == dim_value::finite(1));
  CHECK(dim_open(a, f, a.live()) == dim_value::finite(0));
  CHECK_FALSE(dim_point(a, f, atom_ref::named_point("b")).exists());
  CHECK(adim_open(a, a.live()) == dim_value::finite(0));
  const auto rep = verify_theorems(a);
  CHECK_FALSE(rep.alexandroff);
  CHECK(rep.all_pass());
}

TEST_CASE("cone model has an honest chain") {
  const auto a = atomspec::pid::spec_model(atomspec::pid::integer_ring{});
  const auto f = gabriel_filtration(a);
  REQUIRE(f.stages.size() == 2);
  CHECK(f.stages[0] ==
        tl::symbolic_set::of_indexed(tl::index_set::all(tl::index_domain::naturals)));
  CHECK(f.stages[1] == named({"(0)"}));

  CHECK(chain_above(a, atom_ref::named_point("(0)")) == 1);
  CHECK(chain_above(a, atom_ref::indexed_point(0)) == 0);
  CHECK(chain_above(a, atom_ref::whole_class()) == 0);
  CHECK(dim_point(a, f, atom_ref::named_point("(0)")) == dim_value::finite(1));
  CHECK(dim_open(a, f, a.live()) == dim_value::finite(1));
  CHECK(adim_open(a, a.live()) == dim_value::finite(1));
  CHECK(gkdim_open(f, a.live()) == dim_value::finite(1));

  const auto rep = verify_theorems(a);
  CHECK(rep.alexandroff);
  CHECK(rep.all_pass());
}

TEST_CASE("dimension token rendering") {
  CHECK(dim_value::finite(3).str() == "3");
  CHECK(dim_value::finite(-1).str() == "-1");
  CHECK(dim_value::omega().str() == ">=omega");
  CHECK(dim_value::none().str() == "does-not-exist");
  CHECK(dim_value::finite(2).is_finite());
  CHECK(dim_value::finite(2).value() == 2);
  CHECK(dim_value::omega().exists());
  CHECK_FALSE(dim_value::none().exists());
}

TEST_CASE("queries validate their inputs") {
  const auto a = chain3_space();
  const auto f = gabriel_filtration(a);
  CHECK_THROWS_AS(stage_of(f, atom_ref::named_point("zz")), input_error);
  CHECK_THROWS_AS(gkdim_open(f, named({"zz"})), input_error);
  CHECK_THROWS_AS(chain_above(a, atom_ref::named_point("zz")), input_error);
}
