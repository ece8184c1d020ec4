#include "atomspec/spectrum.hpp"

#include <vector>

#include "doctest.h"

using atomspec::input_error;
using namespace atomspec::spectrum;
namespace fin = atomspec::finspace;
namespace tl = atomspec::tailspace;

namespace {

atom_space sierpinski() {
  return atom_space::from_finite(fin::fin_space::generate({"o", "c"}, {0b01u}));
}

tl::symbolic_set named(std::vector<std::string> n) { return tl::symbolic_set::of_named(std::move(n)); }

}  // namespace

TEST_CASE("finite backend answers through the same interface") {
  const auto a = sierpinski();
  CHECK_FALSE(a.symbolic());
  CHECK(a.live() == named({"c", "o"}));
  CHECK(a.is_open(named({"o"})));
  CHECK_FALSE(a.is_open(named({"c"})));
  CHECK(a.maximal_atoms() == named({"o"}));
  CHECK(a.order_maximal() == named({"o"}));
  CHECK(a.lambda(atom_ref::named_point("c")) == named({"c", "o"}));
  CHECK(a.lambda_open(atom_ref::named_point("c")));
  CHECK(a.leq(atom_ref::named_point("c"), atom_ref::named_point("o")));
  CHECK(a.is_kolmogorov());
  CHECK(a.check_alexandroff().alexandroff);
  CHECK(a.completed() == a);

  const auto rest = a.remove_open(named({"o"}));
  CHECK(rest.live() == named({"c"}));
  CHECK(rest.maximal_atoms() == named({"c"}));

  CHECK(a.mask_of(named({"o"})) == 0b01u);
  CHECK(a.set_of(0b11u) == named({"c", "o"}));
  CHECK(a.display(atom_ref::named_point("o")) == "o");
  CHECK(a.set_to_string(named({"c", "o"})) == "{c, o}");
}

TEST_CASE("builtin downward tail space") {
  const auto a = atom_space::builtin("grmod_kx");
  CHECK(a.symbolic());
  CHECK(a.live() == named({"b"}).unite(tl::symbolic_set::of_indexed(
                        tl::index_set::all(tl::index_domain::integers))));

  const auto* sup = a.find_support("k[x]");
  REQUIRE(sup != nullptr);
  CHECK(sup->noetherian);
  CHECK(sup->set == named({"b"}).unite(tl::symbolic_set::of_indexed(tl::index_set::down_tail(0))));
  CHECK(a.is_open(sup->set));

  CHECK(a.maximal_atoms() ==
        tl::symbolic_set::of_indexed(tl::index_set::all(tl::index_domain::integers)));
  CHECK(a.order_maximal() == a.live());
  CHECK(a.amin(sup->set) == sup->set);
  CHECK(a.amin(a.live()) == a.live());

  const auto rep = a.check_alexandroff();
  CHECK_FALSE(rep.alexandroff);
  CHECK(rep.witness_point == "b");
  CHECK_FALSE(a.lambda_open(atom_ref::named_point("b")));
  CHECK(a.lambda(atom_ref::named_point("b")) == named({"b"}));

  const auto peeled = a.remove_open(a.maximal_atoms());
  CHECK(peeled.live() == named({"b"}));
  CHECK(peeled.maximal_atoms() == named({"b"}));

  const auto done = a.completed();
  CHECK(done.check_alexandroff().alexandroff);
  CHECK(done.is_open(named({"b"})));
  CHECK(done.completed() == done);
  CHECK(done.find_support("k[x]") != nullptr);
}

TEST_CASE("builtin upward tail space") {
  const auto a = atom_space::builtin("goodearl");
  CHECK(a.live() == named({"b"}).unite(tl::symbolic_set::of_indexed(
                        tl::index_set::all(tl::index_domain::naturals))));
  const auto* big = a.find_support("B");
  const auto* tb = a.find_support("tB");
  REQUIRE(big != nullptr);
  REQUIRE(tb != nullptr);
  CHECK(big->set == a.live());
  CHECK(tb->set == named({"b"}).unite(tl::symbolic_set::of_indexed(tl::index_set::up_tail(1))));
  CHECK(a.amin(a.live()) == a.live());
  CHECK_FALSE(a.amin(a.live()).indexed.is_finite());
  CHECK_FALSE(a.lambda_open(atom_ref::named_point("b")));
  CHECK(a.is_kolmogorov());
  CHECK_THROWS_AS(atom_space::builtin("nope"), input_error);
}

TEST_CASE("class answers demand uniformity") {
  const auto a = atom_space::builtin("grmod_kx");
  const auto all = tl::index_set::all(tl::index_domain::integers);
  CHECK(a.uniform(all, "openness", [&](long i) {
    return a.is_open(tl::symbolic_set::of_indexed(tl::index_set::finite({i})));
  }));
  CHECK_THROWS_AS(a.uniform(all, "sign", [](long i) { return i >= 0; }), input_error);
  CHECK(a.probes(all).size() <= 3);

  CHECK(a.contains(atom_ref::whole_class()));
  CHECK(a.contains(atom_ref::indexed_point(-7)));
  CHECK_FALSE(a.contains(atom_ref::named_point("zz")));
  CHECK(a.display(atom_ref::whole_class()) == "s_i");
  CHECK(a.display(atom_ref::indexed_point(3)) == "s_3");
}

TEST_CASE("lambda report walks every handle") {
  const auto a = atom_space::builtin("goodearl");
  const auto rows = a.lambda_open_report(a.live());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].point == atom_ref::named_point("b"));
  CHECK_FALSE(rows[0].open);
  CHECK(rows[1].point == atom_ref::whole_class());
  CHECK(rows[1].open);
}

TEST_CASE("supports must be open") {
  atom_space::support_list bad{{"M", {named({"b"}), false}}};
  CHECK_THROWS_AS(atom_space::from_schema(tl::grmod_kx_schema(), bad), input_error);
  atom_space::support_list good{
      {"M", {named({"b"}).unite(tl::symbolic_set::of_indexed(tl::index_set::down_tail(2))), true}}};
  const auto a = atom_space::from_schema(tl::grmod_kx_schema(), good);
  CHECK(a.find_support("M") != nullptr);
  CHECK(a.find_support("N") == nullptr);
}
