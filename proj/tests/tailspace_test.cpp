#include "atomspec/tailspace.hpp"

#include <vector>

#include "doctest.h"

using atomspec::input_error;
using namespace atomspec::tailspace;

TEST_CASE("index sets canonicalize") {
  CHECK(index_set::finite({3, 1, 3}) == index_set::finite({1, 3}));
  CHECK(index_set::up_tail(0).unite(index_set::finite({-1})) == index_set::up_tail(-1));
  CHECK(index_set::down_tail(3).intersect(index_set::up_tail(1)) == index_set::finite({1, 2, 3}));
  CHECK(index_set::up_tail(5).complement(index_domain::integers) == index_set::down_tail(4));
  CHECK(index_set::all(index_domain::naturals) == index_set::up_tail(0));
  CHECK(index_set::all(index_domain::integers).subtract(index_set::finite({0})) ==
        index_set::cofinite({0}, index_domain::integers));
  CHECK(index_set::cofinite({}, index_domain::naturals) == index_set::all(index_domain::naturals));
  CHECK(index_set::empty_set().empty());
  CHECK(index_set::up_tail(2).intersect(index_set::down_tail(0)).empty());
}

TEST_CASE("index set queries") {
  const auto t = index_set::up_tail(2);
  CHECK(t.contains(2));
  CHECK_FALSE(t.contains(1));
  CHECK(t.min_element() == 2);
  CHECK_FALSE(t.max_element().has_value());
  CHECK(t.unbounded_up());
  CHECK_FALSE(t.is_finite());
  CHECK(index_set::finite({4, 7}).finite_elements() == std::vector<long>{4, 7});
  CHECK(index_set::finite({1}).subset_of(t.complement(index_domain::integers)));
  CHECK(t.subset_of(index_set::all(index_domain::naturals)));

  CHECK(index_set::up_tail(0).valid_in(index_domain::naturals));
  CHECK_FALSE(index_set::down_tail(3).valid_in(index_domain::naturals));
  CHECK_FALSE(index_set::finite({-1}).valid_in(index_domain::naturals));

  CHECK(index_set::finite({0, 5, 9}).probes().size() <= 3);
  CHECK(index_set::all(index_domain::integers).probes().size() <= 3);
  for (long i : index_set::up_tail(4).probes()) CHECK(i >= 4);
}

TEST_CASE("symbolic sets carry names and indices") {
  const auto s = symbolic_set::of_named({"b", "a"});
  CHECK(s.named == std::vector<std::string>{"a", "b"});
  CHECK(s.contains_named("a"));
  const auto t = symbolic_set::of_indexed(index_set::up_tail(0));
  const auto u = s.unite(t);
  CHECK(u.contains_named("b"));
  CHECK(u.indexed == index_set::up_tail(0));
  CHECK(u.subtract(s) == t);
  CHECK(u.intersect(t) == t);
  CHECK(s.subset_of(u));
  CHECK_FALSE(u.subset_of(s));
  CHECK(symbolic_set{}.empty());
}

TEST_CASE("schema construction rejects non-bases") {
  // A named point covered by no basic open.
  CHECK_THROWS_AS(tail_schema::make({"b"}, index_domain::integers, "s",
                                    {{descriptor::kind::singletons, "", tail_dir::up}}),
                  input_error);
  // Two tailed points need the singleton descriptor to intersect.
  CHECK_THROWS_AS(tail_schema::make({"a", "b"}, index_domain::integers, "s",
                                    {{descriptor::kind::tail, "a", tail_dir::down},
                                     {descriptor::kind::tail, "b", tail_dir::down}}),
                  input_error);
  // Mixed tail directions.
  CHECK_THROWS_AS(tail_schema::make({"a", "b"}, index_domain::integers, "s",
                                    {{descriptor::kind::singletons, "", tail_dir::up},
                                     {descriptor::kind::tail, "a", tail_dir::down},
                                     {descriptor::kind::tail, "b", tail_dir::up}}),
                  input_error);
}

TEST_CASE("downward tail model") {
  const auto s = grmod_kx_schema();
  const auto b = point_ref::named_point("b");
  const auto whole = s.whole();

  CHECK(s.is_open(symbolic_set::of_named({"b"}).unite(
      symbolic_set::of_indexed(index_set::down_tail(0)))));
  CHECK_FALSE(s.is_open(symbolic_set::of_named({"b"})));
  CHECK(s.is_open(symbolic_set::of_indexed(index_set::finite({5, -3}))));
  CHECK(s.is_open(whole));

  CHECK(s.minimal_open(b) == symbolic_set::of_named({"b"}));
  CHECK(s.minimal_open(point_ref::indexed_point(4)) ==
        symbolic_set::of_indexed(index_set::finite({4})));

  // Discrete specialization order: singleton lambdas everywhere.
  CHECK_FALSE(s.leq(b, point_ref::indexed_point(0)));
  CHECK_FALSE(s.leq(point_ref::indexed_point(0), b));

  const auto rep = s.check_alexandroff();
  CHECK_FALSE(rep.alexandroff);
  CHECK(rep.witness_point == "b");
  REQUIRE(rep.witness_set.has_value());
  CHECK(*rep.witness_set == symbolic_set::of_named({"b"}));
  CHECK(s.counit_witness().has_value());

  const auto done = s.completion();
  CHECK(done.check_alexandroff().alexandroff);
  CHECK(done.is_open(symbolic_set::of_named({"b"})));
  CHECK(done.completion() == done);
  CHECK_FALSE(done.counit_witness().has_value());
  // Completion leaves the order alone.
  CHECK_FALSE(done.leq(b, point_ref::indexed_point(0)));
  CHECK_FALSE(done.leq(point_ref::indexed_point(0), b));
}

TEST_CASE("natural index tails bottom out at zero") {
  const auto s = tail_schema::make({"b"}, index_domain::naturals, "s",
                                   {{descriptor::kind::singletons, "", tail_dir::up},
                                    {descriptor::kind::tail, "b", tail_dir::down}});
  const auto b = point_ref::named_point("b");
  // Every tail through b contains index 0, so it sticks to the minimal open.
  CHECK(s.minimal_open(b) ==
        symbolic_set::of_named({"b"}).unite(symbolic_set::of_indexed(index_set::finite({0}))));
  CHECK(s.leq(b, point_ref::indexed_point(0)));
  CHECK_FALSE(s.leq(b, point_ref::indexed_point(1)));
  CHECK(s.check_alexandroff().alexandroff);

  // Dropping index 0 from the subspace strands b: the trace of {b} + {s_0}
  // is {b} alone, which is therefore open within the subspace.
  const auto live = symbolic_set::of_named({"b"}).unite(
      symbolic_set::of_indexed(index_set::up_tail(1)));
  CHECK(s.minimal_open_within(live, b) == symbolic_set::of_named({"b"}));
  CHECK(s.is_open_within(live, symbolic_set::of_named({"b"})));
  CHECK(s.is_open_within(
      live, symbolic_set::of_named({"b"}).unite(symbolic_set::of_indexed(index_set::finite({1})))));
  CHECK_FALSE(s.leq_within(live, b, point_ref::indexed_point(1)));
}

TEST_CASE("upward tail model over the naturals") {
  const auto s = goodearl_schema();
  const auto b = point_ref::named_point("b");
  CHECK(s.domain() == index_domain::naturals);
  CHECK(s.minimal_open(b) == symbolic_set::of_named({"b"}));
  CHECK(s.is_open(symbolic_set::of_named({"b"}).unite(
      symbolic_set::of_indexed(index_set::up_tail(3)))));
  CHECK_FALSE(s.is_open(symbolic_set::of_named({"b"})));
  CHECK_FALSE(s.check_alexandroff().alexandroff);
  CHECK_FALSE(s.contains(point_ref::indexed_point(-1)));
  CHECK(s.contains(point_ref::indexed_point(0)));
}

TEST_CASE("cone model") {
  const auto s = spec_pid_schema("m");
  const auto g = point_ref::named_point("g");
  CHECK(s.minimal_open(g) == s.whole());
  CHECK(s.leq(g, point_ref::indexed_point(7)));
  CHECK_FALSE(s.leq(point_ref::indexed_point(7), g));
  CHECK(s.check_alexandroff().alexandroff);
  CHECK(s.is_open(symbolic_set::of_indexed(index_set::finite({2}))));
  CHECK_FALSE(s.is_open(symbolic_set::of_named({"g"})));
  CHECK(s.is_open(s.whole()));
}

TEST_CASE("rendering is stable") {
  const auto s = grmod_kx_schema();
  const auto set = symbolic_set::of_named({"b"}).unite(
      symbolic_set::of_indexed(index_set::down_tail(0)));
  CHECK(to_string(set, s) == "{b} + {s_i : i <= 0}");
  CHECK(to_string(symbolic_set::of_indexed(index_set::finite({1, 2})), s) == "{s_1, s_2}");
  CHECK(to_string(s.whole(), s) == "{b} + {s_i : all i}");
  CHECK(s.display(point_ref::indexed_point(-2)) == "s_-2");
  CHECK(s.class_display() == "s_i");
  const std::map<long, std::string> labels{{1, "(3)"}};
  CHECK(to_string(symbolic_set::of_indexed(index_set::finite({1})), s, &labels) == "{(3)}");
}
