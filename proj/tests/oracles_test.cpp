#include "atomspec/oracles.hpp"

#include <vector>

#include "doctest.h"

using atomspec::input_error;
using namespace atomspec::oracles;
namespace ord = atomspec::order;
namespace pid = atomspec::pid;

TEST_CASE("enumeration counts match the literature") {
  // Preorders on n labeled points, n = 0..5 (= topologies for n <= 4).
  const std::size_t pre[] = {1, 1, 4, 29, 355, 6942};
  const std::size_t pos[] = {1, 1, 3, 19, 219, 4231};
  for (std::size_t n = 0; n <= 5; ++n) {
    CHECK(all_preorders(n).size() == pre[n]);
    CHECK(all_posets(n).size() == pos[n]);
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(all_topologies(n).size() == pre[n]);
  }
  CHECK_THROWS_AS(all_preorders(6), input_error);
  CHECK_THROWS_AS(all_topologies(5), input_error);
}

TEST_CASE("every enumerated preorder is one") {
  for (const auto& p : all_preorders(3)) {
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(p.leq(i, i));
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          if (p.leq(i, j) && p.leq(j, k)) CHECK(p.leq(i, k));
        }
    }
  }
  for (const auto& p : all_posets(3)) CHECK(p.is_poset());
}

TEST_CASE("up heights") {
  const auto p = ord::preorder::from_generators({"a", "b", "c", "d"},
                                                {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  CHECK(up_height(p, p.index_of("a")) == 2);
  CHECK(up_height(p, p.index_of("b")) == 1);
  CHECK(up_height(p, p.index_of("d")) == 0);
}

TEST_CASE("minor gcd factors") {
  const pid::integer_ring z;
  pid::matrix<pid::integer_ring> m(2, 2, z.zero());
  m.at(0, 0) = 2;
  m.at(1, 1) = 3;
  CHECK(minor_gcd_factors(z, m) == std::vector<pid::integer_ring::elem>{1, 6});

  pid::matrix<pid::integer_ring> zero(2, 3, z.zero());
  CHECK(minor_gcd_factors(z, zero).empty());

  pid::matrix<pid::integer_ring> big(7, 7, z.zero());
  CHECK_THROWS_AS(minor_gcd_factors(z, big), input_error);
}
