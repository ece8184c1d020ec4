#include "atomspec/snf.hpp"

#include <vector>

#include "atomspec/oracles.hpp"
#include "doctest.h"

using atomspec::input_error;
using namespace atomspec::pid;
namespace oracles = atomspec::oracles;

namespace {

matrix<integer_ring> zmat(std::size_t r, std::size_t c, std::vector<long> entries) {
  const integer_ring ring;
  matrix<integer_ring> m(r, c, ring.zero());
  for (std::size_t i = 0; i < entries.size(); ++i) m.a[i] = entries[i];
  return m;
}

}  // namespace

TEST_CASE("matrix product and determinant") {
  const integer_ring z;
  const auto a = zmat(2, 2, {1, 2, 3, 4});
  const auto b = zmat(2, 2, {0, 1, 1, 0});
  const auto p = mat_mul(z, a, b);
  CHECK(p.at(0, 0) == 2);
  CHECK(p.at(0, 1) == 1);
  CHECK(p.at(1, 0) == 4);
  CHECK(p.at(1, 1) == 3);
  CHECK(det(z, a) == -2);
  CHECK(det(z, matrix<integer_ring>::identity(z, 3)) == 1);
  CHECK(det(z, matrix<integer_ring>(0, 0, z.zero())) == 1);
  CHECK_THROWS_AS(det(z, zmat(2, 3, {})), input_error);
  CHECK_THROWS_AS(mat_mul(z, zmat(2, 3, {}), zmat(2, 2, {})), input_error);
}

TEST_CASE("diagonal reduction over the integers") {
  const integer_ring z;

  auto check_snf = [&](const matrix<integer_ring>& m, const std::vector<long>& factors,
                       std::size_t free_rank) {
    const auto r = smith_normal_form(z, m);
    std::vector<integer_ring::elem> want(factors.begin(), factors.end());
    CHECK(r.invariant_factors == want);
    CHECK(r.free_rank == free_rank);
    CHECK(mat_mul(z, mat_mul(z, r.left, m), r.right) == r.diagonal);
    CHECK(z.is_unit(det(z, r.left)));
    CHECK(z.is_unit(det(z, r.right)));
    CHECK(r.invariant_factors == oracles::minor_gcd_factors(z, m));
  };

  check_snf(matrix<integer_ring>::identity(z, 2), {1, 1}, 0);
  check_snf(zmat(2, 2, {2, 0, 0, 3}), {1, 6}, 0);
  check_snf(zmat(2, 3, {0, 0, 0, 0, 0, 0}), {}, 2);
  check_snf(zmat(1, 1, {0}), {}, 1);
  check_snf(zmat(1, 1, {-5}), {5}, 0);
  check_snf(zmat(2, 2, {1, 2, 3, 4}), {1, 2}, 0);
  check_snf(zmat(1, 2, {4, 6}), {2}, 0);
  check_snf(zmat(2, 1, {4, 6}), {2}, 1);
  check_snf(zmat(3, 3, {2, 4, 4, -6, 6, 12, 10, 4, 16}), {2, 2, 156}, 0);
  check_snf(zmat(0, 0, {}), {}, 0);
  check_snf(zmat(2, 0, {}), {}, 2);
}

TEST_CASE("diagonal reduction over polynomials") {
  const fp_poly_ring f2(2);
  const auto x = f2.from_coeffs({0, 1});
  const auto xx = f2.from_coeffs({0, 0, 1});
  const auto x2x = f2.from_coeffs({0, 1, 1});

  matrix<fp_poly_ring> m(2, 2, f2.zero());
  m.at(0, 0) = x;
  m.at(1, 1) = xx;
  auto r = smith_normal_form(f2, m);
  CHECK(r.invariant_factors == std::vector<fp_poly_ring::elem>{x, xx});
  CHECK(r.free_rank == 0);

  matrix<fp_poly_ring> m2(2, 2, f2.zero());
  m2.at(0, 0) = x2x;
  m2.at(1, 1) = x;
  r = smith_normal_form(f2, m2);
  CHECK(r.invariant_factors == std::vector<fp_poly_ring::elem>{x, x2x});
  CHECK(r.invariant_factors == oracles::minor_gcd_factors(f2, m2));
  CHECK(mat_mul(f2, mat_mul(f2, r.left, m2), r.right) == r.diagonal);

  // Non-monic input lands in monic canonical form.
  const fp_poly_ring f3(3);
  matrix<fp_poly_ring> m3(1, 1, f3.from_coeffs({0, 2}));
  const auto r3 = smith_normal_form(f3, m3);
  CHECK(r3.invariant_factors == std::vector<fp_poly_ring::elem>{{0, 1}});
}

TEST_CASE("divisibility chain holds on awkward inputs") {
  const integer_ring z;
  // Forces the divisibility sweep: gcd of the diagonal pair is 2.
  const auto r = smith_normal_form(z, zmat(2, 2, {2, 0, 0, 2}));
  CHECK(r.invariant_factors == std::vector<integer_ring::elem>{2, 2});
  const auto r2 = smith_normal_form(z, zmat(2, 2, {6, 4, 4, 4}));
  CHECK(r2.invariant_factors == std::vector<integer_ring::elem>{2, 4});
  CHECK(r2.invariant_factors == oracles::minor_gcd_factors(z, zmat(2, 2, {6, 4, 4, 4})));
}
