#include "atomspec/pid_ring.hpp"

#include <vector>

#include "doctest.h"

using atomspec::input_error;
using namespace atomspec::pid;

TEST_CASE("integer arithmetic and euclidean structure") {
  const integer_ring z;
  CHECK(z.name() == "Z");
  CHECK(z.add(z.from_long(3), z.from_long(4)) == 7);
  CHECK(z.mul(z.from_long(-3), z.from_long(4)) == -12);
  CHECK(z.is_zero(z.zero()));
  CHECK(z.is_unit(z.from_long(-1)));
  CHECK_FALSE(z.is_unit(z.from_long(2)));

  const auto [q, r] = z.divmod(z.from_long(7), z.from_long(3));
  CHECK(q == 2);
  CHECK(r == 1);
  const auto [q2, r2] = z.divmod(z.from_long(-7), z.from_long(3));
  CHECK(q2 == -2);
  CHECK(r2 == -1);
  CHECK(z.smaller(r2, z.from_long(3)));
  CHECK_THROWS_AS(z.divmod(z.from_long(1), z.zero()), input_error);

  CHECK(z.gcd(z.from_long(-12), z.from_long(18)) == 6);
  CHECK(z.canonical_unit(z.from_long(-5)) == -1);
  CHECK(z.canonical_unit(z.from_long(5)) == 1);
  CHECK(z.str(z.from_long(-12)) == "-12");
}

TEST_CASE("integer primes") {
  const integer_ring z;
  CHECK(z.is_prime_elem(z.from_long(7)));
  CHECK(z.is_prime_elem(z.from_long(-7)));
  CHECK_FALSE(z.is_prime_elem(z.from_long(1)));
  CHECK_FALSE(z.is_prime_elem(z.from_long(6)));
  const std::vector<std::pair<integer_ring::elem, unsigned>> twelve{{2, 2}, {3, 1}};
  CHECK(z.factor(z.from_long(12)) == twelve);
  const std::vector<std::pair<integer_ring::elem, unsigned>> thirty{{2, 1}, {3, 1}, {5, 1}};
  CHECK(z.factor(z.from_long(-30)) == thirty);
  CHECK(z.nth_prime(0) == 2);
  CHECK(z.nth_prime(3) == 7);
  CHECK(z.nth_prime(29) == 113);
  CHECK(z.prime_index(z.from_long(13)) == 5);
  CHECK(z.prime_index(z.from_long(2)) == 0);
  CHECK_THROWS_AS(z.prime_index(z.from_long(6)), input_error);
}

TEST_CASE("polynomial arithmetic over a prime field") {
  CHECK_THROWS_AS(fp_poly_ring(4), input_error);
  CHECK_THROWS_AS(fp_poly_ring(1), input_error);
  const fp_poly_ring f2(2);
  CHECK(f2.name() == "F2[x]");
  CHECK(f2.characteristic() == 2);

  const auto x = f2.from_coeffs({0, 1});
  const auto x1 = f2.from_coeffs({1, 1});
  CHECK(f2.from_coeffs({1, 1, 0}) == x1);
  CHECK(f2.degree(x1) == 1);
  CHECK(f2.is_zero(f2.add(x1, x1)));
  CHECK(f2.mul(x1, x1) == f2.from_coeffs({1, 0, 1}));

  // x^3+x+1 = (x+1)(x^2+x+1) + x over F2.
  const auto cubic = f2.from_coeffs({1, 1, 0, 1});
  const auto quad = f2.from_coeffs({1, 1, 1});
  const auto [q, r] = f2.divmod(cubic, quad);
  CHECK(q == x1);
  CHECK(r == x);
  CHECK(f2.smaller(r, quad));

  CHECK(f2.gcd(f2.from_coeffs({1, 0, 1}), x1) == x1);
  CHECK(f2.str(f2.from_coeffs({1, 0, 1})) == "x^2+1");
  CHECK(f2.str(x) == "x");
  CHECK(f2.str(f2.zero()) == "0");
  CHECK(f2.str(f2.one()) == "1");

  const fp_poly_ring f3(3);
  CHECK(f3.str(f3.from_coeffs({2, 1})) == "x+2");
  // Canonical form is monic: 2x is associate to x.
  const auto two_x = f3.from_coeffs({0, 2});
  CHECK(f3.mul(two_x, f3.canonical_unit(two_x)) == f3.from_coeffs({0, 1}));
}

TEST_CASE("irreducible polynomials in canonical order") {
  const fp_poly_ring f2(2);
  CHECK(f2.nth_prime(0) == f2.from_coeffs({0, 1}));            // x
  CHECK(f2.nth_prime(1) == f2.from_coeffs({1, 1}));            // x+1
  CHECK(f2.nth_prime(2) == f2.from_coeffs({1, 1, 1}));         // x^2+x+1
  CHECK(f2.nth_prime(3) == f2.from_coeffs({1, 1, 0, 1}));      // x^3+x+1
  CHECK(f2.nth_prime(4) == f2.from_coeffs({1, 0, 1, 1}));      // x^3+x^2+1
  CHECK(f2.prime_index(f2.from_coeffs({1, 1, 1})) == 2);
  CHECK_THROWS_AS(f2.prime_index(f2.from_coeffs({1, 0, 1})), input_error);

  CHECK(f2.is_prime_elem(f2.from_coeffs({1, 1, 1})));
  CHECK_FALSE(f2.is_prime_elem(f2.from_coeffs({1, 0, 1})));  // (x+1)^2
  // x^3+x = x(x+1)^2 over F2.
  const std::vector<std::pair<fp_poly_ring::elem, unsigned>> cube_factors{{{0, 1}, 1},
                                                                          {{1, 1}, 2}};
  CHECK(f2.factor(f2.from_coeffs({0, 1, 0, 1})) == cube_factors);

  const fp_poly_ring f3(3);
  CHECK(f3.nth_prime(0) == f3.from_coeffs({0, 1}));  // x
  CHECK(f3.nth_prime(1) == f3.from_coeffs({1, 1}));  // x+1
  CHECK(f3.nth_prime(2) == f3.from_coeffs({2, 1}));  // x+2
}
