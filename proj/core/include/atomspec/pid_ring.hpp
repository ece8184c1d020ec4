#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "atomspec/errors.hpp"

namespace atomspec::pid {

// Ring of integers with arbitrary-precision elements.  Canonical associates
// are the nonnegative representatives; primes enumerate as 2, 3, 5, ...
class integer_ring {
 public:
  using elem = mpz_class;

  std::string name() const { return "Z"; }
  elem zero() const { return elem(0); }
  elem one() const { return elem(1); }
  elem from_long(long v) const { return elem(v); }

  elem add(const elem& a, const elem& b) const { return a + b; }
  elem sub(const elem& a, const elem& b) const { return a - b; }
  elem mul(const elem& a, const elem& b) const { return a * b; }
  elem neg(const elem& a) const { return -a; }

  bool is_zero(const elem& a) const { return sgn(a) == 0; }
  bool is_unit(const elem& a) const { return a == 1 || a == -1; }

  // Truncated division: |remainder| < |divisor|.
  std::pair<elem, elem> divmod(const elem& a, const elem& b) const;
  // Strict Euclidean-size comparison, |a| < |b|.
  bool smaller(const elem& a, const elem& b) const;
  elem gcd(const elem& a, const elem& b) const;
  // Unit u with u*a the canonical associate of a (a nonzero).
  elem canonical_unit(const elem& a) const;
  std::string str(const elem& a) const { return a.get_str(); }

  bool is_prime_elem(const elem& a) const;
  // Prime factorization of a canonical nonzero non-unit, primes ascending.
  std::vector<std::pair<elem, unsigned>> factor(const elem& a) const;
  elem nth_prime(std::size_t i) const;
  std::size_t prime_index(const elem& p) const;

  bool operator==(const integer_ring&) const = default;
};

// Univariate polynomials over the prime field F_p.  Elements are dense
// coefficient vectors with the constant term first and no trailing zeros;
// the zero polynomial is the empty vector.  Canonical associates are monic;
// irreducibles enumerate by degree, then by the base-p value of the
// non-leading coefficients (so over F_2: x, x+1, x^2+x+1, x^3+x+1, ...).
class fp_poly_ring {
 public:
  using elem = std::vector<long>;

  explicit fp_poly_ring(long p);
  long characteristic() const { return p_; }

  std::string name() const { return "F" + std::to_string(p_) + "[x]"; }
  elem zero() const { return {}; }
  elem one() const { return {1}; }
  elem from_long(long v) const;
  // Reduces mod p and strips trailing zeros.
  elem from_coeffs(std::vector<long> c) const;
  long degree(const elem& a) const { return static_cast<long>(a.size()) - 1; }

  elem add(const elem& a, const elem& b) const;
  elem sub(const elem& a, const elem& b) const;
  elem mul(const elem& a, const elem& b) const;
  elem neg(const elem& a) const;

  bool is_zero(const elem& a) const { return a.empty(); }
  bool is_unit(const elem& a) const { return a.size() == 1; }

  // Long division: deg(remainder) < deg(divisor).
  std::pair<elem, elem> divmod(const elem& a, const elem& b) const;
  // Strict Euclidean-size comparison, deg(a) < deg(b).
  bool smaller(const elem& a, const elem& b) const { return a.size() < b.size(); }
  elem gcd(const elem& a, const elem& b) const;
  // Constant 1/lc(a), so canonical_unit(a)*a is monic.
  elem canonical_unit(const elem& a) const;
  std::string str(const elem& a) const;

  bool is_prime_elem(const elem& a) const;
  std::vector<std::pair<elem, unsigned>> factor(const elem& a) const;
  elem nth_prime(std::size_t i) const;
  std::size_t prime_index(const elem& p) const;

  bool operator==(const fp_poly_ring&) const = default;

 private:
  long p_ = 2;

  long inv_mod(long a) const;
  // Monic irreducibles of exactly the given degree, enumeration order.
  std::vector<elem> irreducibles_of_degree(long d) const;
};

}  // namespace atomspec::pid
