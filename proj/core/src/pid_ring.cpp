#include "atomspec/pid_ring.hpp"

#include <algorithm>
#include <mutex>

namespace atomspec::pid {

std::pair<integer_ring::elem, integer_ring::elem> integer_ring::divmod(const elem& a,
                                                                       const elem& b) const {
  if (is_zero(b)) throw input_error("division by zero");
  elem q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {q, r};
}

bool integer_ring::smaller(const elem& a, const elem& b) const {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

integer_ring::elem integer_ring::gcd(const elem& a, const elem& b) const {
  elem g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

integer_ring::elem integer_ring::canonical_unit(const elem& a) const {
  if (is_zero(a)) throw internal_error("canonical unit of zero");
  return sgn(a) < 0 ? elem(-1) : elem(1);
}

bool integer_ring::is_prime_elem(const elem& a) const {
  elem m = abs(a);
  return mpz_probab_prime_p(m.get_mpz_t(), 40) != 0;
}

namespace {

// Shared ascending prime table, grown on demand.  Callers must hold the lock
// for the whole read.
std::mutex prime_mutex;
std::vector<mpz_class> prime_cache{2, 3};

void grow_primes(std::size_t need_count, const mpz_class* need_value) {
  auto grown_enough = [&] {
    if (prime_cache.size() <= need_count) return false;
    return need_value == nullptr || prime_cache.back() >= *need_value;
  };
  mpz_class cand = prime_cache.back();
  while (!grown_enough()) {
    cand += 2;
    bool prime = true;
    for (const auto& p : prime_cache) {
      if (p * p > cand) break;
      if (cand % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) prime_cache.push_back(cand);
  }
}

}  // namespace

std::vector<std::pair<integer_ring::elem, unsigned>> integer_ring::factor(const elem& a) const {
  elem m = abs(a);
  if (is_zero(m) || m == 1) throw input_error("factoring zero or a unit");
  std::vector<std::pair<elem, unsigned>> out;
  elem d = 2;
  std::size_t i = 0;
  while (m > 1) {
    if (d * d > m) {
      out.emplace_back(m, 1u);
      break;
    }
    unsigned mult = 0;
    while (m % d == 0) {
      m /= d;
      ++mult;
    }
    if (mult) out.emplace_back(d, mult);
    d = nth_prime(++i);
  }
  return out;
}

integer_ring::elem integer_ring::nth_prime(std::size_t i) const {
  std::lock_guard<std::mutex> lock(prime_mutex);
  grow_primes(i, nullptr);
  return prime_cache[i];
}

std::size_t integer_ring::prime_index(const elem& p) const {
  if (!is_prime_elem(p) || sgn(p) < 0) throw input_error(str(p) + " is not a canonical prime");
  std::lock_guard<std::mutex> lock(prime_mutex);
  grow_primes(0, &p);
  const auto it = std::lower_bound(prime_cache.begin(), prime_cache.end(), p);
  if (it == prime_cache.end() || *it != p) throw internal_error("prime table lookup failed");
  return static_cast<std::size_t>(it - prime_cache.begin());
}

fp_poly_ring::fp_poly_ring(long p) : p_(p) {
  if (p < 2) throw input_error("field characteristic must be a prime");
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw input_error("field characteristic must be a prime");
  }
}

fp_poly_ring::elem fp_poly_ring::from_long(long v) const {
  long r = v % p_;
  if (r < 0) r += p_;
  return r == 0 ? elem{} : elem{r};
}

fp_poly_ring::elem fp_poly_ring::from_coeffs(std::vector<long> c) const {
  for (auto& v : c) {
    v %= p_;
    if (v < 0) v += p_;
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

fp_poly_ring::elem fp_poly_ring::add(const elem& a, const elem& b) const {
  elem r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    long v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % p_;
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

fp_poly_ring::elem fp_poly_ring::sub(const elem& a, const elem& b) const {
  return add(a, neg(b));
}

fp_poly_ring::elem fp_poly_ring::mul(const elem& a, const elem& b) const {
  if (a.empty() || b.empty()) return {};
  elem r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

fp_poly_ring::elem fp_poly_ring::neg(const elem& a) const {
  elem r = a;
  for (auto& v : r) v = (p_ - v) % p_;
  return r;
}

long fp_poly_ring::inv_mod(long a) const {
  long t = 0, nt = 1, r = p_, nr = a % p_;
  if (nr < 0) nr += p_;
  while (nr != 0) {
    const long q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw internal_error("inverse of a non-unit residue");
  return t < 0 ? t + p_ : t;
}

std::pair<fp_poly_ring::elem, fp_poly_ring::elem> fp_poly_ring::divmod(const elem& a,
                                                                       const elem& b) const {
  if (b.empty()) throw input_error("division by zero");
  if (a.size() < b.size()) return {{}, a};
  const long lead_inv = inv_mod(b.back());
  elem rem = a;
  elem quot(a.size() - b.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    if (rem.size() < b.size() + k) continue;
    const long c = (rem[b.size() - 1 + k] * lead_inv) % p_;
    if (c == 0) continue;
    quot[k] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      long v = (rem[i + k] - c * b[i]) % p_;
      if (v < 0) v += p_;
      rem[i + k] = v;
    }
  }
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  while (!quot.empty() && quot.back() == 0) quot.pop_back();
  return {quot, rem};
}

fp_poly_ring::elem fp_poly_ring::gcd(const elem& a, const elem& b) const {
  elem x = a, y = b;
  while (!y.empty()) {
    auto [q, r] = divmod(x, y);
    x = std::exchange(y, r);
  }
  if (x.empty()) return x;
  return mul(x, canonical_unit(x));
}

fp_poly_ring::elem fp_poly_ring::canonical_unit(const elem& a) const {
  if (a.empty()) throw internal_error("canonical unit of zero");
  return {inv_mod(a.back())};
}

std::string fp_poly_ring::str(const elem& a) const {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(a[k]);
    } else {
      if (a[k] != 1) out += std::to_string(a[k]);
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::vector<fp_poly_ring::elem> fp_poly_ring::irreducibles_of_degree(long d) const {
  std::vector<elem> smaller_irr;
  for (long e = 1; 2 * e <= d; ++e) {
    auto more = irreducibles_of_degree(e);
    smaller_irr.insert(smaller_irr.end(), more.begin(), more.end());
  }
  std::vector<elem> out;
  // Non-leading coefficients counted in base p, constant digit first.
  long total = 1;
  for (long e = 0; e < d; ++e) total *= p_;
  for (long k = 0; k < total; ++k) {
    elem f(static_cast<std::size_t>(d) + 1, 0);
    long rest = k;
    for (long e = 0; e < d; ++e) {
      f[static_cast<std::size_t>(e)] = rest % p_;
      rest /= p_;
    }
    f[static_cast<std::size_t>(d)] = 1;
    if (d >= 1 && f[0] == 0 && d > 1) continue;  // divisible by x
    bool irr = true;
    for (const auto& g : smaller_irr) {
      if (divmod(f, g).second.empty()) {
        irr = false;
        break;
      }
    }
    if (irr) out.push_back(f);
  }
  return out;
}

bool fp_poly_ring::is_prime_elem(const elem& a) const {
  const long d = degree(a);
  if (d < 1) return false;
  for (long e = 1; 2 * e <= d; ++e) {
    for (const auto& g : irreducibles_of_degree(e)) {
      if (divmod(a, g).second.empty()) return false;
    }
  }
  return true;
}

std::vector<std::pair<fp_poly_ring::elem, unsigned>> fp_poly_ring::factor(const elem& a) const {
  if (degree(a) < 1) throw input_error("factoring zero or a unit");
  elem m = mul(a, canonical_unit(a));
  std::vector<std::pair<elem, unsigned>> out;
  for (long e = 1; degree(m) >= 1 && 2 * e <= degree(m); ++e) {
    for (const auto& g : irreducibles_of_degree(e)) {
      unsigned mult = 0;
      while (true) {
        auto [q, r] = divmod(m, g);
        if (!r.empty()) break;
        m = q;
        ++mult;
      }
      if (mult) out.emplace_back(g, mult);
      if (degree(m) < 2 * e) break;
    }
  }
  if (degree(m) >= 1) out.emplace_back(m, 1u);
  return out;
}

fp_poly_ring::elem fp_poly_ring::nth_prime(std::size_t i) const {
  std::size_t seen = 0;
  for (long d = 1;; ++d) {
    const auto irr = irreducibles_of_degree(d);
    if (i < seen + irr.size()) return irr[i - seen];
    seen += irr.size();
    if (d > 24) throw input_error("irreducible index out of supported range");
  }
}

std::size_t fp_poly_ring::prime_index(const elem& p) const {
  if (!is_prime_elem(p) || p.back() != 1) {
    throw input_error(str(p) + " is not a canonical (monic) irreducible");
  }
  std::size_t seen = 0;
  for (long d = 1; d < degree(p); ++d) seen += irreducibles_of_degree(d).size();
  const auto irr = irreducibles_of_degree(degree(p));
  for (std::size_t k = 0; k < irr.size(); ++k) {
    if (irr[k] == p) return seen + k;
  }
  throw internal_error("irreducible enumeration lookup failed");
}

}  // namespace atomspec::pid
