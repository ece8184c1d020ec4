#include "atomspec/finspace.hpp"

#include <algorithm>
#include <set>

namespace atomspec::finspace {

namespace {

void check_point_count(std::size_t n, std::size_t max_points) {
  if (n > max_points) {
    throw input_error("point count " + std::to_string(n) + " exceeds cap " +
                      std::to_string(max_points));
  }
  if (n > 31) throw input_error("finite spaces are limited to 31 points");
}

}  // namespace

fin_space fin_space::generate(std::vector<std::string> points, const std::vector<subset>& subbasis,
                              std::size_t max_points) {
  check_point_count(points.size(), max_points);
  const subset full = points.empty() ? 0 : static_cast<subset>((1u << points.size()) - 1);
  std::set<subset> family;
  family.insert(0);
  family.insert(full);
  for (subset s : subbasis) {
    if ((s & ~full) != 0) throw input_error("subbasis set mentions a point outside the space");
    family.insert(s);
  }
  // Close under pairwise union/intersection until stable.  The family is
  // bounded by 2^n, so this terminates quickly at the default cap.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<subset> snapshot(family.begin(), family.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        grew |= family.insert(snapshot[i] | snapshot[j]).second;
        grew |= family.insert(snapshot[i] & snapshot[j]).second;
      }
    }
  }
  return fin_space(std::move(points), std::vector<subset>(family.begin(), family.end()));
}

fin_space fin_space::from_opens(std::vector<std::string> points, std::vector<subset> opens,
                                std::size_t max_points) {
  check_point_count(points.size(), max_points);
  const subset full = points.empty() ? 0 : static_cast<subset>((1u << points.size()) - 1);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  auto has = [&](subset s) { return std::binary_search(opens.begin(), opens.end(), s); };
  if (!has(0) || !has(full)) throw input_error("topology must contain the empty set and the space");
  for (subset s : opens) {
    if ((s & ~full) != 0) throw input_error("open set mentions a point outside the space");
    for (subset t : opens) {
      if (!has(s | t) || !has(s & t)) {
        throw input_error("family is not closed under union/intersection");
      }
    }
  }
  return fin_space(std::move(points), std::move(opens));
}

fin_space fin_space::alexandroff(const order::preorder& p) {
  check_point_count(p.size(), default_max_points);
  const std::size_t n = p.size();
  std::vector<subset> opens;
  const subset full = n == 0 ? 0 : static_cast<subset>((1u << n) - 1);
  for (subset s = 0;; ++s) {
    bool up_closed = true;
    for (std::size_t a = 0; a < n && up_closed; ++a) {
      if (!(s >> a & 1u)) continue;
      for (std::size_t b = 0; b < n && up_closed; ++b)
        if (p.leq(a, b) && !(s >> b & 1u)) up_closed = false;
    }
    if (up_closed) opens.push_back(s);
    if (s == full) break;
  }
  return fin_space(p.points(), std::move(opens));
}

std::size_t fin_space::index_of(const std::string& name) const {
  auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) throw input_error("unknown point: " + name);
  return static_cast<std::size_t>(it - points_.begin());
}

bool fin_space::is_open(subset s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

order::preorder fin_space::specialization_preorder() const {
  const std::size_t n = size();
  std::vector<bool> rel(n * n, false);
  for (std::size_t x = 0; x < n; ++x) {
    subset ux = minimal_open(x);
    for (std::size_t y = 0; y < n; ++y) rel[x * n + y] = (ux >> y & 1u) != 0;
  }
  return order::preorder::from_matrix(points_, std::move(rel));
}

subset fin_space::minimal_open(std::size_t x) const {
  subset acc = everything();
  for (subset s : opens_)
    if (s >> x & 1u) acc &= s;
  return acc;
}

bool fin_space::is_kolmogorov() const {
  const std::size_t n = size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (minimal_open(x) == minimal_open(y)) return false;
  return true;
}

std::pair<fin_space, std::vector<std::size_t>> fin_space::kolmogorov_quotient() const {
  const std::size_t n = size();
  std::vector<subset> mins(n);
  for (std::size_t x = 0; x < n; ++x) mins[x] = minimal_open(x);

  std::vector<std::size_t> cls(n, SIZE_MAX);
  std::vector<std::string> class_names;
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != SIZE_MAX) continue;
    const std::size_t c = reps.size();
    reps.push_back(x);
    class_names.push_back(points_[x]);
    for (std::size_t y = x; y < n; ++y)
      if (mins[y] == mins[x]) cls[y] = c;
  }

  // Image of an open under the projection.  Opens are unions of minimal
  // opens, so images stay a topology and distinct opens stay distinct.
  std::vector<subset> qopens;
  for (subset s : opens_) {
    subset img = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (s >> x & 1u) img |= static_cast<subset>(1u << cls[x]);
    qopens.push_back(img);
  }
  std::sort(qopens.begin(), qopens.end());
  qopens.erase(std::unique(qopens.begin(), qopens.end()), qopens.end());
  return {fin_space(std::move(class_names), std::move(qopens)), std::move(cls)};
}

std::optional<subset> counit_witness(const fin_space& x) {
  const fin_space rebuilt = fin_space::alexandroff(x.specialization_preorder());
  for (subset s : rebuilt.opens())
    if (!x.is_open(s)) return s;
  for (subset s : x.opens())
    if (!rebuilt.is_open(s)) return s;
  return std::nullopt;
}

bool adjunction_check(const order::preorder& p, const fin_space& y, std::uint64_t max_maps) {
  const std::size_t np = p.size();
  const std::size_t ny = y.size();
  if (np == 0) return true;
  if (ny == 0) return true;  // no maps from a nonempty set; both sides empty

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < np; ++i) {
    total *= ny;
    if (total > max_maps) {
      throw input_error("map enumeration exceeds cap of " + std::to_string(max_maps));
    }
  }

  const fin_space sp = fin_space::alexandroff(p);
  const order::preorder ty = y.specialization_preorder();

  std::vector<std::size_t> f(np, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < np; ++i, c /= ny) f[i] = c % ny;

    bool continuous = true;
    for (subset open_y : y.opens()) {
      subset pre = 0;
      for (std::size_t i = 0; i < np; ++i)
        if (open_y >> f[i] & 1u) pre |= static_cast<subset>(1u << i);
      if (!sp.is_open(pre)) {
        continuous = false;
        break;
      }
    }

    bool monotone = true;
    for (std::size_t a = 0; a < np && monotone; ++a)
      for (std::size_t b = 0; b < np && monotone; ++b)
        if (p.leq(a, b) && !ty.leq(f[a], f[b])) monotone = false;

    if (continuous != monotone) return false;
  }
  return true;
}

std::vector<std::string> subset_names(const fin_space& x, subset s) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (s >> i & 1u) names.push_back(x.point_name(i));
  return names;
}

}  // namespace atomspec::finspace
