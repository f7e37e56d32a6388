#include "krstrata/alcove.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>

#include "krstrata/error.hpp"
#include "krstrata/parallel.hpp"

namespace krstrata {

std::vector<Coweight> base_alcove_vertices(int d) {
  std::vector<Coweight> vertices;
  for (int i = 0; i < d; ++i) {
    Coweight a(d, 0);
    std::fill(a.begin(), a.begin() + i, 1);
    vertices.push_back(std::move(a));
  }
  return vertices;
}

Coweight vertex_displacement(const AffinePermutation& w, int i) {
  const int d = w.period();
  if (i < 0 || i >= d) throw Error(ErrorKind::IndexOutOfRange, "vertex index outside [0, d)");
  Coweight a(d, 0);
  std::fill(a.begin(), a.begin() + i, 1);
  auto image = w.act(a);
  for (int k = 0; k < d; ++k) image[k] -= a[k];
  return image;
}

bool is_permissible_gl(const AffinePermutation& w, int r) {
  const int d = w.period();
  if (r < 0 || r > d) throw Error(ErrorKind::InvalidArgument, "r must lie in [0, d]");
  if (w.val_det() != r) return false;
  for (int i = 0; i < d; ++i) {
    const auto v = vertex_displacement(w, i);
    int ones = 0;
    for (int c : v) {
      if (c != 0 && c != 1) return false;
      ones += c;
    }
    if (ones != r) return false;
  }
  return true;
}

bool is_permissible_lattice(const AffinePermutation& w, int r) {
  const long long d = w.period();
  if (w.val_det() != r) throw Error(ErrorKind::ValDetMismatch, "val-det(w) differs from r");
  for (long long i = 0; i < d; ++i) {
    // L_i within V_i: every k > i has w(k) > i; the minimum over a residue
    // system is attained at the first representative above i.
    long long low = std::numeric_limits<long long>::max();
    for (long long k = i + 1; k <= i + d; ++k) low = std::min<long long>(low, w(k));
    if (low <= i) return false;
    // t V_i within L_i: every k <= i - d has w(k) <= i.
    long long high = std::numeric_limits<long long>::min();
    for (long long k = i - 2 * d + 1; k <= i - d; ++k) high = std::max<long long>(high, w(k));
    if (high > i) return false;
  }
  return true;
}

bool is_permissible_gsp(const AffineWeylGroup& group, const AffinePermutation& w) {
  if (group.type() != GroupType::GSp) throw Error(ErrorKind::InvalidArgument, "expected a GSp group");
  if (!group.contains(w)) return false;
  return is_permissible_gl(w, group.rank());
}

std::vector<Coweight> weyl_orbit_mu(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const int d = 2 * n;
  std::vector<Coweight> orbit;
  for (unsigned mask = (1u << n); mask-- > 0;) {
    Coweight v(d);
    for (int i = 0; i < n; ++i) {
      v[i] = (mask >> (n - 1 - i)) & 1u;
      v[d - 1 - i] = 1 - v[i];
    }
    orbit.push_back(std::move(v));
  }
  std::sort(orbit.begin(), orbit.end(), std::greater<>());
  return orbit;
}

std::vector<AffinePermutation> orbit_translations(int n) {
  std::vector<AffinePermutation> out;
  for (const auto& lambda : weyl_orbit_mu(n)) out.push_back(AffinePermutation::translation(lambda));
  return out;
}

KRSet enumerate_perm_gsp(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (n > 5) throw Error(ErrorKind::SizeLimit, "permissible-set enumeration is limited to n <= 5");
  const auto group = AffineWeylGroup::gsp(n);
  const auto finite = group.finite_weyl_group();
  const auto orbit = weyl_orbit_mu(n);

  std::vector<std::optional<AffinePermutation>> hits(finite.size() * orbit.size());
  parallel_for(hits.size(), [&](std::size_t k) {
    auto w = AffinePermutation::from_parts(finite[k / orbit.size()], orbit[k % orbit.size()]);
    if (is_permissible_gsp(group, w)) hits[k] = std::move(w);
  });

  KRSet set{n, orbit.front(), {}};
  for (auto& h : hits)
    if (h) set.elements.push_back(std::move(*h));
  std::sort(set.elements.begin(), set.elements.end());
  return set;
}

std::vector<AffinePermutation> bruhat_down_set(const AffineWeylGroup& group, const AffinePermutation& y) {
  const auto word = group.reduced_word(y);
  std::set<AffinePermutation> below{group.omega_power(group.component(y))};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto& s = group.simple_reflections()[*it];
    std::vector<AffinePermutation> shifted;
    for (const auto& x : below) shifted.push_back(compose(s, x));
    below.insert(shifted.begin(), shifted.end());
  }
  return {below.begin(), below.end()};
}

KRSet enumerate_adm_gsp(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (n > 3) throw Error(ErrorKind::SizeLimit, "admissible-set enumeration is limited to n <= 3");
  const auto group = AffineWeylGroup::gsp(n);
  const auto translations = orbit_translations(n);
  std::set<AffinePermutation> pool;
  for (const auto& t : translations) {
    const auto below = bruhat_down_set(group, t);
    pool.insert(below.begin(), below.end());
  }
  KRSet set{n, weyl_orbit_mu(n).front(), {}};
  for (const auto& w : pool) {
    const bool admissible = std::any_of(translations.begin(), translations.end(),
                                        [&](const auto& t) { return group.bruhat_leq(w, t); });
    if (!admissible) throw Error(ErrorKind::FormulaMismatch, "down-set element not below any translation");
    set.elements.push_back(w);
  }
  return set;
}

}  // namespace krstrata
