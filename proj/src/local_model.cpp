#include "krstrata/local_model.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "krstrata/alcove.hpp"
#include "krstrata/error.hpp"
#include "krstrata/parallel.hpp"
#include "krstrata/weyl_group.hpp"

namespace krstrata {

namespace {

void require_supported(int n, int q) {
  const PrimeField field(q);  // rejects non-primes
  const bool ok = (n == 1 && q <= 7) || (n == 2 && q <= 3);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (!ok) throw Error(ErrorKind::SizeLimit, "point enumeration supports n = 1 (q <= 7) and n = 2 (q <= 3)");
}

FqVector unit(int size, int c) {
  FqVector v(size, 0);
  v[c] = 1;
  return v;
}

}  // namespace

int pairing_sign(int n, long long index) {
  const long long d = 2LL * n;
  const long long r = ((index - 1) % d + d) % d + 1;
  return r <= n ? 1 : -1;
}

Subspace shift_to_next(const Subspace& space, const PrimeField& field) {
  const int d = space.ambient();
  FqMatrix rows;
  for (const auto& v : space.basis()) {
    FqVector w(d, 0);
    for (int c = 1; c < d; ++c) w[c - 1] = v[c];
    rows.push_back(std::move(w));
  }
  return Subspace(field, d, std::move(rows));
}

Subspace dual_space(const Subspace& space, int level, int n, const PrimeField& field) {
  const int d = 2 * n;
  FqMatrix constraints;
  for (const auto& u : space.basis()) {
    FqVector row(d, 0);
    for (int c = 0; c < d; ++c) {
      if (u[c] == 0) continue;
      const int sign = pairing_sign(n, c + 1 + level - d);
      row[d - 1 - c] = sign > 0 ? u[c] : field.neg(u[c]);
    }
    constraints.push_back(std::move(row));
  }
  return Subspace(field, d, null_space(constraints, d, field));
}

void validate_chain(const SubspaceChain& chain) {
  const int n = chain.n;
  const int d = 2 * n;
  const PrimeField field(chain.q);
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvariantViolation, what); };
  if (n < 1 || static_cast<int>(chain.spaces.size()) != d + 1) fail("chain must have 2n+1 members");
  for (const auto& s : chain.spaces)
    if (s.ambient() != d || s.dim() != n) fail("chain member of wrong dimension");
  for (int i = 0; i < d; ++i)
    if (!chain.spaces[i + 1].contains(shift_to_next(chain.spaces[i], field), field))
      fail("chain is not increasing at " + std::to_string(i));
  if (chain.spaces[d] != chain.spaces[0]) fail("L_2n differs from L_0");
  for (int i = 0; i <= d; ++i)
    if (dual_space(chain.spaces[i], i, n, field) != chain.spaces[d - i])
      fail("duality fails at " + std::to_string(i));
}

std::vector<SubspaceChain> enumerate_points(int n, int q) {
  require_supported(n, q);
  const int d = 2 * n;
  const PrimeField field(q);
  const auto grassmannian = all_subspaces(field, d, n);

  std::vector<Subspace> starts;
  for (const auto& s : grassmannian)
    if (dual_space(s, 0, n, field) == s) starts.push_back(s);

  std::vector<std::vector<SubspaceChain>> found(starts.size());
  parallel_for(starts.size(), [&](std::size_t k) {
    std::vector<Subspace> prefix{starts[k]};
    std::function<void()> extend = [&]() {
      const int level = static_cast<int>(prefix.size());
      if (level == n + 1) {
        SubspaceChain chain{n, q, prefix};
        for (int i = n + 1; i <= d; ++i) chain.spaces.push_back(dual_space(prefix[d - i], d - i, n, field));
        validate_chain(chain);
        found[k].push_back(std::move(chain));
        return;
      }
      const auto image = shift_to_next(prefix.back(), field);
      for (const auto& s : grassmannian) {
        if (!s.contains(image, field)) continue;
        if (level == n && dual_space(s, n, n, field) != s) continue;
        prefix.push_back(s);
        extend();
        prefix.pop_back();
      }
    };
    extend();
  });

  std::vector<SubspaceChain> out;
  for (auto& part : found)
    for (auto& c : part) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_points(int n, int q) { return enumerate_points(n, q).size(); }

bool etale_at(const SubspaceChain& chain, int k) {
  const int d = 2 * chain.n;
  if (k < 1 || k > d) throw Error(ErrorKind::IndexOutOfRange, "slot must lie in 1..2n");
  return !chain.spaces[k - 1].contains(unit(d, 0), PrimeField(chain.q));
}

bool multiplicative_at(const SubspaceChain& chain, int k) {
  const int d = 2 * chain.n;
  if (k < 1 || k > d) throw Error(ErrorKind::IndexOutOfRange, "slot must lie in 1..2n");
  const auto& basis = chain.spaces[k].basis();
  return std::any_of(basis.begin(), basis.end(), [d](const FqVector& v) { return v[d - 1] != 0; });
}

int point_p_rank(const SubspaceChain& chain) {
  int rank = 0;
  for (int k = 1; k <= 2 * chain.n; ++k) rank += etale_at(chain, k);
  return rank;
}

SubspaceChain orbit_rep(const AffinePermutation& w, int q) {
  const int d = w.period();
  if (d % 2) throw Error(ErrorKind::InvalidArgument, "period must be even");
  const int n = d / 2;
  const PrimeField field(q);
  const auto group = AffineWeylGroup::gsp(n);
  if (!is_permissible_gsp(group, w)) throw Error(ErrorKind::NotPermissible, w.to_string() + " is not in KR(mu)");

  SubspaceChain chain{n, q, {}};
  for (int i = 0; i <= d; ++i) {
    FqMatrix rows;
    for (int c = 0; c < d; ++c) {
      const long long index = c + 1 + i - d;
      if (w(index) <= i) rows.push_back(unit(d, c));
    }
    Subspace s(field, d, std::move(rows));
    if (s.dim() != n)
      throw Error(ErrorKind::DimensionMismatch, "orbit_rep of " + w.to_string() + " has a member of dimension " +
                                                    std::to_string(s.dim()) + " at level " + std::to_string(i));
    chain.spaces.push_back(std::move(s));
  }
  return chain;
}

AffinePermutation cell_of_point(const SubspaceChain& chain) {
  const int n = chain.n;
  const int d = 2 * n;
  const PrimeField field(chain.q);
  auto fail = [](const std::string& what) { throw Error(ErrorKind::NormalFormFailure, what); };
  if (static_cast<int>(chain.spaces.size()) != d + 1) fail("chain must have 2n+1 members");

  // lead[i]: indices where L_i jumps in the filtration by V_{i-2n} + span(index <= j),
  // for levels 0 .. 4n-1; levels >= 2n reuse L_{i-2n} shifted by t^{-1}.
  std::vector<std::vector<long long>> lead(2 * d);
  for (int i = 0; i < 2 * d; ++i)
    for (int c : chain.spaces[i % d].trailing_pivots(field)) lead[i].push_back(c + 1 + i - d);

  std::vector<long long> window(d);
  for (int j = 1; j <= d; ++j) {
    window[j - 1] = j + d;
    for (int i = j; i < j + d; ++i) {
      if (std::find(lead[i].begin(), lead[i].end(), j) != lead[i].end()) {
        window[j - 1] = i;
        break;
      }
    }
  }
  std::vector<int> w_int(window.begin(), window.end());
  try {
    AffinePermutation w(w_int);
    if (!is_permissible_gsp(AffineWeylGroup::gsp(n), w)) fail(w.to_string() + " is not in KR(mu)");
    return w;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NormalFormFailure) throw;
    fail(std::string("relative position is not an element of KR(mu): ") + e.what());
  }
  throw Error(ErrorKind::NormalFormFailure, "unreachable");
}

namespace {

FqMatrix identity_matrix(int d) {
  FqMatrix m(d, FqVector(d, 0));
  for (int i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

FqMatrix multiply(const FqMatrix& a, const FqMatrix& b, const PrimeField& f) {
  const std::size_t d = a.size();
  FqMatrix out(d, FqVector(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
    }
  return out;
}

FqMatrix symplectic_form(int n, const PrimeField& f) {
  const int d = 2 * n;
  FqMatrix j(d, FqVector(d, 0));
  for (int i = 0; i < d; ++i) j[i][d - 1 - i] = f.reduce(pairing_sign(n, i + 1));
  return j;
}

FqMatrix transpose(const FqMatrix& a) {
  FqMatrix out(a.size(), FqVector(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out[j][i] = a[i][j];
  return out;
}

// Root vector E_{ij} - eps_i eps_j E_{j'i'} (a single E_{ii'} when j = i').
FqMatrix root_vector(int n, int i, int j, const PrimeField& f) {
  const int d = 2 * n;
  FqMatrix m(d, FqVector(d, 0));
  m[i][j] = 1;
  if (i + j != d - 1) {
    const int sign = pairing_sign(n, i + 1) * pairing_sign(n, j + 1);
    m[d - 1 - j][d - 1 - i] = f.reduce(-sign);
  }
  return m;
}

}  // namespace

IwahoriElement make_iwahori(int n, int q, std::vector<FqMatrix> coefficients) {
  const PrimeField field(q);
  const int d = 2 * n;
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvariantViolation, what); };
  if (n < 1 || coefficients.empty()) fail("empty Iwahori element");
  for (auto& m : coefficients) {
    if (static_cast<int>(m.size()) != d) fail("coefficient matrix of wrong size");
    for (auto& row : m) {
      if (static_cast<int>(row.size()) != d) fail("coefficient matrix of wrong size");
      for (auto& x : row) x = field.reduce(x);
    }
  }
  const auto& g0 = coefficients[0];
  for (int i = 0; i < d; ++i) {
    if (g0[i][i] == 0) fail("reduction mod t is singular");
    for (int j = 0; j < i; ++j)
      if (g0[i][j] != 0) fail("reduction mod t is not upper triangular");
  }
  const auto j_form = symplectic_form(n, field);
  const std::size_t depth = coefficients.size();
  for (std::size_t k = 0; k < depth; ++k) {
    FqMatrix m(d, FqVector(d, 0));
    for (std::size_t a = 0; a <= k; ++a) {
      const auto term = multiply(multiply(transpose(coefficients[a]), j_form, field), coefficients[k - a], field);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m[r][c] = field.add(m[r][c], term[r][c]);
    }
    const int similitude = m[0][d - 1];
    if (k == 0 && similitude == 0) fail("similitude factor vanishes mod t");
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        if (m[r][c] != field.mul(similitude, j_form[r][c])) fail("not a symplectic similitude");
  }
  return IwahoriElement{n, q, std::move(coefficients)};
}

IwahoriElement identity_iwahori(int n, int q) {
  return make_iwahori(n, q, {identity_matrix(2 * n)});
}

IwahoriElement random_iwahori(int n, int q, std::uint64_t seed) {
  const PrimeField field(q);
  const int d = 2 * n;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> any(0, q - 1);
  std::uniform_int_distribution<int> unit_dist(1, q - 1);

  FqMatrix g0(d, FqVector(d, 0));
  const int c = unit_dist(rng);
  for (int i = 0; i < n; ++i) {
    const int a = unit_dist(rng);
    g0[i][i] = a;
    g0[d - 1 - i][d - 1 - i] = field.mul(c, field.inv(a));
  }
  auto add_scaled = [&](FqMatrix& m, const FqMatrix& e, int a) {
    for (int r = 0; r < d; ++r)
      for (int s = 0; s < d; ++s) m[r][s] = field.add(m[r][s], field.mul(a, e[r][s]));
  };
  // Positive root subgroups, one representative (i, j) per root: i < j, i + j <= 2n - 1.
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      if (i + j > d - 1) continue;
      auto x = identity_matrix(d);
      add_scaled(x, root_vector(n, i, j, field), any(rng));
      g0 = multiply(g0, x, field);
    }

  FqMatrix lie(d, FqVector(d, 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (i == j || i + j > d - 1) continue;
      add_scaled(lie, root_vector(n, i, j, field), any(rng));
    }
  const int s = any(rng);
  for (int i = 0; i < n; ++i) {
    const int h = any(rng);
    lie[i][i] = field.add(lie[i][i], h);
    lie[d - 1 - i][d - 1 - i] = field.add(lie[d - 1 - i][d - 1 - i], field.sub(s, h));
  }
  return make_iwahori(n, q, {g0, multiply(g0, lie, field)});
}

SubspaceChain iwahori_act(const IwahoriElement& g, const SubspaceChain& chain) {
  if (g.n != chain.n || g.q != chain.q) throw Error(ErrorKind::InvalidArgument, "group element and chain differ in n or q");
  const int n = chain.n;
  const int d = 2 * n;
  const PrimeField field(chain.q);
  SubspaceChain out{n, chain.q, {}};
  for (int level = 0; level <= d; ++level) {
    FqMatrix images;
    for (const auto& v : chain.spaces[level].basis()) {
      FqVector image(d, 0);
      for (int c = 0; c < d; ++c) {
        if (v[c] == 0) continue;
        const long long index = c + 1 + level - d;
        const long long j = ((index - 1) % d + d) % d + 1;
        const long long m = (j - index) / d;  // index = j - 2n m
        for (std::size_t k = 0; k < g.coefficients.size(); ++k)
          for (int r = 0; r < d; ++r) {
            const int coef = field.mul(g.coefficients[k][r][j - 1], v[c]);
            if (coef == 0) continue;
            const long long target = r + 1 - static_cast<long long>(d) * (m + static_cast<long long>(k));
            if (target > level) throw Error(ErrorKind::InvariantViolation, "element does not preserve V_i");
            if (target <= level - d) continue;
            const auto col = static_cast<std::size_t>(target - (level - d) - 1);
            image[col] = field.add(image[col], coef);
          }
      }
      images.push_back(std::move(image));
    }
    out.spaces.emplace_back(field, d, std::move(images));
  }
  validate_chain(out);
  return out;
}

std::map<int, std::size_t> stratified_count(int n, int q) {
  std::map<int, std::size_t> histogram;
  for (const auto& pt : enumerate_points(n, q)) ++histogram[point_p_rank(pt)];
  return histogram;
}

}  // namespace krstrata
