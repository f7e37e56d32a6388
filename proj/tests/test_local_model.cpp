#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "krstrata/alcove.hpp"
#include "krstrata/local_model.hpp"
#include "krstrata/prank.hpp"
#include "oracles.hpp"

using namespace krstrata;

namespace {

std::size_t gaussian_binomial(int m, int k, int q) {
  // number of k-dimensional subspaces of F_q^m
  long double num = 1;
  long double den = 1;
  for (int i = 0; i < k; ++i) {
    num *= std::pow(static_cast<long double>(q), m - i) - 1;
    den *= std::pow(static_cast<long double>(q), i + 1) - 1;
  }
  return static_cast<std::size_t>(std::llround(num / den));
}

std::size_t ipow(int q, int k) {
  std::size_t p = 1;
  for (int i = 0; i < k; ++i) p *= static_cast<std::size_t>(q);
  return p;
}

}  // namespace

TEST_SUITE("finite_field") {

TEST_CASE("prime fields") {
  const PrimeField f(5);
  CHECK(f.mul(f.inv(3), 3) == 1);
  CHECK(f.reduce(-7) == 3);
  CHECK(f.neg(0) == 0);
  for (int q : {2, 3, 5, 7}) {
    const PrimeField g(q);
    for (int a = 1; a < q; ++a) CHECK(g.mul(a, g.inv(a)) == 1);
  }
  CHECK_THROWS_KIND(PrimeField(4), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(PrimeField(1), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(PrimeField(11), ErrorKind::SizeLimit);
  CHECK_THROWS_KIND(f.inv(0), ErrorKind::InvalidArgument);
}

TEST_CASE("canonical subspaces") {
  const PrimeField f(3);
  const Subspace a(f, 3, {{1, 1, 0}, {0, 1, 2}});
  const Subspace b(f, 3, {{1, 2, 2}, {2, 0, 2}, {1, 1, 0}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.contains(FqVector{1, 2, 2}, f));
  CHECK_FALSE(a.contains(FqVector{0, 0, 1}, f));
  CHECK(a.contains(Subspace(f, 3, {{2, 2, 0}}), f));
  CHECK(Subspace(f, 3, {}).dim() == 0);
  CHECK_THROWS_KIND(Subspace(f, 3, {{1, 0}}), ErrorKind::DimensionMismatch);
  // trailing pivots: span{e_0 + e_2, e_1} jumps at 1 and 2.
  CHECK(Subspace(f, 3, {{1, 0, 1}, {0, 1, 0}}).trailing_pivots(f) == std::vector<int>{1, 2});
  const auto kernel = null_space({{1, 1, 1}}, 3, f);
  CHECK(kernel.size() == 2);
}

TEST_CASE("Grassmannian sizes") {
  for (int q : {2, 3, 5}) {
    const PrimeField f(q);
    for (int m = 1; m <= 4; ++m)
      for (int k = 0; k <= m; ++k) {
        if (ipow(q, m) > 700) continue;
        const auto all = all_subspaces(f, m, k);
        CHECK(all.size() == gaussian_binomial(m, k, q));
        CHECK(std::set<Subspace>(all.begin(), all.end()).size() == all.size());
      }
  }
}

}  // TEST_SUITE

TEST_SUITE("local_model") {

TEST_CASE("point counts") {
  CHECK(count_points(1, 2) == 5);
  CHECK(count_points(1, 3) == 7);
  CHECK(count_points(1, 5) == 11);
  CHECK(count_points(1, 7) == 15);
  for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 5}, {2, 2}, {2, 3}}) {
    const auto pts = enumerate_points(n, q);
    CHECK(pts.size() == oracle::VectorSpaceOracle(n, q).count_points());
    CHECK(BigInt(pts.size()) == strata_report(n).total_polynomial.evaluate(q));
    CHECK(std::set<SubspaceChain>(pts.begin(), pts.end()).size() == pts.size());
  }
  CHECK_THROWS_KIND(enumerate_points(2, 5), ErrorKind::SizeLimit);
  CHECK_THROWS_KIND(enumerate_points(3, 2), ErrorKind::SizeLimit);
  CHECK_THROWS_KIND(enumerate_points(1, 4), ErrorKind::InvalidArgument);
}

TEST_CASE("stratified counts") {
  CHECK(stratified_count(1, 2) == std::map<int, std::size_t>{{0, 1}, {1, 4}});
  CHECK(stratified_count(1, 3) == std::map<int, std::size_t>{{0, 1}, {1, 6}});
  for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 5}, {2, 2}, {2, 3}}) {
    const auto counts = stratified_count(n, q);
    const auto report = strata_report(n);
    CHECK(counts.size() == report.count_polynomials.size());
    for (const auto& [rank, p] : report.count_polynomials) CHECK(BigInt(counts.at(rank)) == p.evaluate(q));
  }
}

TEST_CASE("chain invariants and duality of the two conditions") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}}) {
    for (const auto& pt : enumerate_points(n, q)) {
      validate_chain(pt);
      for (int k = 1; k <= 2 * n; ++k) {
        CHECK(etale_at(pt, k) == multiplicative_at(pt, 2 * n + 1 - k));
        CHECK_FALSE((etale_at(pt, k) && multiplicative_at(pt, k)));
      }
      CHECK(point_p_rank(pt) <= n);
    }
  }
  auto pt = enumerate_points(1, 2).front();
  CHECK_THROWS_KIND(etale_at(pt, 0), ErrorKind::IndexOutOfRange);
  CHECK_THROWS_KIND(multiplicative_at(pt, 3), ErrorKind::IndexOutOfRange);
  for (const auto& line : all_subspaces(PrimeField(2), 2, 1))
    if (line != pt.spaces[0]) pt.spaces[2] = line;
  CHECK_THROWS_KIND(validate_chain(pt), ErrorKind::InvariantViolation);
}

TEST_CASE("orbit representatives") {
  const auto t = orbit_rep(W({3, 2}), 2);
  CHECK(t.spaces[0] == Subspace(PrimeField(2), 2, {{0, 1}}));
  CHECK(point_p_rank(t) == 1);
  CHECK(point_p_rank(orbit_rep(W({2, 3}), 2)) == 0);
  CHECK_THROWS_KIND(orbit_rep(W({1, 2}), 2), ErrorKind::NotPermissible);
  CHECK_THROWS_KIND(orbit_rep(W({3, 2}), 4), ErrorKind::InvalidArgument);

  for (int n = 1; n <= 2; ++n) {
    const auto g = AffineWeylGroup::gsp(n);
    for (int q : {2, 3}) {
      for (const auto& w : enumerate_perm_gsp(n).elements) {
        const auto pt = orbit_rep(w, q);
        validate_chain(pt);
        CHECK(point_p_rank(pt) == p_rank(g, w));
        CHECK(cell_of_point(pt) == w);
      }
      for (const auto& t : orbit_translations(n)) CHECK(point_p_rank(orbit_rep(t, q)) == n);
    }
  }
}

TEST_CASE("cells are affine spaces") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    std::map<AffinePermutation, std::size_t> sizes;
    std::map<AffinePermutation, std::set<int>> ranks;
    for (const auto& pt : enumerate_points(n, q)) {
      const auto w = cell_of_point(pt);
      ++sizes[w];
      ranks[w].insert(point_p_rank(pt));
    }
    const auto report = strata_report(n);
    CHECK(sizes.size() == report.records.size());
    for (const auto& r : report.records) {
      CHECK(sizes[r.element] == ipow(q, r.length));
      CHECK(ranks[r.element] == std::set<int>{r.p_rank});
    }
  }
  std::vector<std::size_t> n1;
  std::map<AffinePermutation, std::size_t> sizes;
  for (const auto& pt : enumerate_points(1, 2)) ++sizes[cell_of_point(pt)];
  CHECK(sizes == std::map<AffinePermutation, std::size_t>{{W({1, 4}), 2}, {W({2, 3}), 1}, {W({3, 2}), 2}});
}

TEST_CASE("Iwahori elements") {
  const auto e = identity_iwahori(2, 3);
  for (const auto& pt : enumerate_points(2, 3)) CHECK(iwahori_act(e, pt) == pt);

  const auto g1 = random_iwahori(2, 3, 42);
  const auto g2 = random_iwahori(2, 3, 42);
  CHECK(g1.coefficients == g2.coefficients);
  CHECK(random_iwahori(2, 3, 43).coefficients != g1.coefficients);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto g = random_iwahori(2, 2, seed);
    CHECK_NOTHROW(make_iwahori(2, 2, g.coefficients));
  }

  FqMatrix lower = {{1, 0}, {1, 1}};
  CHECK_THROWS_KIND(make_iwahori(1, 3, {lower}), ErrorKind::InvariantViolation);
  FqMatrix singular = {{0, 0}, {0, 1}};
  CHECK_THROWS_KIND(make_iwahori(1, 3, {singular}), ErrorKind::InvariantViolation);
  FqMatrix not_symplectic = {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  CHECK_THROWS_KIND(make_iwahori(2, 3, {not_symplectic}), ErrorKind::InvariantViolation);
  FqMatrix id4 = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  FqMatrix half_root = {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  FqMatrix root = {{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 0, 0}};
  CHECK_THROWS_KIND(make_iwahori(2, 3, {id4, half_root}), ErrorKind::InvariantViolation);
  CHECK_NOTHROW(make_iwahori(2, 3, {id4, root}));
  CHECK_NOTHROW(make_iwahori(1, 3, {{{1, 0}, {0, 1}}, {{1, 2}, {1, 0}}}));  // gsp(2) = gl(2)
}

TEST_CASE("action depends only on g mod t^2") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}}) {
    const int d = 2 * n;
    FqMatrix id(d, FqVector(d, 0));
    FqMatrix zero(d, FqVector(d, 0));
    for (int i = 0; i < d; ++i) id[i][i] = 1;
    for (int i = 0; i < d; ++i) {
      FqMatrix y = zero;
      y[i][d - 1 - i] = 1;  // long root vector, an element of the Lie algebra
      const auto g = make_iwahori(n, q, {id, zero, y});
      for (const auto& pt : enumerate_points(n, q)) CHECK(iwahori_act(g, pt) == pt);
    }
  }
}

TEST_CASE("p-rank and cell are constant on Iwahori orbits") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    const auto g = AffineWeylGroup::gsp(n);
    std::uint64_t seed = 1000;
    for (const auto& w : enumerate_perm_gsp(n).elements) {
      const auto pt = orbit_rep(w, q);
      const int rank = p_rank(g, w);
      for (int k = 0; k < 100; ++k) {
        const auto moved = iwahori_act(random_iwahori(n, q, seed++), pt);
        CHECK(point_p_rank(moved) == rank);
        CHECK(cell_of_point(moved) == w);
      }
    }
  }
}

TEST_CASE("orbits exhaust cells") {
  // For n = 1, q = 2 every point of a cell is reached from the representative.
  for (const auto& w : enumerate_perm_gsp(1).elements) {
    std::set<SubspaceChain> orbit;
    const auto pt = orbit_rep(w, 2);
    for (std::uint64_t seed = 0; seed < 200; ++seed) orbit.insert(iwahori_act(random_iwahori(1, 2, seed), pt));
    CHECK(orbit.size() == ipow(2, AffineWeylGroup::gsp(1).length(w)));
  }
}

}  // TEST_SUITE
