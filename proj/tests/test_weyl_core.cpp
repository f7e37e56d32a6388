#include <doctest.h>

#include "helpers.hpp"
#include "krstrata/weyl_group.hpp"
#include "oracles.hpp"

using namespace krstrata;

TEST_SUITE("weyl_core") {

TEST_CASE("construction and residues") {
  CHECK(W({1, 2}) == AffinePermutation::identity(2));
  CHECK(W({3, 2}).translation_part() == Coweight{1, 0});
  CHECK(W({3, 2}).finite_part() == std::vector<int>{1, 2});
  CHECK_THROWS_KIND(W({3, 3}), ErrorKind::DuplicateResidue);
  CHECK_THROWS_KIND(W({0, 3, 5}), ErrorKind::DuplicateResidue);
  CHECK_THROWS_KIND(W({}), ErrorKind::InvalidArgument);
  CHECK(W({3, 2}).to_string() == "[3,2]");
  CHECK(W({-4, 1, 9})(7) == 2);
  CHECK(W({-4, 1, 9})(-3) == 3);
}

TEST_CASE("finite and translation parts") {
  const auto tau = W({2, 3});
  CHECK(tau.finite_part() == std::vector<int>{2, 1});
  CHECK(tau.translation_part() == Coweight{0, 1});
  CHECK(AffinePermutation::identity(4).translation_part() == Coweight{0, 0, 0, 0});
  CHECK(W({3, 2}).is_translation());
  CHECK_FALSE(tau.is_translation());
  CHECK(tau.val_det() == 1);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + trial % 8;
    const auto w = random_perm(rng, d);
    const auto x = w.finite_part();
    const auto lambda = w.translation_part();
    for (int i = 1; i <= d; ++i) CHECK(w(i) == x[i - 1] + d * lambda[i - 1]);
    CHECK(AffinePermutation::from_parts(x, lambda) == w);
    // w = x t_lambda as a product.
    std::vector<int> zero(d, 0);
    CHECK(compose(AffinePermutation::from_parts(x, zero), AffinePermutation::translation(lambda)) == w);
  }
}

TEST_CASE("composition") {
  CHECK(compose(W({3, 2}), W({3, 2})) == W({5, 2}));
  CHECK_THROWS_KIND(compose(W({1, 2}), W({1, 2, 3})), ErrorKind::PeriodMismatch);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = 1 + trial % 8;
    const auto a = random_perm(rng, d);
    const auto b = random_perm(rng, d);
    const auto c = random_perm(rng, d);
    CHECK(compose(a, AffinePermutation::identity(d)) == a);
    CHECK(compose(a, a.inverse()) == AffinePermutation::identity(d));
    CHECK(compose(a.inverse(), a) == AffinePermutation::identity(d));
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    for (int i = -2 * d; i <= 2 * d; ++i) CHECK(compose(a, b)(i) == a(b(i)));
  }
}

TEST_CASE("coweight action") {
  const auto tau = W({2, 3});
  const std::vector<int> zero{0, 0};
  const std::vector<int> a1{1, 0};
  CHECK(tau.act(zero) == Coweight{1, 0});
  CHECK(tau.act(a1) == Coweight{1, 1});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_perm(rng, 4);
    const auto b = random_perm(rng, 4);
    const std::vector<int> v{1, -2, 0, 3};
    const auto bv = b.act(v);
    CHECK(compose(a, b).act(v) == a.act(bv));
  }
}

TEST_CASE("simple reflections and omega") {
  const auto gl2 = AffineWeylGroup::gl(2);
  CHECK(gl2.name() == "GL(2)");
  const auto& s = gl2.simple_reflections();
  REQUIRE(s.size() == 2);
  CHECK(std::find(s.begin(), s.end(), W({2, 1})) != s.end());
  CHECK(std::find(s.begin(), s.end(), W({0, 3})) != s.end());
  CHECK(gl2.omega_generator() == W({2, 3}));
  CHECK(AffineWeylGroup::gsp(1).omega_generator() == W({2, 3}));

  for (int n = 1; n <= 4; ++n) {
    const auto g = AffineWeylGroup::gsp(n);
    CHECK(g.simple_reflections().size() == static_cast<std::size_t>(n + 1));
    CHECK(g.length(g.omega_generator()) == 0);
    CHECK(g.similitude(g.omega_generator()) == 1);
    for (const auto& r : g.simple_reflections()) {
      CHECK(g.length(r) == 1);
      CHECK(compose(r, r) == AffinePermutation::identity(g.period()));
      CHECK(g.contains(r));
    }
  }
  for (int d = 2; d <= 6; ++d) {
    const auto g = AffineWeylGroup::gl(d);
    CHECK(g.simple_reflections().size() == static_cast<std::size_t>(d));
    CHECK(g.length(g.omega_generator()) == 0);
    CHECK(g.component(g.omega_generator()) == 1);
  }
  CHECK_THROWS_KIND(AffineWeylGroup::gl(1), ErrorKind::InvalidArgument);
  CHECK_THROWS_KIND(AffineWeylGroup::gsp(0), ErrorKind::InvalidArgument);
}

TEST_CASE("symplectic constraint") {
  const auto g = AffineWeylGroup::gsp(2);
  CHECK(g.contains(W({1, 2, 7, 8})));
  CHECK(g.similitude(W({1, 2, 7, 8})) == 1);
  CHECK_FALSE(g.contains(W({2, 1, 3, 4})));
  CHECK_THROWS_KIND(g.require(W({2, 1, 3, 4})), ErrorKind::NotInGroup);
  CHECK_THROWS_KIND(g.require(W({2, 1})), ErrorKind::PeriodMismatch);
  CHECK_THROWS_KIND(g.length(W({2, 1, 3, 4})), ErrorKind::NotInGroup);
  // val-det = n c on the group.
  for (const auto& [w, k] : g.ball(4, 3)) CHECK(w.val_det() == 2 * 3);
}

TEST_CASE("length against breadth-first search and closed formulas") {
  CHECK(AffineWeylGroup::gl(2).length(W({3, 2})) == 1);
  CHECK(AffineWeylGroup::gl(3).length(AffinePermutation::identity(3)) == 0);
  for (int d = 2; d <= 4; ++d) {
    const auto g = AffineWeylGroup::gl(d);
    for (int c : {0, 1, -1}) {
      for (const auto& [w, k] : oracle::bfs_lengths(g, 6, c)) {
        CHECK(g.length(w) == k);
        CHECK(oracle::shi_length(w) == k);
        CHECK(inversion_count(w) == k);
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    const auto g = AffineWeylGroup::gsp(n);
    for (int c : {0, 1}) {
      for (const auto& [w, k] : oracle::bfs_lengths(g, 6, c)) {
        CHECK(g.length(w) == k);
        CHECK(alcove_hyperplane_count(g, w) == k);
      }
    }
  }
}

TEST_CASE("length properties on random elements") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 3; ++n) {
    const auto g = AffineWeylGroup::gsp(n);
    const auto tau = g.omega_generator();
    auto sample = g.ball(5, 0);
    for (const auto& [w, k] : sample) {
      CHECK(g.length(w.inverse()) == k);
      CHECK(g.length(compose(w, tau)) == k);
      CHECK(g.length(compose(tau, w)) == k);
      for (const auto& s : g.simple_reflections()) CHECK(std::abs(g.length(compose(s, w)) - k) == 1);
      const auto word = g.reduced_word(w);
      CHECK(static_cast<int>(word.size()) == k);
      auto rebuilt = AffinePermutation::identity(g.period());
      for (auto i : word) rebuilt = compose(rebuilt, g.simple_reflections()[i]);
      CHECK(rebuilt == w);
    }
  }
  const auto g = AffineWeylGroup::gl(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto w = random_perm(rng, 6);
    CHECK(g.length(w) == oracle::shi_length(w));
    CHECK(g.length(w.inverse()) == g.length(w));
  }
}

TEST_CASE("finite Weyl groups") {
  for (int n = 1; n <= 4; ++n) {
    const auto g = AffineWeylGroup::gsp(n);
    std::size_t order = std::size_t{1} << n;
    for (int k = 2; k <= n; ++k) order *= k;
    const auto finite = g.finite_weyl_group();
    CHECK(finite.size() == order);
    for (const auto& x : finite) {
      std::vector<int> zero(2 * n, 0);
      CHECK(g.contains(AffinePermutation::from_parts(x, zero)));
    }
  }
  CHECK(AffineWeylGroup::gl(4).finite_weyl_group().size() == 24);
}

TEST_CASE("Bruhat order") {
  const auto g1 = AffineWeylGroup::gsp(1);
  CHECK(g1.bruhat_leq(W({2, 3}), W({3, 2})));
  CHECK(g1.bruhat_leq(W({2, 3}), W({1, 4})));
  CHECK_FALSE(g1.bruhat_leq(W({3, 2}), W({2, 3})));
  CHECK_FALSE(g1.bruhat_leq(W({1, 2}), W({3, 2})));  // different components
  CHECK_THROWS_KIND(g1.bruhat_leq(W({1, 2}), W({1, 2, 3, 4})), ErrorKind::PeriodMismatch);

  auto check_group = [](const AffineWeylGroup& g, int radius) {
    const auto dist = oracle::bfs_lengths(g, radius, 0);
    std::vector<AffinePermutation> elems;
    for (const auto& [w, k] : dist) elems.push_back(w);
    const auto shifted = compose(elems.front(), g.omega_generator());
    CHECK_FALSE(g.bruhat_leq(elems.front(), shifted));
    for (const auto& x : elems)
      for (const auto& y : elems) {
        const bool leq = g.bruhat_leq(x, y);
        CHECK(leq == oracle::subword_leq(g, dist, x, y));
        if (leq && g.bruhat_leq(y, x)) CHECK(x == y);
      }
    for (const auto& x : elems)
      for (const auto& y : elems) {
        if (!g.bruhat_leq(x, y)) continue;
        for (const auto& z : elems)
          if (g.bruhat_leq(y, z)) CHECK(g.bruhat_leq(x, z));
      }
  };
  check_group(AffineWeylGroup::gl(2), 5);
  check_group(AffineWeylGroup::gl(3), 4);
  check_group(AffineWeylGroup::gsp(2), 5);
}

TEST_CASE("search length") {
  const auto g = AffineWeylGroup::gsp(2);
  for (const auto& [w, k] : g.ball(4, 1)) CHECK(g.search_length(w, 6) == k);
  CHECK_FALSE(g.search_length(W({1, 2, 15, 16}), 3).has_value());
}

}  // TEST_SUITE
