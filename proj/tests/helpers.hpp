#pragma once

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "krstrata/affine_permutation.hpp"
#include "krstrata/error.hpp"

#define CHECK_THROWS_KIND(expr, expected_kind)                                        \
  do {                                                                                \
    bool thrown_ = false;                                                             \
    try {                                                                             \
      (void)(expr);                                                                   \
    } catch (const krstrata::Error& e_) {                                             \
      thrown_ = true;                                                                 \
      CHECK_MESSAGE(e_.kind() == (expected_kind), "got " << krstrata::to_string(e_.kind())); \
    }                                                                                 \
    CHECK_MESSAGE(thrown_, "no krstrata::Error from " #expr);                         \
  } while (0)

namespace doctest {
template <>
struct StringMaker<krstrata::AffinePermutation> {
  static String convert(const krstrata::AffinePermutation& w) { return w.to_string().c_str(); }
};
}  // namespace doctest

inline krstrata::AffinePermutation W(std::vector<int> window) { return krstrata::AffinePermutation(std::move(window)); }

// Uniform random affine permutation with translation entries in [-spread, spread].
inline krstrata::AffinePermutation random_perm(std::mt19937_64& rng, int d, int spread = 3) {
  std::vector<int> x(d);
  for (int i = 0; i < d; ++i) x[i] = i + 1;
  std::shuffle(x.begin(), x.end(), rng);
  std::uniform_int_distribution<int> t(-spread, spread);
  std::vector<int> lambda(d);
  for (auto& l : lambda) l = t(rng);
  return krstrata::AffinePermutation::from_parts(x, lambda);
}
