#pragma once

// Extended affine permutations: bijections w of Z with w(i + d) = w(i) + d,
// stored by their window [w(1), ..., w(d)].
//
// Index encoding: the monomial t^m e_j corresponds to the integer j - d*m, so
// the standard lattice V_i is the down-set {k <= i}.
//
// Decomposition: w = x * t_lambda with w(i) = x(i) + d * lambda_i, x(i) in
// [1, d]. On coweights this element acts by v -> x(v + lambda) where
// (x v)_{x(k)} = v_k.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace krstrata {

using Coweight = std::vector<int>;

class AffinePermutation {
 public:
  /// Throws ErrorKind::DuplicateResidue when two window entries agree mod d.
  explicit AffinePermutation(std::vector<int> window);

  static AffinePermutation identity(int period);
  /// x is a permutation of 1..d given as [x(1), ..., x(d)].
  static AffinePermutation from_parts(std::span<const int> finite, std::span<const int> translation);
  static AffinePermutation translation(std::span<const int> lambda);

  int period() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  /// w(i) for any integer i.
  std::int64_t operator()(std::int64_t i) const;

  AffinePermutation inverse() const;

  std::vector<int> finite_part() const;
  Coweight translation_part() const;
  /// Sum of the translation part; the valuation of the determinant.
  int val_det() const;
  bool is_translation() const;

  /// Image of a coweight under v -> x(v + lambda).
  Coweight act(std::span<const int> v) const;

  std::string to_string() const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation& a, const AffinePermutation& b) {
    return a.window_ <=> b.window_;
  }

 private:
  struct Unchecked {};
  AffinePermutation(Unchecked, std::vector<int> window) : window_(std::move(window)) {}

  std::vector<int> window_;

  friend AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b);
};

/// (a o b)(i) = a(b(i)). Throws ErrorKind::PeriodMismatch.
AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b);

std::ostream& operator<<(std::ostream& os, const AffinePermutation& w);

/// Floor division for possibly negative numerators.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct AffinePermutationHash {
  std::size_t operator()(const AffinePermutation& w) const noexcept;
};

}  // namespace krstrata
