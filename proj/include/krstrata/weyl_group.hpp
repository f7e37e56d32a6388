#pragma once

// Extended affine Weyl groups of GL(d) and GSp(2n) realized as groups of
// affine permutations.
//
// GSp(2n) sits inside the affine permutations of period 2n as the elements
// with w(i) + w(2n+1-i) = 2n+1 + 2n*c for one integer c (the similitude).
// Its Coxeter generators are s_0, s_i s_{2n-i} (0 < i < n) and s_n, written
// in terms of the GL(2n) generators.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krstrata/affine_permutation.hpp"

namespace krstrata {

enum class GroupType { GL, GSp };

class AffineWeylGroup {
 public:
  static AffineWeylGroup gl(int d);
  static AffineWeylGroup gsp(int n);

  GroupType type() const { return type_; }
  /// d for GL(d), n for GSp(2n).
  int rank() const { return rank_; }
  int period() const { return type_ == GroupType::GL ? rank_ : 2 * rank_; }
  std::string name() const;

  bool contains(const AffinePermutation& w) const;
  /// Throws PeriodMismatch or NotInGroup.
  void require(const AffinePermutation& w) const;
  /// The integer c of the symplectic constraint; GSp only.
  int similitude(const AffinePermutation& w) const;
  /// Label of the W_a-coset: val-det for GL, similitude for GSp.
  int component(const AffinePermutation& w) const;

  const std::vector<AffinePermutation>& simple_reflections() const;
  /// Unique length-0 element in component +1, found by exhaustive search.
  const AffinePermutation& omega_generator() const;
  AffinePermutation omega_power(int c) const;

  /// Coxeter length of the W_a-part. GL: affine inversion count. GSp: number
  /// of type C affine hyperplanes separating the base alcove from its image.
  int length(const AffinePermutation& w) const;

  /// Index of the first simple reflection s with l(s w) < l(w).
  std::optional<std::size_t> left_descent(const AffinePermutation& w) const;
  /// Indices (i_1, ..., i_k) with w = s_{i_1} ... s_{i_k} * omega_power(c).
  std::vector<std::size_t> reduced_word(const AffinePermutation& w) const;

  /// Bruhat order, extended to distinct components as "incomparable".
  bool bruhat_leq(const AffinePermutation& x, const AffinePermutation& y) const;

  /// The finite Weyl group as permutations of 1..period(): S_d, or the signed
  /// permutations commuting with i -> 2n+1-i.
  std::vector<std::vector<int>> finite_weyl_group() const;

  /// All elements of the given component with length <= radius, with their
  /// breadth-first distance from omega_power(component).
  std::vector<std::pair<AffinePermutation, int>> ball(int radius, int component = 0) const;

  /// Word length found by breadth-first search over left multiplication by
  /// simple reflections; nullopt when it exceeds max_length.
  std::optional<int> search_length(const AffinePermutation& w, int max_length) const;

 private:
  AffineWeylGroup(GroupType type, int rank);

  struct State;
  GroupType type_;
  int rank_;
  std::shared_ptr<State> state_;
};

/// #{(i, j) : 1 <= i <= d, i < j, w(i) > w(j)}.
long long inversion_count(const AffinePermutation& w);

/// Number of affine root hyperplanes of the group separating the base alcove
/// (barycentre of a_0, ..., a_{d-1}) from its image.
long long alcove_hyperplane_count(const AffineWeylGroup& group, const AffinePermutation& w);

}  // namespace krstrata
