#pragma once

// Linear algebra over a small prime field: canonical (reduced row echelon)
// subspace representatives and subspace enumeration.

#include <compare>
#include <cstdint>
#include <vector>

namespace krstrata {

/// Z/q for a prime q in [2, 7].
class PrimeField {
 public:
  /// Throws InvalidArgument unless q is prime, SizeLimit when q > 7.
  explicit PrimeField(int q);

  int order() const { return q_; }
  int reduce(long long a) const { return static_cast<int>(((a % q_) + q_) % q_); }
  int add(int a, int b) const { return (a + b) % q_; }
  int sub(int a, int b) const { return (a - b + q_) % q_; }
  int mul(int a, int b) const { return (a * b) % q_; }
  int neg(int a) const { return (q_ - a) % q_; }
  int inv(int a) const;

 private:
  int q_;
};

using FqVector = std::vector<int>;
using FqMatrix = std::vector<FqVector>;

/// Subspace of F_q^ambient stored as its reduced row echelon basis, which is
/// a canonical key.
class Subspace {
 public:
  Subspace(const PrimeField& field, int ambient, FqMatrix generators);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const FqMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const FqVector& v, const PrimeField& field) const;
  bool contains(const Subspace& other, const PrimeField& field) const;

  /// Pivot columns of the echelon form that pivots on the last nonzero
  /// entry of each row: the set of j with (S cap <e_0..e_j>) larger than
  /// (S cap <e_0..e_{j-1}>).
  std::vector<int> trailing_pivots(const PrimeField& field) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  friend auto operator<=>(const Subspace& a, const Subspace& b) { return a.basis_ <=> b.basis_; }

 private:
  int ambient_;
  FqMatrix basis_;
  std::vector<int> pivots_;
};

/// In-place reduced row echelon form; returns pivot columns and drops zero rows.
std::vector<int> row_reduce(FqMatrix& rows, int columns, const PrimeField& field);

/// Basis of {v : rows * v = 0}.
FqMatrix null_space(const FqMatrix& rows, int columns, const PrimeField& field);

/// Every subspace of the given dimension, one per reduced echelon form.
std::vector<Subspace> all_subspaces(const PrimeField& field, int ambient, int dim);

}  // namespace krstrata
