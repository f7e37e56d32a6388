#include "krstrata/finite_field.hpp"

#include <algorithm>
#include <functional>

#include "krstrata/error.hpp"

namespace krstrata {

PrimeField::PrimeField(int q) : q_(q) {
  bool prime = q >= 2;
  for (int p = 2; p * p <= q && prime; ++p) prime = q % p != 0;
  if (!prime) throw Error(ErrorKind::InvalidArgument, "field order must be prime");
  if (q > 7) throw Error(ErrorKind::SizeLimit, "field order is limited to q <= 7");
}

int PrimeField::inv(int a) const {
  if (a % q_ == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  int r = 1;
  for (int k = 0; k < q_ - 2; ++k) r = mul(r, a);
  return r;
}

std::vector<int> row_reduce(FqMatrix& rows, int columns, const PrimeField& field) {
  std::vector<int> pivots;
  std::size_t rank = 0;
  for (int c = 0; c < columns && rank < rows.size(); ++c) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                           [c](const FqVector& r) { return r[c] != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
    auto& pivot_row = rows[rank];
    const int scale = field.inv(pivot_row[c]);
    for (auto& x : pivot_row) x = field.mul(x, scale);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const int f = rows[r][c];
      for (int k = 0; k < columns; ++k) rows[r][k] = field.sub(rows[r][k], field.mul(f, pivot_row[k]));
    }
    pivots.push_back(c);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

FqMatrix null_space(const FqMatrix& rows, int columns, const PrimeField& field) {
  FqMatrix reduced = rows;
  const auto pivots = row_reduce(reduced, columns, field);
  std::vector<bool> is_pivot(columns, false);
  for (int p : pivots) is_pivot[p] = true;
  FqMatrix kernel;
  for (int free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    FqVector v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(reduced[r][free]);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

Subspace::Subspace(const PrimeField& field, int ambient, FqMatrix generators)
    : ambient_(ambient), basis_(std::move(generators)) {
  for (auto& row : basis_) {
    if (static_cast<int>(row.size()) != ambient_) throw Error(ErrorKind::DimensionMismatch, "generator length");
    for (auto& x : row) x = field.reduce(x);
  }
  pivots_ = row_reduce(basis_, ambient_, field);
}

bool Subspace::contains(const FqVector& v, const PrimeField& field) const {
  FqVector r(v);
  for (auto& x : r) x = field.reduce(x);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const int f = r[pivots_[k]];
    if (f == 0) continue;
    for (int c = 0; c < ambient_; ++c) r[c] = field.sub(r[c], field.mul(f, basis_[k][c]));
  }
  return std::all_of(r.begin(), r.end(), [](int x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other, const PrimeField& field) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const FqVector& v) { return contains(v, field); });
}

std::vector<int> Subspace::trailing_pivots(const PrimeField& field) const {
  FqMatrix reversed = basis_;
  for (auto& row : reversed) std::reverse(row.begin(), row.end());
  auto pivots = row_reduce(reversed, ambient_, field);
  for (auto& p : pivots) p = ambient_ - 1 - p;
  std::sort(pivots.begin(), pivots.end());
  return pivots;
}

std::vector<Subspace> all_subspaces(const PrimeField& field, int ambient, int dim) {
  std::vector<Subspace> out;
  if (dim < 0 || dim > ambient) return out;
  const int q = field.order();
  std::vector<int> pivots(dim);
  std::function<void(int, int)> choose = [&](int k, int start) {
    if (k == dim) {
      // Free slots: columns right of a row's pivot that are not pivots.
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < dim; ++r)
        for (int c = pivots[r] + 1; c < ambient; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      std::vector<int> digits(free.size(), 0);
      while (true) {
        FqMatrix rows(dim, FqVector(ambient, 0));
        for (int r = 0; r < dim; ++r) rows[r][pivots[r]] = 1;
        for (std::size_t f = 0; f < free.size(); ++f) rows[free[f].first][free[f].second] = digits[f];
        out.emplace_back(field, ambient, std::move(rows));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == digits.size()) break;
      }
      return;
    }
    for (int c = start; c <= ambient - (dim - k); ++c) {
      pivots[k] = c;
      choose(k + 1, c + 1);
    }
  };
  choose(0, 0);
  return out;
}

}  // namespace krstrata
