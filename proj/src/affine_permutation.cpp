#include "krstrata/affine_permutation.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "krstrata/error.hpp"

namespace krstrata {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::DuplicateResidue: return "DuplicateResidue";
    case ErrorKind::PeriodMismatch: return "PeriodMismatch";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::SearchFailed: return "SearchFailed";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ValDetMismatch: return "ValDetMismatch";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotPermissible: return "NotPermissible";
    case ErrorKind::FormulaMismatch: return "FormulaMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NormalFormFailure: return "NormalFormFailure";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

AffinePermutation::AffinePermutation(std::vector<int> window) : window_(std::move(window)) {
  const int d = period();
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "window must be non-empty");
  std::vector<bool> seen(d, false);
  for (int v : window_) {
    auto r = static_cast<int>(v - d * floor_div(v - 1, d)) - 1;
    if (seen[r]) {
      std::ostringstream msg;
      msg << "two window entries congruent to " << r + 1 << " mod " << d;
      throw Error(ErrorKind::DuplicateResidue, msg.str());
    }
    seen[r] = true;
  }
}

AffinePermutation AffinePermutation::identity(int period) {
  if (period < 1) throw Error(ErrorKind::InvalidArgument, "period must be positive");
  std::vector<int> w(period);
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(Unchecked{}, std::move(w));
}

AffinePermutation AffinePermutation::from_parts(std::span<const int> finite,
                                                std::span<const int> translation) {
  if (finite.size() != translation.size())
    throw Error(ErrorKind::PeriodMismatch, "finite and translation parts differ in size");
  const int d = static_cast<int>(finite.size());
  std::vector<int> w(d);
  for (int i = 0; i < d; ++i) {
    if (finite[i] < 1 || finite[i] > d)
      throw Error(ErrorKind::InvalidArgument, "finite part must permute 1..d");
    w[i] = finite[i] + d * translation[i];
  }
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::translation(std::span<const int> lambda) {
  const int d = static_cast<int>(lambda.size());
  std::vector<int> w(d);
  for (int i = 0; i < d; ++i) w[i] = i + 1 + d * lambda[i];
  return AffinePermutation(Unchecked{}, std::move(w));
}

std::int64_t AffinePermutation::operator()(std::int64_t i) const {
  const std::int64_t d = period();
  const std::int64_t k = floor_div(i - 1, d);
  return window_[static_cast<std::size_t>(i - 1 - k * d)] + k * d;
}

AffinePermutation AffinePermutation::inverse() const {
  const int d = period();
  std::vector<int> inv(d);
  for (int i = 1; i <= d; ++i) {
    const int v = window_[i - 1];
    const auto k = static_cast<int>(floor_div(v - 1, d));
    inv[v - k * d - 1] = i - k * d;
  }
  return AffinePermutation(Unchecked{}, std::move(inv));
}

std::vector<int> AffinePermutation::finite_part() const {
  const int d = period();
  std::vector<int> x(d);
  for (int i = 0; i < d; ++i) {
    const int v = window_[i];
    x[i] = v - d * static_cast<int>(floor_div(v - 1, d));
  }
  return x;
}

Coweight AffinePermutation::translation_part() const {
  const int d = period();
  Coweight lambda(d);
  for (int i = 0; i < d; ++i) lambda[i] = static_cast<int>(floor_div(window_[i] - 1, d));
  return lambda;
}

int AffinePermutation::val_det() const {
  const int d = period();
  long long s = 0;
  for (int i = 0; i < d; ++i) s += window_[i] - (i + 1);
  return static_cast<int>(s / d);
}

bool AffinePermutation::is_translation() const {
  const int d = period();
  for (int i = 0; i < d; ++i)
    if ((window_[i] - (i + 1)) % d != 0) return false;
  return true;
}

Coweight AffinePermutation::act(std::span<const int> v) const {
  const int d = period();
  if (static_cast<int>(v.size()) != d) throw Error(ErrorKind::PeriodMismatch, "coweight length differs from period");
  const auto x = finite_part();
  const auto lambda = translation_part();
  Coweight out(d);
  for (int k = 0; k < d; ++k) out[x[k] - 1] = v[k] + lambda[k];
  return out;
}

std::string AffinePermutation::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

AffinePermutation compose(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.period() != b.period()) throw Error(ErrorKind::PeriodMismatch, "compose: periods differ");
  std::vector<int> w(a.period());
  for (int i = 0; i < a.period(); ++i) w[i] = static_cast<int>(a(b.window_[i]));
  return AffinePermutation(AffinePermutation::Unchecked{}, std::move(w));
}

std::ostream& operator<<(std::ostream& os, const AffinePermutation& w) {
  os << '[';
  for (std::size_t i = 0; i < w.window().size(); ++i) {
    if (i) os << ',';
    os << w.window()[i];
  }
  return os << ']';
}

std::size_t AffinePermutationHash::operator()(const AffinePermutation& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (int v : w.window()) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace krstrata
