#pragma once

// Kazhdan-Lusztig R-polynomials on extended affine Weyl groups and the
// semisimple trace of Frobenius on nearby cycles of the Siegel local model.

#include <memory>

#include "krstrata/affine_permutation.hpp"
#include "krstrata/polynomial.hpp"
#include "krstrata/weyl_group.hpp"

namespace krstrata {

/// Memoized R_{x,y}. Copies share the memo table, which is safe for
/// concurrent use.
class RPolynomialTable {
 public:
  explicit RPolynomialTable(AffineWeylGroup group);

  const AffineWeylGroup& group() const { return group_; }

  /// R_{x,y}: 0 unless x <= y, R_{x,x} = 1, and for s with sy < y,
  /// R_{x,y} = R_{sx,sy} if sx < x, else (q-1) R_{x,sy} + q R_{sx,sy}.
  IntPolynomial operator()(const AffinePermutation& x, const AffinePermutation& y) const;

 private:
  struct Memo;
  AffineWeylGroup group_;
  std::shared_ptr<Memo> memo_;
};

IntPolynomial r_polynomial(const AffineWeylGroup& group, const AffinePermutation& x, const AffinePermutation& y);

bool is_prime_power(long long q);

struct TraceValue {
  BigInt value;
  /// t_lambda for lambda the translation part of w.
  AffinePermutation translation;
  /// Whether w <= t_lambda; when false the value is 0.
  bool below_translation = false;
};

/// (-1)^{l(t_lambda)} (-1)^{l(w)} R_{w, t_lambda}(q^m), lambda = translation_part(w).
/// Throws NotPermissible for w outside KR(mu), InvalidArgument unless q is a
/// prime power and m >= 1.
TraceValue ss_trace(const RPolynomialTable& table, const AffinePermutation& w, long long q, int m);

/// Checks R against the Iwahori-Hecke algebra: the coefficient of T_x in
/// T_{y^{-1}}^{-1} must be (-1)^{l(x)+l(y)} q^{-l(y)} R_{x,y}(q) for all
/// x, y of length <= length_bound in components 0 and 1.
/// Throws SizeLimit for length_bound > 4.
bool hecke_verify(const AffineWeylGroup& group, int length_bound);

}  // namespace krstrata
