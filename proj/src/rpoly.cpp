#include "krstrata/rpoly.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "krstrata/alcove.hpp"
#include "krstrata/error.hpp"

namespace krstrata {

struct RPolynomialTable::Memo {
  std::shared_mutex mutex;
  std::map<std::pair<AffinePermutation, AffinePermutation>, IntPolynomial> table;
};

RPolynomialTable::RPolynomialTable(AffineWeylGroup group)
    : group_(std::move(group)), memo_(std::make_shared<Memo>()) {}

IntPolynomial RPolynomialTable::operator()(const AffinePermutation& x, const AffinePermutation& y) const {
  if (x.period() != y.period()) throw Error(ErrorKind::PeriodMismatch, "r_polynomial: periods differ");
  if (!group_.bruhat_leq(x, y)) return {};
  if (x == y) return 1;
  auto key = std::make_pair(x, y);
  {
    std::shared_lock lock(memo_->mutex);
    if (auto it = memo_->table.find(key); it != memo_->table.end()) return it->second;
  }
  const auto& s = group_.simple_reflections()[*group_.left_descent(y)];
  const auto sy = compose(s, y);
  const auto sx = compose(s, x);
  IntPolynomial result;
  if (group_.length(sx) < group_.length(x)) {
    result = (*this)(sx, sy);
  } else {
    result = IntPolynomial::q_minus_one() * (*this)(x, sy) + IntPolynomial::monomial(1) * (*this)(sx, sy);
  }
  std::unique_lock lock(memo_->mutex);
  memo_->table.emplace(std::move(key), result);
  return result;
}

IntPolynomial r_polynomial(const AffineWeylGroup& group, const AffinePermutation& x, const AffinePermutation& y) {
  return RPolynomialTable(group)(x, y);
}

bool is_prime_power(long long q) {
  if (q < 2) return false;
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;
}

TraceValue ss_trace(const RPolynomialTable& table, const AffinePermutation& w, long long q, int m) {
  const auto& group = table.group();
  if (!is_prime_power(q)) throw Error(ErrorKind::InvalidArgument, "q must be a prime power");
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "m must be positive");
  if (!is_permissible_gsp(group, w)) throw Error(ErrorKind::NotPermissible, w.to_string() + " is not in KR(mu)");

  TraceValue out{0, AffinePermutation::translation(w.translation_part()), false};
  out.below_translation = group.bruhat_leq(w, out.translation);
  const auto r = table(w, out.translation);
  const int sign_exponent = group.length(out.translation) + group.length(w);
  BigInt qm = 1;
  for (int k = 0; k < m; ++k) qm *= q;
  out.value = r.evaluate(qm);
  if (sign_exponent % 2) out.value = -out.value;
  return out;
}

namespace {

using HeckeElement = std::map<AffinePermutation, IntPolynomial>;

void accumulate(HeckeElement& h, const AffinePermutation& w, const IntPolynomial& c) {
  auto& slot = h[w];
  slot += c;
  if (slot.is_zero()) h.erase(w);
}

// (T_s - (q - 1)) * h
HeckeElement left_multiply(const AffineWeylGroup& group, const AffinePermutation& s, const HeckeElement& h) {
  HeckeElement out;
  const auto q = IntPolynomial::monomial(1);
  for (const auto& [w, c] : h) {
    const auto sw = compose(s, w);
    if (group.length(sw) > group.length(w)) {
      accumulate(out, sw, c);
      accumulate(out, w, -(IntPolynomial::q_minus_one() * c));
    } else {
      accumulate(out, sw, q * c);
    }
  }
  return out;
}

}  // namespace

bool hecke_verify(const AffineWeylGroup& group, int length_bound) {
  if (length_bound < 0) throw Error(ErrorKind::InvalidArgument, "length bound must be non-negative");
  if (length_bound > 4) throw Error(ErrorKind::SizeLimit, "hecke_verify is limited to length bound 4");
  const RPolynomialTable table(group);
  const auto tau = group.omega_generator();
  const auto elements = group.ball(length_bound, 0);

  for (const auto& [y, ly] : elements) {
    // q^{l(y)} T_{y^{-1}}^{-1} = prod over a reduced word of (T_s - (q - 1)).
    HeckeElement h{{AffinePermutation::identity(group.period()), IntPolynomial(1)}};
    const auto word = group.reduced_word(y);
    if (static_cast<int>(word.size()) != ly) return false;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      h = left_multiply(group, group.simple_reflections()[*it], h);

    for (const auto& [x, lx] : elements) {
      const auto found = h.find(x);
      const IntPolynomial coefficient = found == h.end() ? IntPolynomial() : found->second;
      IntPolynomial expected = table(x, y);
      if ((lx + ly) % 2) expected = -expected;
      if (coefficient != expected) return false;
      // Right multiplication by T_tau relabels x -> x tau in component 1.
      IntPolynomial shifted = table(compose(x, tau), compose(y, tau));
      if ((group.length(compose(x, tau)) + group.length(compose(y, tau))) % 2) shifted = -shifted;
      if (coefficient != shifted) return false;
    }
    for (const auto& [x, c] : h)
      if (group.length(x) > ly) return false;
  }
  return true;
}

}  // namespace krstrata
