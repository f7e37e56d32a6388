#include "krstrata/weyl_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "krstrata/error.hpp"

namespace krstrata {

namespace {

struct PairHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e37)) * 1099511628211ULL;
    return h;
  }
};

std::vector<int> pair_key(const AffinePermutation& x, const AffinePermutation& y) {
  std::vector<int> k(x.window());
  k.insert(k.end(), y.window().begin(), y.window().end());
  return k;
}

AffinePermutation gl_reflection(int d, int i) {
  std::vector<int> w(d);
  std::iota(w.begin(), w.end(), 1);
  if (i == 0) {
    w[0] = 0;
    w[d - 1] = d + 1;
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return AffinePermutation(std::move(w));
}

}  // namespace

struct AffineWeylGroup::State {
  std::vector<AffinePermutation> generators;
  std::optional<AffinePermutation> omega;

  std::shared_mutex mutex;
  std::unordered_map<std::vector<int>, bool, PairHash> bruhat_memo;
};

AffineWeylGroup::AffineWeylGroup(GroupType type, int rank)
    : type_(type), rank_(rank), state_(std::make_shared<State>()) {
  const int d = period();
  if (type_ == GroupType::GL) {
    state_->generators.push_back(gl_reflection(d, 0));
    for (int i = 1; i < d; ++i) state_->generators.push_back(gl_reflection(d, i));
  } else {
    const int n = rank_;
    state_->generators.push_back(gl_reflection(d, 0));
    for (int i = 1; i < n; ++i)
      state_->generators.push_back(compose(gl_reflection(d, i), gl_reflection(d, d - i)));
    state_->generators.push_back(gl_reflection(d, n));
  }

  // Length-0 element of component 1: search x in W, lambda in the 0/1 box.
  std::vector<AffinePermutation> found;
  const auto finite = finite_weyl_group();
  std::vector<std::vector<int>> box;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<int> lambda(d);
    int ones = 0;
    for (int i = 0; i < d; ++i) ones += lambda[i] = (mask >> (d - 1 - i)) & 1u;
    if (type_ == GroupType::GL && ones != 1) continue;
    box.push_back(std::move(lambda));
  }
  for (const auto& x : finite) {
    for (const auto& lambda : box) {
      const auto w = AffinePermutation::from_parts(x, lambda);
      if (!contains(w) || component(w) != 1) continue;
      if (length(w) == 0) found.push_back(w);
    }
  }
  if (found.size() != 1) {
    std::ostringstream msg;
    msg << "expected one length-0 element in component 1 of " << name() << ", found " << found.size();
    throw Error(ErrorKind::SearchFailed, msg.str());
  }
  state_->omega = found.front();
}

AffineWeylGroup AffineWeylGroup::gl(int d) {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "GL(d) requires d >= 2");
  return AffineWeylGroup(GroupType::GL, d);
}

AffineWeylGroup AffineWeylGroup::gsp(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "GSp(2n) requires n >= 1");
  return AffineWeylGroup(GroupType::GSp, n);
}

std::string AffineWeylGroup::name() const {
  std::ostringstream os;
  os << (type_ == GroupType::GL ? "GL(" : "GSp(") << period() << ')';
  return os.str();
}

bool AffineWeylGroup::contains(const AffinePermutation& w) const {
  if (w.period() != period()) return false;
  if (type_ == GroupType::GL) return true;
  const int d = period();
  const auto& win = w.window();
  const int s = win[0] + win[d - 1] - (d + 1);
  if (s % d != 0) return false;
  for (int i = 0; i < d; ++i)
    if (win[i] + win[d - 1 - i] - (d + 1) != s) return false;
  return true;
}

void AffineWeylGroup::require(const AffinePermutation& w) const {
  if (w.period() != period()) throw Error(ErrorKind::PeriodMismatch, w.to_string() + " is not in " + name());
  if (!contains(w)) throw Error(ErrorKind::NotInGroup, w.to_string() + " is not in " + name());
}

int AffineWeylGroup::similitude(const AffinePermutation& w) const {
  if (type_ != GroupType::GSp) throw Error(ErrorKind::InvalidArgument, "similitude is defined for GSp only");
  require(w);
  const int d = period();
  return (w.window()[0] + w.window()[d - 1] - (d + 1)) / d;
}

int AffineWeylGroup::component(const AffinePermutation& w) const {
  return type_ == GroupType::GL ? (require(w), w.val_det()) : similitude(w);
}

const std::vector<AffinePermutation>& AffineWeylGroup::simple_reflections() const {
  return state_->generators;
}

const AffinePermutation& AffineWeylGroup::omega_generator() const { return *state_->omega; }

AffinePermutation AffineWeylGroup::omega_power(int c) const {
  auto result = AffinePermutation::identity(period());
  const auto step = c >= 0 ? omega_generator() : omega_generator().inverse();
  for (int k = 0; k < std::abs(c); ++k) result = compose(result, step);
  return result;
}

long long inversion_count(const AffinePermutation& w) {
  const long long d = w.period();
  const auto& win = w.window();
  long long count = 0;
  for (long long i = 1; i <= d; ++i) {
    for (long long j0 = 1; j0 <= d; ++j0) {
      // j = j0 + k d with j > i and w(j0) + k d < w(i)
      const long long lo = floor_div(i - j0, d) + 1;
      const long long hi = -floor_div(-(win[i - 1] - win[j0 - 1]), d) - 1;
      if (hi >= lo) count += hi - lo + 1;
    }
  }
  return count;
}

long long alcove_hyperplane_count(const AffineWeylGroup& group, const AffinePermutation& w) {
  const int d = group.period();
  // d times the image of the barycentre p_j = (d - j) / d.
  const auto x = w.finite_part();
  const auto lambda = w.translation_part();
  std::vector<long long> image(d);
  for (int k = 0; k < d; ++k) image[x[k] - 1] = (d - (k + 1)) + static_cast<long long>(d) * lambda[k];
  auto crossings = [&](int i, int j) {
    const long long f = floor_div(image[i] - image[j], d);
    return f < 0 ? -f : f;
  };
  long long total = 0;
  if (group.type() == GroupType::GL) {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) total += crossings(i, j);
  } else {
    const int n = group.rank();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        total += crossings(i, j);          // e_i - e_j
        total += crossings(i, d - 1 - j);  // e_i + e_j
      }
      total += crossings(i, d - 1 - i);    // 2 e_i
    }
  }
  return total;
}

int AffineWeylGroup::length(const AffinePermutation& w) const {
  require(w);
  if (type_ == GroupType::GL) return static_cast<int>(inversion_count(w));
  return static_cast<int>(alcove_hyperplane_count(*this, w));
}

std::optional<std::size_t> AffineWeylGroup::left_descent(const AffinePermutation& w) const {
  const int l = length(w);
  const auto& gens = simple_reflections();
  for (std::size_t s = 0; s < gens.size(); ++s)
    if (length(compose(gens[s], w)) < l) return s;
  return std::nullopt;
}

std::vector<std::size_t> AffineWeylGroup::reduced_word(const AffinePermutation& w) const {
  std::vector<std::size_t> word;
  auto current = w;
  while (auto s = left_descent(current)) {
    word.push_back(*s);
    current = compose(simple_reflections()[*s], current);
  }
  return word;
}

bool AffineWeylGroup::bruhat_leq(const AffinePermutation& x, const AffinePermutation& y) const {
  if (x.period() != y.period()) throw Error(ErrorKind::PeriodMismatch, "bruhat_leq: periods differ");
  if (component(x) != component(y)) return false;
  const int lx = length(x);
  const int ly = length(y);
  if (lx > ly) return false;
  if (lx == ly) return x == y;
  if (lx == 0) return true;

  const auto key = pair_key(x, y);
  {
    std::shared_lock lock(state_->mutex);
    if (auto it = state_->bruhat_memo.find(key); it != state_->bruhat_memo.end()) return it->second;
  }
  // Lifting: for s with sy < y, x <= y iff sx <= sy (sx < x) or x <= sy (sx > x).
  const auto& s = simple_reflections()[*left_descent(y)];
  const auto sy = compose(s, y);
  const auto sx = compose(s, x);
  const bool result = length(sx) < lx ? bruhat_leq(sx, sy) : bruhat_leq(x, sy);
  {
    std::unique_lock lock(state_->mutex);
    state_->bruhat_memo.emplace(key, result);
  }
  return result;
}

std::vector<std::vector<int>> AffineWeylGroup::finite_weyl_group() const {
  std::vector<std::vector<int>> out;
  if (type_ == GroupType::GL) {
    std::vector<int> p(rank_);
    std::iota(p.begin(), p.end(), 1);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }
  const int n = rank_;
  const int d = 2 * n;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    for (unsigned signs = 0; signs < (1u << n); ++signs) {
      std::vector<int> x(d);
      for (int i = 0; i < n; ++i) {
        x[i] = (signs >> i) & 1u ? d + 1 - p[i] : p[i];
        x[d - 1 - i] = d + 1 - x[i];
      }
      out.push_back(std::move(x));
    }
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<AffinePermutation, int>> AffineWeylGroup::ball(int radius, int component) const {
  std::vector<std::pair<AffinePermutation, int>> out;
  std::unordered_set<AffinePermutation, AffinePermutationHash> seen;
  std::deque<std::pair<AffinePermutation, int>> queue;
  const auto start = omega_power(component);
  seen.insert(start);
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    auto [w, dist] = queue.front();
    queue.pop_front();
    out.emplace_back(w, dist);
    if (dist == radius) continue;
    for (const auto& s : simple_reflections()) {
      auto next = compose(s, w);
      if (seen.insert(next).second) queue.emplace_back(std::move(next), dist + 1);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  return out;
}

std::optional<int> AffineWeylGroup::search_length(const AffinePermutation& w, int max_length) const {
  require(w);
  const auto target = omega_power(component(w));
  std::unordered_set<AffinePermutation, AffinePermutationHash> seen{w};
  std::vector<AffinePermutation> frontier{w};
  for (int dist = 0; dist <= max_length; ++dist) {
    for (const auto& v : frontier)
      if (v == target) return dist;
    std::vector<AffinePermutation> next;
    for (const auto& v : frontier)
      for (const auto& s : simple_reflections()) {
        auto u = compose(s, v);
        if (seen.insert(u).second) next.push_back(std::move(u));
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace krstrata
