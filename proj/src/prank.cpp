#include "krstrata/prank.hpp"

#include <algorithm>
#include <sstream>

#include "krstrata/alcove.hpp"
#include "krstrata/error.hpp"
#include "krstrata/parallel.hpp"

namespace krstrata {

int diagonal_t_count(const AffinePermutation& w) {
  const int d = w.period();
  int count = 0;
  for (int i = 1; i <= d; ++i) count += w.window()[i - 1] == i + d;
  return count;
}

int finite_fixed_points(const AffinePermutation& w) {
  const auto x = w.finite_part();
  int count = 0;
  for (int i = 1; i <= w.period(); ++i) count += x[i - 1] == i;
  return count;
}

int p_rank(const AffineWeylGroup& group, const AffinePermutation& w) {
  if (!is_permissible_gsp(group, w)) throw Error(ErrorKind::NotPermissible, w.to_string() + " is not in KR(mu)");
  const int d = w.period();
  const auto x = w.finite_part();
  for (int i = 1; i <= d; ++i) {
    if (x[i - 1] != i) continue;
    const int offset = w.window()[i - 1] - i;
    if (offset != 0 && offset != d)
      throw Error(ErrorKind::FormulaMismatch, "fixed residue with offset outside {0, 2n} in " + w.to_string());
  }
  const int diagonal = diagonal_t_count(w);
  const int fixed = finite_fixed_points(w);
  if (2 * diagonal != fixed) {
    std::ostringstream msg;
    msg << w << ": diagonal t-count " << diagonal << " but " << fixed << " fixed points";
    throw Error(ErrorKind::FormulaMismatch, msg.str());
  }
  return diagonal;
}

void recompute_aggregates(StrataReport& report) {
  report.count_polynomials.clear();
  report.total_polynomial = IntPolynomial();
  for (const auto& r : report.records) {
    const auto cell = IntPolynomial::monomial(r.length);
    report.count_polynomials[r.p_rank] += cell;
    report.total_polynomial += cell;
  }
}

StrataReport strata_report(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (n > 4) throw Error(ErrorKind::SizeLimit, "strata reports are limited to n <= 4");
  const auto group = AffineWeylGroup::gsp(n);
  const auto kr = enumerate_perm_gsp(n);

  StrataReport report;
  report.n = n;
  report.records.resize(kr.elements.size(), StratumRecord{AffinePermutation::identity(2 * n), 0, 0, false, {}});
  parallel_for(kr.elements.size(), [&](std::size_t k) {
    const auto& w = kr.elements[k];
    report.records[k] = StratumRecord{w, group.length(w), p_rank(group, w), w.is_translation(), w.translation_part()};
  });

  std::vector<std::vector<std::size_t>> covers(report.records.size());
  parallel_for(report.records.size(), [&](std::size_t i) {
    for (std::size_t j = 0; j < report.records.size(); ++j) {
      if (report.records[j].length != report.records[i].length + 1) continue;
      if (group.bruhat_leq(report.records[i].element, report.records[j].element)) covers[i].push_back(j);
    }
  });
  for (std::size_t i = 0; i < covers.size(); ++i)
    for (std::size_t j : covers[i]) report.hasse_edges.emplace_back(i, j);

  recompute_aggregates(report);
  return report;
}

std::vector<AffinePermutation> maximal_elements(const StrataReport& report) {
  std::vector<AffinePermutation> out;
  if (report.records.empty()) return out;
  const auto group = AffineWeylGroup::gsp(report.n);
  for (const auto& a : report.records) {
    const bool dominated = std::any_of(report.records.begin(), report.records.end(), [&](const auto& b) {
      return b.length > a.length && group.bruhat_leq(a.element, b.element);
    });
    if (!dominated) out.push_back(a.element);
  }
  return out;
}

std::vector<StratumRecord> ordinary_strata(const StrataReport& report) {
  std::vector<StratumRecord> out;
  for (const auto& r : report.records) {
    if ((r.p_rank == report.n) != r.is_translation)
      throw Error(ErrorKind::FormulaMismatch, "ordinary stratum " + r.element.to_string() + " vs translation flag");
    if (r.p_rank == report.n) out.push_back(r);
  }
  return out;
}

bool density_check(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (n > 3) throw Error(ErrorKind::SizeLimit, "density check is limited to n <= 3");
  const auto group = AffineWeylGroup::gsp(n);
  const auto translations = orbit_translations(n);
  const auto kr = enumerate_perm_gsp(n);
  return std::all_of(kr.elements.begin(), kr.elements.end(), [&](const auto& w) {
    return std::any_of(translations.begin(), translations.end(),
                       [&](const auto& t) { return group.bruhat_leq(w, t); });
  });
}

namespace {
std::string node_id(const AffinePermutation& w) {
  std::string s;
  for (std::size_t i = 0; i < w.window().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.window()[i]);
  }
  return s;
}
}  // namespace

std::string hasse_dot(const StrataReport& report) {
  std::ostringstream os;
  os << "digraph KR {\n";
  if (!report.records.empty()) os << "  rankdir=BT;\n  node [shape=box];\n";
  std::vector<std::size_t> order(report.records.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](auto a, auto b) { return report.records[a].element < report.records[b].element; });
  for (auto i : order) {
    const auto& r = report.records[i];
    os << "  \"" << node_id(r.element) << "\" [label=\"" << r.element << " | " << r.length << " | " << r.p_rank
       << "\"];\n";
  }
  auto edges = report.hasse_edges;
  std::sort(edges.begin(), edges.end(), [&](const auto& a, const auto& b) {
    const auto& ra = report.records;
    if (ra[a.first].element != ra[b.first].element) return ra[a.first].element < ra[b.first].element;
    return ra[a.second].element < ra[b.second].element;
  });
  for (const auto& [lo, hi] : edges)
    os << "  \"" << node_id(report.records[lo].element) << "\" -> \"" << node_id(report.records[hi].element)
       << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace krstrata
