#include "krstrata/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "krstrata/alcove.hpp"
#include "krstrata/error.hpp"
#include "krstrata/local_model.hpp"
#include "krstrata/prank.hpp"
#include "krstrata/report_io.hpp"
#include "krstrata/rpoly.hpp"

namespace krstrata {

namespace {

using Body = std::function<CheckResult(const CheckConfig&)>;

CheckResult pass(std::string detail) { return {"", CheckStatus::Pass, std::move(detail)}; }
CheckResult fail(std::string detail) { return {"", CheckStatus::Fail, std::move(detail)}; }
CheckResult skip(std::string detail) { return {"", CheckStatus::Skip, std::move(detail)}; }

CheckResult verdict(bool ok, const std::string& detail) { return ok ? pass(detail) : fail(detail); }

bool points_supported(const CheckConfig& c) { return (c.n == 1 && c.q <= 7) || (c.n == 2 && c.q <= 3); }

bool is_prime(int q) {
  if (q < 2) return false;
  for (int p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

std::optional<CheckResult> need_points(const CheckConfig& c) {
  if (!is_prime(c.q)) return skip("q is not prime");
  if (!points_supported(c)) return skip("point enumeration limited to n=1 (q<=7), n=2 (q<=3)");
  return std::nullopt;
}

std::string count_text(std::size_t k, const char* noun) {
  return std::to_string(k) + " " + noun;
}

CheckResult check_vertex_lattice(const CheckConfig& c) {
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (int d = 2; d <= 4; ++d)
    for (int r = 0; r <= d; ++r) {
      if (c.r && *c.r != r) continue;
      const auto [k, b] = compare_permissibility(d, r, 5);
      checked += k;
      bad += b;
    }
  if (checked == 0) return skip("no val-det value in range");
  return verdict(bad == 0, count_text(checked, "elements") + ", " + count_text(bad, "disagreements"));
}

CheckResult check_adm_perm(const CheckConfig& c) {
  if (c.n > 3) return skip("limited to n <= 3");
  const auto perm = enumerate_perm_gsp(c.n);
  const auto adm = enumerate_adm_gsp(c.n);
  return verdict(perm.elements == adm.elements, count_text(perm.elements.size(), "elements in Perm, ") +
                                                    count_text(adm.elements.size(), "in Adm"));
}

CheckResult check_maximal(const CheckConfig& c) {
  if (c.n > 4) return skip("limited to n <= 4");
  const auto report = strata_report(c.n);
  auto maximal = maximal_elements(report);
  auto translations = orbit_translations(c.n);
  std::sort(maximal.begin(), maximal.end());
  std::sort(translations.begin(), translations.end());
  const auto group = AffineWeylGroup::gsp(c.n);
  const bool lengths_ok = std::all_of(maximal.begin(), maximal.end(),
                                      [&](const auto& w) { return group.length(w) == c.n * (c.n + 1) / 2; });
  return verdict(maximal == translations && lengths_ok, count_text(maximal.size(), "maximal elements"));
}

CheckResult check_prank_formula(const CheckConfig& c) {
  if (c.n > 4) return skip("limited to n <= 4");
  const auto report = strata_report(c.n);  // p_rank throws FormulaMismatch on disagreement
  return pass(count_text(report.records.size(), "elements"));
}

CheckResult check_density(const CheckConfig& c) {
  if (c.n > 3) return skip("limited to n <= 3");
  return verdict(density_check(c.n), "every stratum lies below a translation");
}

CheckResult check_ordinary(const CheckConfig& c) {
  if (c.n > 4) return skip("limited to n <= 4");
  const auto ordinary = ordinary_strata(strata_report(c.n));
  return verdict(ordinary.size() == (std::size_t{1} << c.n), count_text(ordinary.size(), "ordinary strata"));
}

CheckResult check_point_count(const CheckConfig& c) {
  if (auto s = need_points(c)) return *s;
  const auto count = point_count(c.n, c.q);
  const auto expected = strata_report(c.n).total_polynomial.evaluate(c.q);
  return verdict(BigInt(count.total) == expected, count_text(count.total, "points"));
}

CheckResult check_per_rank_count(const CheckConfig& c) {
  if (auto s = need_points(c)) return *s;
  const auto count = point_count(c.n, c.q);
  return verdict(count.matches_polynomial, count_text(count.by_p_rank.size(), "p-rank values"));
}

CheckResult check_point_prank(const CheckConfig& c) {
  if (auto s = need_points(c)) return *s;
  const auto report = strata_report(c.n);
  for (const auto& r : report.records) {
    const auto pt = orbit_rep(r.element, c.q);
    if (point_p_rank(pt) != r.p_rank) return fail("p-rank differs at " + r.element.to_string());
  }
  const auto points = enumerate_points(c.n, c.q);
  for (const auto& pt : points) {
    for (int k = 1; k <= 2 * c.n; ++k) {
      if (etale_at(pt, k) != multiplicative_at(pt, 2 * c.n + 1 - k)) return fail("duality fails on a point");
      if (etale_at(pt, k) && multiplicative_at(pt, k)) return fail("slot both etale and multiplicative");
    }
    if (point_p_rank(pt) > c.n) return fail("p-rank exceeds n");
  }
  return pass(count_text(report.records.size(), "strata, ") + count_text(points.size(), "points"));
}

CheckResult check_iwahori_invariance(const CheckConfig& c) {
  if (auto s = need_points(c)) return *s;
  const auto report = strata_report(c.n);
  std::size_t actions = 0;
  for (std::size_t k = 0; k < report.records.size(); ++k) {
    const auto& w = report.records[k].element;
    const auto pt = orbit_rep(w, c.q);
    for (int s = 0; s < c.samples; ++s) {
      const auto g = random_iwahori(c.n, c.q, c.seed + k * 1000003ULL + static_cast<std::uint64_t>(s));
      const auto moved = iwahori_act(g, pt);
      if (point_p_rank(moved) != report.records[k].p_rank) return fail("p-rank moved at " + w.to_string());
      if (cell_of_point(moved) != w) return fail("cell moved at " + w.to_string());
      ++actions;
    }
  }
  return pass(count_text(actions, "actions"));
}

CheckResult check_round_trip(const CheckConfig& c) {
  if (auto s = need_points(c)) return *s;
  auto report = strata_report(c.n);
  for (const auto& r : report.records)
    if (cell_of_point(orbit_rep(r.element, c.q)) != r.element) return fail("cell differs at " + r.element.to_string());
  const auto reread = report_from_json(report_to_json(report));
  const bool json_ok = aggregates_consistent(reread) && report_to_json(reread) == report_to_json(report);
  return verdict(json_ok, count_text(report.records.size(), "elements and report JSON"));
}

CheckResult check_cell_sizes(const CheckConfig& c) {
  if (auto s = need_points(c)) return *s;
  std::map<AffinePermutation, std::size_t> sizes;
  for (const auto& pt : enumerate_points(c.n, c.q)) ++sizes[cell_of_point(pt)];
  const auto report = strata_report(c.n);
  if (sizes.size() != report.records.size()) return fail("not every stratum is hit");
  for (const auto& r : report.records) {
    std::size_t expected = 1;
    for (int k = 0; k < r.length; ++k) expected *= static_cast<std::size_t>(c.q);
    if (sizes[r.element] != expected) return fail("cell of " + r.element.to_string() + " has wrong size");
  }
  return pass(count_text(sizes.size(), "cells"));
}

CheckResult check_hecke(const CheckConfig& c) {
  if (c.n > 3) return skip("limited to n <= 3");
  return verdict(hecke_verify(AffineWeylGroup::gsp(c.n), 3), "length bound 3");
}

CheckResult check_trace_translations(const CheckConfig& c) {
  if (c.n > 3) return skip("limited to n <= 3");
  if (!is_prime_power(c.q)) return skip("q is not a prime power");
  const RPolynomialTable table(AffineWeylGroup::gsp(c.n));
  std::size_t count = 0;
  for (const auto& t : orbit_translations(c.n)) {
    for (int m = 1; m <= 2; ++m)
      if (ss_trace(table, t, c.q, m).value != 1) return fail("trace differs from 1 at " + t.to_string());
    ++count;
  }
  return pass(count_text(count, "translations"));
}

const std::vector<std::pair<std::string, Body>>& registry() {
  static const std::vector<std::pair<std::string, Body>> checks{
      {"vertex_lattice", check_vertex_lattice},
      {"adm_perm", check_adm_perm},
      {"maximal", check_maximal},
      {"prank_formula", check_prank_formula},
      {"density", check_density},
      {"ordinary", check_ordinary},
      {"point_count", check_point_count},
      {"per_rank_count", check_per_rank_count},
      {"point_prank", check_point_prank},
      {"iwahori_invariance", check_iwahori_invariance},
      {"round_trip", check_round_trip},
      {"cell_sizes", check_cell_sizes},
      {"hecke", check_hecke},
      {"trace_translations", check_trace_translations},
  };
  return checks;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, body] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_check_name(const std::string& name) {
  const auto& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckResult run_check(const std::string& name, const CheckConfig& config) {
  const auto& checks = registry();
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const auto& e) { return e.first == name; });
  if (it == checks.end()) throw Error(ErrorKind::InvalidArgument, "unknown check: " + name);
  if (config.n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  CheckResult result;
  try {
    result = it->second(config);
  } catch (const Error& e) {
    result = e.kind() == ErrorKind::SizeLimit ? skip(e.what()) : fail(e.what());
  }
  result.name = name;
  return result;
}

std::pair<std::size_t, std::size_t> compare_permissibility(int d, int r, int max_length) {
  const auto group = AffineWeylGroup::gl(d);
  std::size_t checked = 0;
  std::size_t bad = 0;
  for (const auto& [w, length] : group.ball(max_length, r)) {
    ++checked;
    if (is_permissible_gl(w, r) != is_permissible_lattice(w, r)) ++bad;
  }
  return {checked, bad};
}

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

}  // namespace krstrata
