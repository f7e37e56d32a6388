#include "krstrata/report_io.hpp"

#include <json.hpp>
#include <sstream>

#include "krstrata/error.hpp"
#include "krstrata/local_model.hpp"

namespace krstrata {

using nlohmann::ordered_json;

namespace {

ordered_json poly_json(const IntPolynomial& p) {
  auto out = ordered_json::array();
  for (const auto& c : p.coefficients()) {
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
      throw Error(ErrorKind::InvalidArgument, "coefficient exceeds 64 bits");
    out.push_back(static_cast<long long>(c));
  }
  return out;
}

IntPolynomial poly_from(const ordered_json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j) coeffs.emplace_back(c.get<long long>());
  return IntPolynomial(std::move(coeffs));
}

std::string window_text(const AffinePermutation& w) {
  std::ostringstream os;
  os << w;
  return os.str();
}

std::string coweight_text(const Coweight& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

std::string report_to_json(const StrataReport& report, int indent) {
  ordered_json j;
  j["group"] = "GSp(" + std::to_string(2 * report.n) + ")";
  j["n"] = report.n;
  Coweight mu(2 * report.n, 0);
  for (int i = 0; i < report.n; ++i) mu[i] = 1;
  j["mu"] = mu;
  auto elements = ordered_json::array();
  for (const auto& r : report.records) {
    elements.push_back({{"window", r.element.window()},
                        {"length", r.length},
                        {"p_rank", r.p_rank},
                        {"is_translation", r.is_translation},
                        {"translation_part", r.translation_part}});
  }
  j["elements"] = std::move(elements);
  j["total_polynomial"] = poly_json(report.total_polynomial);
  auto counts = ordered_json::object();
  for (const auto& [rank, p] : report.count_polynomials) counts[std::to_string(rank)] = poly_json(p);
  j["count_polynomials"] = std::move(counts);
  auto edges = ordered_json::array();
  for (const auto& [lo, hi] : report.hasse_edges)
    edges.push_back({report.records.at(lo).element.window(), report.records.at(hi).element.window()});
  j["hasse_edges"] = std::move(edges);
  return j.dump(indent) + "\n";
}

StrataReport report_from_json(const std::string& text) {
  try {
    const auto j = ordered_json::parse(text);
    StrataReport report;
    report.n = j.at("n").get<int>();
    std::map<std::vector<int>, std::size_t> index;
    for (const auto& e : j.at("elements")) {
      auto window = e.at("window").get<std::vector<int>>();
      index[window] = report.records.size();
      report.records.push_back(StratumRecord{AffinePermutation(window), e.at("length").get<int>(),
                                             e.at("p_rank").get<int>(), e.at("is_translation").get<bool>(),
                                             e.at("translation_part").get<Coweight>()});
    }
    report.total_polynomial = poly_from(j.at("total_polynomial"));
    for (const auto& [key, p] : j.at("count_polynomials").items()) report.count_polynomials[std::stoi(key)] = poly_from(p);
    for (const auto& edge : j.at("hasse_edges"))
      report.hasse_edges.emplace_back(index.at(edge.at(0).get<std::vector<int>>()),
                                      index.at(edge.at(1).get<std::vector<int>>()));
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed report: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed report: ") + e.what());
  }
}

std::string report_to_csv(const StrataReport& report) {
  std::ostringstream os;
  os << "window,length,p_rank,is_translation,translation_part\n";
  for (const auto& r : report.records)
    os << '"' << window_text(r.element) << "\"," << r.length << ',' << r.p_rank << ','
       << (r.is_translation ? "true" : "false") << ",\"" << coweight_text(r.translation_part) << "\"\n";
  return os.str();
}

bool aggregates_consistent(const StrataReport& report) {
  auto copy = report;
  recompute_aggregates(copy);
  return copy.total_polynomial == report.total_polynomial && copy.count_polynomials == report.count_polynomials;
}

PointCount point_count(int n, int q) {
  PointCount out{n, q, 0, stratified_count(n, q), true};
  for (const auto& [rank, c] : out.by_p_rank) out.total += c;
  const auto report = strata_report(n);
  out.matches_polynomial = report.total_polynomial.evaluate(q) == BigInt(out.total);
  for (const auto& [rank, p] : report.count_polynomials) {
    const auto it = out.by_p_rank.find(rank);
    const BigInt seen = it == out.by_p_rank.end() ? 0 : it->second;
    if (p.evaluate(q) != seen) out.matches_polynomial = false;
  }
  for (const auto& [rank, c] : out.by_p_rank)
    if (!report.count_polynomials.contains(rank)) out.matches_polynomial = false;
  return out;
}

std::string point_count_to_json(const PointCount& count, int indent) {
  ordered_json j;
  j["n"] = count.n;
  j["q"] = count.q;
  j["total"] = count.total;
  auto ranks = ordered_json::object();
  for (auto it = count.by_p_rank.rbegin(); it != count.by_p_rank.rend(); ++it) ranks[std::to_string(it->first)] = it->second;
  j["by_p_rank"] = std::move(ranks);
  j["matches_polynomial"] = count.matches_polynomial;
  return j.dump(indent) + "\n";
}

}  // namespace krstrata
