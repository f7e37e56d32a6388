#pragma once

// Serialization of strata reports and point counts.

#include <map>
#include <string>

#include "krstrata/prank.hpp"

namespace krstrata {

/// {group, n, mu, elements: [{window, length, p_rank, is_translation,
/// translation_part}], total_polynomial, count_polynomials, hasse_edges}.
/// Polynomials are ascending coefficient arrays; hasse edges are pairs of
/// windows. Output is deterministic (records in stored order).
std::string report_to_json(const StrataReport& report, int indent = 2);

/// Parses report_to_json output, keeping the stored aggregates as read.
/// Throws InvalidArgument on malformed input.
StrataReport report_from_json(const std::string& text);

/// Header plus one row per record.
std::string report_to_csv(const StrataReport& report);

/// True when the stored aggregates equal those recomputed from the records.
bool aggregates_consistent(const StrataReport& report);

struct PointCount {
  int n = 0;
  int q = 0;
  std::size_t total = 0;
  std::map<int, std::size_t> by_p_rank;
  bool matches_polynomial = false;
};

/// Brute-force point count compared with the strata report polynomials at q.
PointCount point_count(int n, int q);
std::string point_count_to_json(const PointCount& count, int indent = 2);

}  // namespace krstrata
