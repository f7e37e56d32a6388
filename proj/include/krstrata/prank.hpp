#pragma once

// p-rank of Kottwitz-Rapoport strata and the stratification report of the
// Siegel local model with Iwahori level.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "krstrata/affine_permutation.hpp"
#include "krstrata/polynomial.hpp"
#include "krstrata/weyl_group.hpp"

namespace krstrata {

/// #{i in 1..2n : w(i) = i + 2n}, the t-entries on the diagonal.
int diagonal_t_count(const AffinePermutation& w);
/// Fixed points of the finite part on 1..2n.
int finite_fixed_points(const AffinePermutation& w);

/// r(w) for w in KR(mu) of GSp(2n). Cross-checks the diagonal count against
/// half the fixed points of the finite part.
/// Throws NotPermissible or FormulaMismatch.
int p_rank(const AffineWeylGroup& group, const AffinePermutation& w);

struct StratumRecord {
  AffinePermutation element;
  int length = 0;
  int p_rank = 0;
  bool is_translation = false;
  Coweight translation_part;
};

struct StrataReport {
  int n = 0;
  std::vector<StratumRecord> records;                       // sorted by window
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;  // (lower, upper) record indices
  std::map<int, IntPolynomial> count_polynomials;           // p-rank -> sum of q^length
  IntPolynomial total_polynomial;
};

/// One record per element of KR(mu), Bruhat covers, and point-count
/// polynomials. 1 <= n <= 4.
StrataReport strata_report(int n);

/// Fills count_polynomials and total_polynomial from the records.
void recompute_aggregates(StrataReport& report);

/// Elements with no strict Bruhat upper bound among the records.
std::vector<AffinePermutation> maximal_elements(const StrataReport& report);

/// Records with p-rank n. Throws FormulaMismatch if they differ from the
/// translation records.
std::vector<StratumRecord> ordinary_strata(const StrataReport& report);

/// Every element of KR(mu) lies below some t_{y mu}. 1 <= n <= 3.
bool density_check(int n);

/// Graphviz digraph of the Bruhat covers, nodes labelled "window | length | p-rank".
std::string hasse_dot(const StrataReport& report);

}  // namespace krstrata
