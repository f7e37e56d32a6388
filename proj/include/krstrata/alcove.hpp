#pragma once

// Base-alcove geometry and the Kottwitz-Rapoport permissibility test for the
// minuscule coweight mu = (1^r, 0^(d-r)).

#include <vector>

#include "krstrata/affine_permutation.hpp"
#include "krstrata/weyl_group.hpp"

namespace krstrata {

/// a_0 = 0 and a_i = (1^i, 0^(d-i)) for 0 <= i < d.
std::vector<Coweight> base_alcove_vertices(int d);

/// w(a_i) - a_i. Throws IndexOutOfRange.
Coweight vertex_displacement(const AffinePermutation& w, int i);

/// val-det(w) = r and every vertex displacement is a 0/1 vector with r ones.
bool is_permissible_gl(const AffinePermutation& w, int r);

/// The lattice form: for every i in [0, d), the lattice spanned by
/// {t^m e_j : w(j - d m) <= i} lies between V_i and t V_i.
/// Throws ValDetMismatch when val-det(w) != r.
bool is_permissible_lattice(const AffinePermutation& w, int r);

/// Element of GSp(2n) whose image in GL(2n) is mu-permissible, mu = (1^n, 0^n).
bool is_permissible_gsp(const AffineWeylGroup& group, const AffinePermutation& w);

/// The 2^n vectors v in {0,1}^2n with v_i + v_{2n+1-i} = 1, in decreasing
/// lexicographic order.
std::vector<Coweight> weyl_orbit_mu(int n);

/// t_{y mu} for every y, in the order of weyl_orbit_mu.
std::vector<AffinePermutation> orbit_translations(int n);

struct KRSet {
  int n = 0;
  Coweight mu;
  std::vector<AffinePermutation> elements;  // sorted by window
};

/// All mu-permissible elements of GSp(2n), 1 <= n <= 5. Searches
/// w = x t_lambda with x in W(C_n) and lambda in weyl_orbit_mu(n).
KRSet enumerate_perm_gsp(int n);

/// Union of the Bruhat down-sets of the translations t_{y mu}, 1 <= n <= 3.
KRSet enumerate_adm_gsp(int n);

/// Bruhat interval below y: every x with x <= y.
std::vector<AffinePermutation> bruhat_down_set(const AffineWeylGroup& group, const AffinePermutation& y);

}  // namespace krstrata
