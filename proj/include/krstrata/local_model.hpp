#pragma once

// Special fiber of the Siegel local model over a small prime field: brute
// force enumeration of lattice chains, their p-rank, their Iwahori cell and
// the action of the Iwahori subgroup.
//
// Coordinates. Level i carries the quotient V_i / t V_i with V_i = span of
// indices <= i (index j - 2n m stands for t^m e_j). Column c (0-based) of
// level i is index c + 1 + i - 2n. The transition V_i -> V_{i+1} shifts
// column c to c - 1 and kills column 0. Levels i and 2n - i are dual, with
// column c pairing against column 2n - 1 - c.

#include <cstdint>
#include <map>
#include <vector>

#include "krstrata/affine_permutation.hpp"
#include "krstrata/finite_field.hpp"

namespace krstrata {

/// L_0 .. L_{2n}, each an n-dimensional subspace of F_q^{2n}.
struct SubspaceChain {
  int n = 0;
  int q = 0;
  std::vector<Subspace> spaces;

  friend bool operator==(const SubspaceChain& a, const SubspaceChain& b) {
    return a.n == b.n && a.q == b.q && a.spaces == b.spaces;
  }
  friend auto operator<=>(const SubspaceChain& a, const SubspaceChain& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.spaces <=> b.spaces;
  }
};

/// Sign of the pairing at index iota: +1 when iota mod 2n lies in 1..n.
int pairing_sign(int n, long long index);

/// Image of L_i in V_{i+1} / t V_{i+1}.
Subspace shift_to_next(const Subspace& space, const PrimeField& field);

/// Annihilator of L_i (at the given level) inside V_{2n-i} / t V_{2n-i}.
Subspace dual_space(const Subspace& space, int level, int n, const PrimeField& field);

/// Throws InvariantViolation unless the chain has 2n+1 n-dimensional
/// members, is increasing under the transition maps, has L_{2n} = L_0 and
/// satisfies L_{2n-i} = dual(L_i) for every i (so L_0 and L_n are
/// Lagrangian).
void validate_chain(const SubspaceChain& chain);

/// Supported (n, q): n = 1 with q in {2, 3, 5, 7}; n = 2 with q in {2, 3}.
/// Throws SizeLimit outside that range and InvalidArgument for q not prime.
std::vector<SubspaceChain> enumerate_points(int n, int q);
std::size_t count_points(int n, int q);

/// Slot k in 1..2n is etale when the kernel of V_{k-1} -> V_k meets L_{k-1}
/// trivially.
bool etale_at(const SubspaceChain& chain, int k);
/// Slot k in 1..2n is multiplicative when L_k is not contained in the image
/// of V_{k-1} -> V_k.
bool multiplicative_at(const SubspaceChain& chain, int k);
/// Number of etale slots.
int point_p_rank(const SubspaceChain& chain);

/// The chain w V_i. Throws NotPermissible for w outside KR(mu) and
/// DimensionMismatch if a member does not have dimension n.
SubspaceChain orbit_rep(const AffinePermutation& w, int q);

/// The w with chain in the Iwahori orbit of orbit_rep(w), read off from the
/// relative position of the chain and the standard one. Throws
/// NormalFormFailure if the result is not an element of KR(mu).
AffinePermutation cell_of_point(const SubspaceChain& chain);

/// g = sum_k coefficients[k] t^k with g mod t upper triangular invertible and
/// g^T J g = c(t) J modulo t^{coefficients.size()}.
struct IwahoriElement {
  int n = 0;
  int q = 0;
  std::vector<FqMatrix> coefficients;
};

/// Throws InvariantViolation if the coefficients do not define an Iwahori element.
IwahoriElement make_iwahori(int n, int q, std::vector<FqMatrix> coefficients);
IwahoriElement identity_iwahori(int n, int q);
/// Torus times positive root subgroup, times (1 + tX) for a random X in gsp.
IwahoriElement random_iwahori(int n, int q, std::uint64_t seed);

SubspaceChain iwahori_act(const IwahoriElement& g, const SubspaceChain& chain);

/// p-rank histogram of enumerate_points(n, q).
std::map<int, std::size_t> stratified_count(int n, int q);

}  // namespace krstrata
