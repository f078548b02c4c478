#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flagbott/fan.hpp"
#include "flagbott/gkm.hpp"
#include "flagbott/tower.hpp"

namespace flagbott {

// Subsets of [n+1] are bitmasks with bit x-1 standing for the element x.
using Subset = std::uint64_t;

/// A proper chain A_1 < A_2 < ... < A_n of nonempty proper subsets of [n+1]
/// with |A_p| = p.
struct SubsetChain {
  int n = 0;
  std::vector<Subset> sets;
};

SubsetChain make_chain(int n, std::vector<Subset> sets);

/// The chain with A_k = {w(n+2-k),...,w(n+1)}, the last k values of w.
SubsetChain chain_of_permutation(const Permutation& w);

/// Inverse of chain_of_permutation.
Permutation chain_to_permutation(const SubsetChain& chain);

/// One chain per stage; chain l is over [n_l+1].
using MultiChain = std::vector<SubsetChain>;

/// The permutohedral fan in R^n: one ray per nonempty proper subset of [n+1]
/// (ascending bitmask order) and one maximal cone per chain.
Fan permutohedral_fan(int n, long long cap = kDefaultCap);

/// The fan of the generalized Bott manifold: rays e_{j,k} and the columns of
/// the lambda matrix, maximal cones omitting one ray per stage. Ray order is
/// (j, k), k = 1..n_j+1.
Fan gbt_fan(const GeneralizedBottTower& t, long long cap = kDefaultCap);

/// The ray generator u^l_A of the generic-orbit-closure fan: the indicator
/// of A in block l when n_l+1 is not in A, and otherwise minus the indicator
/// of the complement plus the lower tower entries a^j_{k,l} in blocks j > l.
IntVec orbit_ray(const GeneralizedBottTower& t, int l, Subset a);

/// (l, A) pairs in the ray order used by orbit_fan: l ascending, bitmask
/// ascending.
std::vector<std::pair<int, Subset>> orbit_ray_ids(const std::vector<int>& dims);

/// The fan of the generic torus-orbit closure in the associated flag Bott
/// manifold: rays orbit_ray(l, A), maximal cones indexed by multichains.
Fan orbit_fan(const GeneralizedBottTower& t, long long cap = kDefaultCap);

/// The lifting of the block-l permutohedral fan inside R^n: rays u^l_A and
/// one maximal cone per chain of subsets of [n_l+1].
Fan lifted_block_fan(const GeneralizedBottTower& t, int l, long long cap = kDefaultCap);

/// Runs the blow-up pipeline: star-subdivides gbt_fan(t) along the cones
/// spanned by {u^l_x : x in A} for every nonempty proper A, in increasing
/// order of l and decreasing order of |A| (same-size subsets in ascending
/// bitmask order), and compares the result with orbit_fan(t) exactly.
bool verify_blowup(const GeneralizedBottTower& t, long long cap = kDefaultCap);

/// Solves the axial-function linear system at the fixed point v for the ray
/// (l, A): the pairing of the solution with the axial function of the edge
/// crossing the unique facet avoiding the ray is 1 and with every other edge
/// axial is 0. The maximal cone of v must contain the ray; the solution is
/// verified exact and integral.
IntVec solve_ray_from_axials(const GeneralizedBottTower& t, int l, Subset a, const FixedPoint& v);

/// Checks solve_ray_from_axials == orbit_ray for every ray and every maximal
/// cone containing it.
bool verify_rays(const GeneralizedBottTower& t, long long cap = kDefaultCap);

}  // namespace flagbott
