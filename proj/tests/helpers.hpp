#pragma once

// Shared fixtures (the worked examples used across suites) and independent
// test oracles that deliberately avoid the library's computation paths.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "flagbott/gkm.hpp"
#include "flagbott/lattice.hpp"
#include "flagbott/orbit.hpp"
#include "flagbott/tower.hpp"

namespace testutil {

using namespace flagbott;

inline IntVec vec(std::initializer_list<long long> xs) {
  IntVec v;
  for (long long x : xs) v.emplace_back(x);
  return v;
}

inline Permutation perm(std::initializer_list<int> word) { return Permutation(std::vector<int>(word)); }

// Height-3 flag Bott tower with dims (2,1,1) and matrices
// [[1,2,0],[0,0,0]], [[3,4,0],[0,0,0]], [[5,0],[0,0]].
inline FlagBottTower three_stage_flag_tower() {
  FlagBottTower t;
  t.dims = {2, 1, 1};
  t.mats.emplace(std::make_pair(2, 1), IntMatrix{{1, 2, 0}, {0, 0, 0}});
  t.mats.emplace(std::make_pair(3, 1), IntMatrix{{3, 4, 0}, {0, 0, 0}});
  t.mats.emplace(std::make_pair(3, 2), IntMatrix{{5, 0}, {0, 0}});
  return t;
}

// CP^1-bundle over Fl(3) with A^(2)_1 = [[c1,c2,0],[0,0,0]].
inline FlagBottTower cp1_over_fl3_tower(long long c1, long long c2) {
  FlagBottTower t;
  t.dims = {2, 1};
  IntMatrix a(2, 3);
  a(0, 0) = c1;
  a(0, 1) = c2;
  t.mats.emplace(std::make_pair(2, 1), std::move(a));
  return t;
}

// Fl(n+1) as a height-1 tower.
inline FlagBottTower flag_manifold_tower(int n) {
  FlagBottTower t;
  t.dims = {n};
  return t;
}

// Height-3 generalized Bott tower with dims (2,1,2); the five tower entries
// in the order a^2_{1,1}, a^3_{1,1}, a^3_{2,1}, a^3_{1,2}, a^3_{2,2}.
inline GeneralizedBottTower three_stage_generalized_tower(long long a211, long long a311,
                                                          long long a321, long long a312,
                                                          long long a322) {
  GeneralizedBottTower t;
  t.dims = {2, 1, 2};
  t.vecs.emplace(std::make_pair(2, 1), vec({a211}));
  t.vecs.emplace(std::make_pair(3, 1), vec({a311, a321}));
  t.vecs.emplace(std::make_pair(3, 2), vec({a312, a322}));
  return t;
}

// Height-2 generalized Bott tower with dims (2,1) and a^2_1 = (a).
inline GeneralizedBottTower two_stage_generalized_tower(long long a) {
  GeneralizedBottTower t;
  t.dims = {2, 1};
  t.vecs.emplace(std::make_pair(2, 1), vec({a}));
  return t;
}

// CP^n as a height-1 generalized tower.
inline GeneralizedBottTower projective_space_tower(int n) {
  GeneralizedBottTower t;
  t.dims = {n};
  return t;
}

// --- oracles ---------------------------------------------------------------

// Determinant by the Leibniz sum over permutations.
inline Int leibniz_det(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  Int total = 0;
  do {
    Permutation p(word);
    Int term = p.sign();
    for (int i = 0; i < n; ++i) term *= m(i, p(i + 1) - 1);
    total += term;
  } while (std::next_permutation(word.begin(), word.end()));
  return total;
}

// X^(j)_l by brute-force enumeration of all chains l < i_1 < ... < i_r < j:
// sum of (B_j A^(j)_{i_r})(B_{i_r} A^(i_r)_{i_{r-1}}) ... (B_{i_1} A^(i_1)_l) B_l,
// the empty chain contributing B_j A^(j)_l B_l.
inline IntMatrix chain_sum_X(const FlagBottTower& t, const FixedPoint& w, int j, int l) {
  std::vector<IntMatrix> b;
  for (const Permutation& p : w) b.push_back(p.to_row_matrix());
  const std::vector<int> middle = [&] {
    std::vector<int> v;
    for (int p = l + 1; p < j; ++p) v.push_back(p);
    return v;
  }();
  IntMatrix total(t.dims[j - 1] + 1, t.dims[l - 1] + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << middle.size()); ++mask) {
    std::vector<int> chain;  // l < i_1 < ... < i_r < j
    for (size_t p = 0; p < middle.size(); ++p)
      if (mask & (std::uint64_t(1) << p)) chain.push_back(middle[p]);
    IntMatrix term = b[static_cast<size_t>(j - 1)];
    int upper = j;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      term = mat_mul(mat_mul(term, t.mat(upper, *it)), b[static_cast<size_t>(*it - 1)]);
      upper = *it;
    }
    term = mat_mul(mat_mul(term, t.mat(upper, l)), b[static_cast<size_t>(l - 1)]);
    total = mat_add(total, term);
  }
  return total;
}

// Multiset comparison of weight coordinate vectors.
inline bool same_weights(std::vector<IntVec> a, std::vector<IntVec> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline Subset subset(std::initializer_list<int> xs) {
  Subset a = 0;
  for (int x : xs) a |= Subset(1) << (x - 1);
  return a;
}

// The fourteen ray generators of the height-3 example tower, keyed on (l, A),
// transcribed from the symbolic table.
inline std::map<std::pair<int, Subset>, IntVec> three_stage_ray_table(long long a211, long long a311,
                                                                  long long a321, long long a312,
                                                                  long long a322) {
  std::map<std::pair<int, Subset>, IntVec> t;
  t[{1, subset({1})}] = vec({1, 0, 0, 0, 0});
  t[{1, subset({2})}] = vec({0, 1, 0, 0, 0});
  t[{1, subset({3})}] = IntVec{-1, -1, a211, a311, a321};
  t[{1, subset({1, 2})}] = vec({1, 1, 0, 0, 0});
  t[{1, subset({1, 3})}] = IntVec{0, -1, a211, a311, a321};
  t[{1, subset({2, 3})}] = IntVec{-1, 0, a211, a311, a321};
  t[{2, subset({1})}] = vec({0, 0, 1, 0, 0});
  t[{2, subset({2})}] = IntVec{0, 0, -1, a312, a322};
  t[{3, subset({1})}] = vec({0, 0, 0, 1, 0});
  t[{3, subset({2})}] = vec({0, 0, 0, 0, 1});
  t[{3, subset({3})}] = vec({0, 0, 0, -1, -1});
  t[{3, subset({1, 2})}] = vec({0, 0, 0, 1, 1});
  t[{3, subset({1, 3})}] = vec({0, 0, 0, 0, -1});
  t[{3, subset({2, 3})}] = vec({0, 0, 0, -1, 0});
  return t;
}

// The eight ray generators of the two-stage example tower, keyed on (l, A).
inline std::map<std::pair<int, Subset>, IntVec> two_stage_ray_table(long long a) {
  std::map<std::pair<int, Subset>, IntVec> t;
  t[{1, subset({1})}] = vec({1, 0, 0});
  t[{1, subset({2})}] = vec({0, 1, 0});
  t[{1, subset({3})}] = IntVec{-1, -1, a};
  t[{1, subset({1, 2})}] = vec({1, 1, 0});
  t[{1, subset({1, 3})}] = IntVec{0, -1, a};
  t[{1, subset({2, 3})}] = IntVec{-1, 0, a};
  t[{2, subset({1})}] = vec({0, 0, 1});
  t[{2, subset({2})}] = vec({0, 0, -1});
  return t;
}

// Star-subdivide the CP^n fan along all cones of dimension >= 2 in
// decreasing dimension (same-dimension targets in ascending bitmask order).
inline Fan cp_n_subdivision_pipeline(int n) {
  Fan f = gbt_fan(projective_space_tower(n));
  for (int size = n; size >= 2; --size)
    for (Subset mask = 1; mask < (Subset(1) << (n + 1)); ++mask) {
      if (std::popcount(mask) != size) continue;
      ConeRef tau;
      for (int x = 0; x <= n; ++x)
        if (mask & (Subset(1) << x)) tau.push_back(x);
      f = star_subdivide(f, tau);
    }
  return f;
}

}  // namespace testutil
