#pragma once

#include <map>
#include <utility>
#include <vector>

#include "flagbott/lattice.hpp"

namespace flagbott {

// Stage indices j and the in-stage indices k follow the 1-based (j,k)
// subscripts used throughout; all maps are keyed on 1-based (j,l) with l < j.

/// The combinatorial datum of an m-stage flag Bott tower: stage dimensions
/// n_1..n_m and one (n_j+1) x (n_l+1) integer matrix per pair l < j.
struct FlagBottTower {
  std::vector<int> dims;
  std::map<std::pair<int, int>, IntMatrix> mats;

  int stages() const { return static_cast<int>(dims.size()); }
  const IntMatrix& mat(int j, int l) const { return mats.at({j, l}); }
};

/// The datum of an m-stage generalized Bott tower: stage dimensions and one
/// integer vector of length n_j per pair l < j.
struct GeneralizedBottTower {
  std::vector<int> dims;
  std::map<std::pair<int, int>, IntVec> vecs;

  int stages() const { return static_cast<int>(dims.size()); }
  const IntVec& vec(int j, int l) const { return vecs.at({j, l}); }
};

/// A fixed point of the canonical torus action: one permutation of [n_j+1]
/// per stage.
using FixedPoint = std::vector<Permutation>;

/// Throws input_error naming the offending (j,l) if a matrix has the wrong
/// shape, or if the key set differs from {(j,l) : 1 <= l < j <= m}.
void validate_flag_tower(const FlagBottTower& t);

void validate_generalized_tower(const GeneralizedBottTower& t);

/// The n x m matrix with -1 blocks on the diagonal, the vectors a^j_l below
/// and zeros above, n = sum n_j.
IntMatrix lambda_matrix(const GeneralizedBottTower& t);

/// The flag Bott tower associated to a generalized one: same dims, and
/// A^(j)_l carries a^j_l in the first column with zeros elsewhere (including
/// a zero last row).
FlagBottTower associate(const GeneralizedBottTower& t);

/// All prod_j (n_j+1)! fixed points in lexicographic order of the
/// concatenated one-line words. Throws cap_error past the cap.
std::vector<FixedPoint> enumerate_fixed_points(const std::vector<int>& dims,
                                               long long cap = kDefaultCap);

/// prod_j (n_j+1)! clamped test: throws cap_error if it exceeds cap.
long long fixed_point_count(const std::vector<int>& dims, long long cap);

}  // namespace flagbott
