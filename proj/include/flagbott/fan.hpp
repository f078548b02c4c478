#pragma once

#include <string>
#include <vector>

#include "flagbott/lattice.hpp"

namespace flagbott {

/// A cone addressed by its sorted set of ray indices into a Fan's ray table.
using ConeRef = std::vector<int>;

/// A simplicial rational fan: primitive pairwise-distinct ray generators and
/// maximal cones as sorted ray-index sets. Non-maximal cones are implicit as
/// subsets of maximal ones. The zero fan is dim > 0, no rays, one empty cone.
struct Fan {
  int dim = 0;
  std::vector<IntVec> rays;
  std::vector<ConeRef> max_cones;

  /// Index of a ray vector, or -1.
  int find_ray(const IntVec& v) const;

  /// Is the set of ray indices contained in some maximal cone?
  bool is_cone(const ConeRef& tau) const;

  /// Sort each cone's indices and the cone list.
  void normalize();

  /// Cheap invariants: rays primitive, nonzero, distinct; cones simplicial
  /// with valid indices; no maximal cone contained in another. Throws
  /// input_error on violation.
  void validate() const;
};

/// The zero fan in the given ambient dimension.
Fan zero_fan(int dim);

/// Star subdivision along tau. If tau is a single ray the fan is returned
/// unchanged; otherwise the ray u_tau = primitive(sum of tau's generators) is
/// inserted and every maximal cone containing tau is split accordingly.
/// Throws input_error when tau is not a cone of f.
Fan star_subdivide(const Fan& f, const ConeRef& tau);

/// The join: rays(f1) u rays(f2), maximal cones the pairwise unions. Requires
/// equal ambient dimensions, vector-disjoint ray sets and independent unions.
Fan join_fans(const Fan& f1, const Fan& f2);

/// True iff the two fans have the same dimension and the same set of maximal
/// cones, each cone compared as the set of its primitive ray generators.
bool fans_equal(const Fan& f1, const Fan& f2);

/// True iff every maximal cone's ray matrix has determinant +-1. Requires all
/// maximal cones full-dimensional (input_error otherwise).
bool check_unimodular(const Fan& f);

struct FanReport {
  std::vector<std::string> violations;
  bool clean() const { return violations.empty(); }
};

/// Structural sanity: ray and cone invariants, exact pairwise maximal-cone
/// intersections (each pair meets exactly in the cone on their common rays),
/// and the facet condition for full-dimensional cones (each codimension-1
/// face in at most 2 maximal cones; exactly 2 when completeness is asserted).
/// Quadratic in the number of maximal cones.
FanReport check_fan(const Fan& f, bool assert_complete = false);

}  // namespace flagbott
