#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagbott/tower.hpp"

namespace flagbott {

/// Weight coordinates live either in the full basis e_{1,1},...,e_{m,n_m+1}
/// (one coordinate per stage index pair, dim = sum (n_j+1)) or in the
/// effective basis obtained by setting e_{j,n_j+1} = 0 (dim = sum n_j).
enum class Basis { full, effective };

struct WeightVector {
  IntVec coords;
  Basis basis = Basis::full;

  bool operator==(const WeightVector&) const = default;
};

int full_dim(const std::vector<int>& dims);
int effective_dim(const std::vector<int>& dims);

/// Drop the (j, n_j+1) coordinates of a full-basis vector.
IntVec to_effective(const std::vector<int>& dims, const IntVec& full);

/// The matrix X^(j)_l of the tangential-representation decomposition,
/// evaluated at the fixed point w. Computed by the linear recursion
///   X^(j)_l = sum_{p=l+1}^{j-1} B_j A^(j)_p X^(p)_l + B_j A^(j)_l B_l,
/// where B_p is the row permutation matrix of w_p.
IntMatrix compute_X(const FlagBottTower& t, const FixedPoint& w, int j, int l);

/// For each stage j, the (n_j+1) x full_dim block-row matrix
/// [X^(j)_1 ... X^(j)_{j-1}  B_j  0 ... 0] whose rows are the rho^(j)_k.
std::vector<IntMatrix> weight_row_matrices(const FlagBottTower& t, const FixedPoint& w);

/// The isotropy weights rho^(j)_r - rho^(j)_s at w, for every stage j and
/// every s < r, in (j, r, s) order.
std::vector<WeightVector> tangential_weights(const FlagBottTower& t, const FixedPoint& w,
                                             Basis basis);

/// The label of the edge w -> w with w_j replaced by w_j (r,s), r > s.
IntVec axial_function(const FlagBottTower& t, const FixedPoint& w, int block, int r, int s,
                      Basis basis);

struct GkmEdge {
  int source = 0;
  int target = 0;
  int block = 0;  // 1-based stage index
  int r = 0;      // transposition (r,s), r > s, 1-based positions
  int s = 0;
  IntVec label;

  bool operator==(const GkmEdge&) const = default;
};

struct GkmGraph {
  std::vector<int> dims;
  Basis basis = Basis::full;
  std::vector<FixedPoint> vertices;
  std::vector<GkmEdge> edges;               // directed, grouped by source
  std::vector<std::vector<int>> out_edges;  // per-vertex edge indices

  int degree() const;     // sum n_j (n_j+1) / 2
  int label_dim() const;  // ambient dimension of the labels

  /// Index of the directed edge opposite to edges[e].
  int reverse_edge(int e) const;
};

/// The GKM graph of the flag Bott manifold: vertices are the fixed points in
/// lexicographic order, edges are single-block transpositions stored in both
/// orientations, labels per the axial function above.
GkmGraph build_gkm_graph(const FlagBottTower& t, Basis basis, long long cap = kDefaultCap);

/// True iff at every vertex all pairs of outgoing labels are linearly
/// independent over the rationals.
bool check_pairwise_independence(const GkmGraph& g);

/// theta[e][p] is the edge at the target of e assigned to out_edges[source][p].
struct Connection {
  std::vector<std::vector<int>> theta;
};

/// Searches, per unordered edge pair, for bijections theta_e with
/// theta_e(e) = reverse(e), theta_{reverse} = theta^{-1}, and
/// alpha(theta_e(e')) = alpha(e') + c alpha(e) for an integer c.
/// Returns nothing if some edge admits no such matching. Throws cap_error
/// when the regular degree exceeds degree_bound.
std::optional<Connection> find_connection(const GkmGraph& g, int degree_bound = 8);

enum class GraphFormat { dot, json };

/// Deterministic text form; DOT nodes are the one-line words joined with '|',
/// JSON uses one record per undirected edge.
std::string export_gkm(const GkmGraph& g, GraphFormat format);

GkmGraph parse_gkm_json(const std::string& text);

}  // namespace flagbott
