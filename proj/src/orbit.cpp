#include "flagbott/orbit.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace flagbott {

namespace {

Subset full_set(int n_plus_1) { return (Subset(1) << n_plus_1) - 1; }

std::vector<int> effective_offsets(const std::vector<int>& dims) {
  std::vector<int> off(dims.size() + 1, 0);
  for (size_t j = 0; j < dims.size(); ++j) off[j + 1] = off[j] + dims[j];
  return off;
}

void check_proper_subset(int n, Subset a) {
  if (a == 0 || a >= full_set(n + 1))
    throw input_error("subset must be nonempty and proper in [" + std::to_string(n + 1) + "]");
}

long long checked_product(const std::vector<long long>& factors, long long cap,
                          const std::string& what) {
  long long p = 1;
  for (long long f : factors) {
    p *= f;
    if (p > cap) throw cap_error(what + " exceeds cap " + std::to_string(cap));
  }
  return p;
}

long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> word(static_cast<size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// Ray table offset of block l (1-based) in orbit-fan ray order.
std::vector<long long> orbit_ray_offsets(const std::vector<int>& dims) {
  std::vector<long long> off(dims.size() + 1, 0);
  for (size_t l = 0; l < dims.size(); ++l)
    off[l + 1] = off[l] + ((1LL << (dims[l] + 1)) - 2);
  return off;
}

// The axial functions at v of the n edges of the orbit closure's GKM graph,
// one row per (j, i) with i = 1..n_j: the adjacent-transposition edges.
IntMatrix axial_matrix(const FlagBottTower& f, const FixedPoint& v) {
  const auto rows = weight_row_matrices(f, v);
  const auto off = effective_offsets(f.dims);
  const int n = off.back();
  IntMatrix m(n, n);
  for (int j = 1; j <= f.stages(); ++j)
    for (int i = 1; i <= f.dims[j - 1]; ++i) {
      const IntVec alpha =
          to_effective(f.dims, vec_sub(rows[j - 1].row(i), rows[j - 1].row(i - 1)));
      for (int c = 0; c < n; ++c) m(off[j - 1] + i - 1, c) = alpha[static_cast<size_t>(c)];
    }
  return m;
}

// Column t of adj/d, checked integral.
IntVec integral_solution_column(const Int& d, const IntMatrix& adj, int t) {
  IntVec u(static_cast<size_t>(adj.rows()));
  for (int i = 0; i < adj.rows(); ++i) {
    if (adj(i, t) % d != 0)
      throw input_error("axial-function system has a non-integral solution");
    u[static_cast<size_t>(i)] = adj(i, t) / d;
  }
  return u;
}

}  // namespace

SubsetChain make_chain(int n, std::vector<Subset> sets) {
  if (static_cast<int>(sets.size()) != n) throw input_error("chain must have n subsets");
  Subset prev = 0;
  for (int p = 1; p <= n; ++p) {
    const Subset a = sets[static_cast<size_t>(p - 1)];
    check_proper_subset(n, a);
    if (std::popcount(a) != p || (prev & ~a) != 0 || a == prev)
      throw input_error("chain subsets must be strictly nested with |A_p| = p");
    prev = a;
  }
  return {n, std::move(sets)};
}

SubsetChain chain_of_permutation(const Permutation& w) {
  const int n = w.size() - 1;
  std::vector<Subset> sets(static_cast<size_t>(n), 0);
  Subset acc = 0;
  for (int k = 1; k <= n; ++k) {
    acc |= Subset(1) << (w(n + 2 - k) - 1);
    sets[static_cast<size_t>(k - 1)] = acc;
  }
  return {n, std::move(sets)};
}

Permutation chain_to_permutation(const SubsetChain& chain) {
  const int n = chain.n;
  std::vector<int> word(static_cast<size_t>(n + 1));
  Subset prev = 0;
  for (int k = 1; k <= n; ++k) {
    const Subset fresh = chain.sets[static_cast<size_t>(k - 1)] & ~prev;
    word[static_cast<size_t>(n + 1 - k)] = std::countr_zero(fresh) + 1;
    prev = chain.sets[static_cast<size_t>(k - 1)];
  }
  const Subset missing = full_set(n + 1) & ~prev;
  word[0] = std::countr_zero(missing) + 1;
  return Permutation(std::move(word));
}

Fan permutohedral_fan(int n, long long cap) {
  if (n < 1) throw input_error("permutohedral fan needs n >= 1");
  if (n + 1 > 62) throw input_error("permutohedral fan block too large for bitmask subsets");
  checked_product({(1LL << (n + 1)) - 2}, cap, "permutohedral ray count");
  checked_product({factorial(n + 1)}, cap, "permutohedral maximal cone count");

  Fan f;
  f.dim = n;
  const Subset full = full_set(n + 1);
  for (Subset a = 1; a < full; ++a) {
    IntVec u(static_cast<size_t>(n), Int(0));
    if (!(a & (Subset(1) << n))) {
      for (int x = 0; x < n; ++x)
        if (a & (Subset(1) << x)) u[static_cast<size_t>(x)] = 1;
    } else {
      for (int x = 0; x < n; ++x)
        if (!(a & (Subset(1) << x))) u[static_cast<size_t>(x)] = -1;
    }
    f.rays.push_back(std::move(u));
  }
  for (const Permutation& w : all_permutations(n + 1)) {
    const SubsetChain chain = chain_of_permutation(w);
    ConeRef cone;
    for (Subset a : chain.sets) cone.push_back(static_cast<int>(a) - 1);
    f.max_cones.push_back(std::move(cone));
  }
  f.normalize();
  return f;
}

Fan gbt_fan(const GeneralizedBottTower& t, long long cap) {
  validate_generalized_tower(t);
  const int m = t.stages();
  std::vector<long long> sizes;
  for (int n : t.dims) sizes.push_back(n + 1);
  checked_product(sizes, cap, "generalized Bott fan maximal cone count");

  const auto off = effective_offsets(t.dims);
  const int n = off.back();
  const IntMatrix lam = lambda_matrix(t);

  Fan f;
  f.dim = n;
  std::vector<int> ray_offset(static_cast<size_t>(m + 1), 0);
  for (int j = 1; j <= m; ++j) {
    ray_offset[j] = ray_offset[j - 1] + t.dims[j - 1] + 1;
    for (int k = 1; k <= t.dims[j - 1]; ++k) {
      IntVec u(static_cast<size_t>(n), Int(0));
      u[static_cast<size_t>(off[j - 1] + k - 1)] = 1;
      f.rays.push_back(std::move(u));
    }
    IntVec col(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = lam(i, j - 1);
    f.rays.push_back(std::move(col));
  }

  std::vector<int> k(static_cast<size_t>(m), 1);
  while (true) {
    ConeRef cone;
    for (int j = 1; j <= m; ++j)
      for (int x = 1; x <= t.dims[j - 1] + 1; ++x)
        if (x != k[static_cast<size_t>(j - 1)]) cone.push_back(ray_offset[j - 1] + x - 1);
    f.max_cones.push_back(std::move(cone));
    int j = m - 1;
    while (j >= 0 && ++k[static_cast<size_t>(j)] > t.dims[static_cast<size_t>(j)] + 1)
      k[static_cast<size_t>(j--)] = 1;
    if (j < 0) break;
  }
  f.normalize();
  return f;
}

IntVec orbit_ray(const GeneralizedBottTower& t, int l, Subset a) {
  validate_generalized_tower(t);
  const int m = t.stages();
  if (l < 1 || l > m) throw input_error("orbit_ray block index out of range");
  const int nl = t.dims[l - 1];
  check_proper_subset(nl, a);

  const auto off = effective_offsets(t.dims);
  IntVec u(static_cast<size_t>(off.back()), Int(0));
  if (!(a & (Subset(1) << nl))) {
    for (int x = 0; x < nl; ++x)
      if (a & (Subset(1) << x)) u[static_cast<size_t>(off[l - 1] + x)] = 1;
  } else {
    for (int x = 0; x < nl; ++x)
      if (!(a & (Subset(1) << x))) u[static_cast<size_t>(off[l - 1] + x)] = -1;
    for (int j = l + 1; j <= m; ++j) {
      const IntVec& ajl = t.vec(j, l);
      for (int k = 0; k < t.dims[j - 1]; ++k)
        u[static_cast<size_t>(off[j - 1] + k)] = ajl[static_cast<size_t>(k)];
    }
  }
  return u;
}

std::vector<std::pair<int, Subset>> orbit_ray_ids(const std::vector<int>& dims) {
  std::vector<std::pair<int, Subset>> ids;
  for (size_t l = 0; l < dims.size(); ++l)
    for (Subset a = 1; a < full_set(dims[l] + 1); ++a)
      ids.emplace_back(static_cast<int>(l) + 1, a);
  return ids;
}

Fan orbit_fan(const GeneralizedBottTower& t, long long cap) {
  validate_generalized_tower(t);
  const int m = t.stages();
  std::vector<long long> sizes;
  for (int n : t.dims) sizes.push_back(factorial(n + 1));
  checked_product(sizes, cap, "orbit fan maximal cone count");

  const auto roff = orbit_ray_offsets(t.dims);
  Fan f;
  f.dim = effective_dim(t.dims);
  for (const auto& [l, a] : orbit_ray_ids(t.dims)) f.rays.push_back(orbit_ray(t, l, a));

  std::vector<std::vector<SubsetChain>> chains(static_cast<size_t>(m));
  for (int l = 1; l <= m; ++l)
    for (const Permutation& w : all_permutations(t.dims[l - 1] + 1))
      chains[static_cast<size_t>(l - 1)].push_back(chain_of_permutation(w));

  std::vector<size_t> idx(static_cast<size_t>(m), 0);
  while (true) {
    ConeRef cone;
    for (int l = 1; l <= m; ++l)
      for (Subset a : chains[static_cast<size_t>(l - 1)][idx[static_cast<size_t>(l - 1)]].sets)
        cone.push_back(static_cast<int>(roff[l - 1] + static_cast<long long>(a) - 1));
    f.max_cones.push_back(std::move(cone));
    int l = m - 1;
    while (l >= 0 && ++idx[static_cast<size_t>(l)] == chains[static_cast<size_t>(l)].size())
      idx[static_cast<size_t>(l--)] = 0;
    if (l < 0) break;
  }
  f.normalize();
  return f;
}

Fan lifted_block_fan(const GeneralizedBottTower& t, int l, long long cap) {
  validate_generalized_tower(t);
  if (l < 1 || l > t.stages()) throw input_error("block index out of range");
  const int nl = t.dims[l - 1];
  checked_product({factorial(nl + 1)}, cap, "lifted block fan maximal cone count");

  Fan f;
  f.dim = effective_dim(t.dims);
  for (Subset a = 1; a < full_set(nl + 1); ++a) f.rays.push_back(orbit_ray(t, l, a));
  for (const Permutation& w : all_permutations(nl + 1)) {
    ConeRef cone;
    for (Subset a : chain_of_permutation(w).sets) cone.push_back(static_cast<int>(a) - 1);
    f.max_cones.push_back(std::move(cone));
  }
  f.normalize();
  return f;
}

bool verify_blowup(const GeneralizedBottTower& t, long long cap) {
  Fan fan = gbt_fan(t, cap);
  const Fan target = orbit_fan(t, cap);
  const IntMatrix lam = lambda_matrix(t);
  const auto off = effective_offsets(t.dims);
  const int n = off.back();

  for (int l = 1; l <= t.stages(); ++l) {
    const int nl = t.dims[l - 1];
    // u^l_x in the ambient fan: basis vectors and the lambda column.
    std::vector<IntVec> block_rays;
    for (int x = 1; x <= nl; ++x) {
      IntVec u(static_cast<size_t>(n), Int(0));
      u[static_cast<size_t>(off[l - 1] + x - 1)] = 1;
      block_rays.push_back(std::move(u));
    }
    IntVec col(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = lam(i, l - 1);
    block_rays.push_back(std::move(col));

    for (int size = nl; size >= 1; --size)
      for (Subset a = 1; a < full_set(nl + 1); ++a) {
        if (std::popcount(a) != size) continue;
        ConeRef tau;
        for (int x = 1; x <= nl + 1; ++x)
          if (a & (Subset(1) << (x - 1))) {
            const int idx = fan.find_ray(block_rays[static_cast<size_t>(x - 1)]);
            if (idx < 0) throw input_error("blow-up pipeline lost a generalized Bott fan ray");
            tau.push_back(idx);
          }
        fan = star_subdivide(fan, tau);
      }
  }
  return fans_equal(fan, target);
}

IntVec solve_ray_from_axials(const GeneralizedBottTower& t, int l, Subset a,
                             const FixedPoint& v) {
  validate_generalized_tower(t);
  const int m = t.stages();
  if (l < 1 || l > m) throw input_error("block index out of range");
  const int nl = t.dims[l - 1];
  check_proper_subset(nl, a);
  if (static_cast<int>(v.size()) != m) throw input_error("fixed point has wrong block count");

  const int size = std::popcount(a);
  const SubsetChain chain = chain_of_permutation(v[static_cast<size_t>(l - 1)]);
  if (chain.sets[static_cast<size_t>(size - 1)] != a)
    throw input_error("the maximal cone of the given fixed point does not contain the ray");

  const FlagBottTower f = associate(t);
  const IntMatrix system = axial_matrix(f, v);
  const auto [d, adj] = det_and_adjugate(system);
  const auto off = effective_offsets(t.dims);
  const int target_row = off[l - 1] + (nl - size);  // edge e^l_d, d = n_l + 1 - |A|
  IntVec u = integral_solution_column(d, adj, target_row);

  for (int row = 0; row < system.rows(); ++row) {
    Int pairing = 0;
    for (int c = 0; c < system.cols(); ++c) pairing += system(row, c) * u[static_cast<size_t>(c)];
    if (pairing != (row == target_row ? 1 : 0))
      throw input_error("axial-function system solution failed verification");
  }
  return u;
}

bool verify_rays(const GeneralizedBottTower& t, long long cap) {
  validate_generalized_tower(t);
  const int m = t.stages();
  std::vector<long long> sizes;
  for (int n : t.dims) sizes.push_back(factorial(n + 1));
  checked_product(sizes, cap, "orbit fan maximal cone count");

  const FlagBottTower f = associate(t);
  const auto off = effective_offsets(t.dims);

  std::vector<std::vector<Permutation>> perms(static_cast<size_t>(m));
  for (int l = 1; l <= m; ++l)
    perms[static_cast<size_t>(l - 1)] = all_permutations(t.dims[l - 1] + 1);

  std::vector<size_t> idx(static_cast<size_t>(m), 0);
  while (true) {
    FixedPoint v;
    for (int l = 1; l <= m; ++l)
      v.push_back(perms[static_cast<size_t>(l - 1)][idx[static_cast<size_t>(l - 1)]]);

    const IntMatrix system = axial_matrix(f, v);
    const auto [d, adj] = det_and_adjugate(system);
    for (int l = 1; l <= m; ++l) {
      const SubsetChain chain = chain_of_permutation(v[static_cast<size_t>(l - 1)]);
      for (int p = 1; p <= t.dims[l - 1]; ++p) {
        const Subset a = chain.sets[static_cast<size_t>(p - 1)];
        const int target_row = off[l - 1] + (t.dims[l - 1] - p);
        const IntVec u = integral_solution_column(d, adj, target_row);
        if (u != orbit_ray(t, l, a)) return false;
      }
    }
    int l = m - 1;
    while (l >= 0 && ++idx[static_cast<size_t>(l)] == perms[static_cast<size_t>(l)].size())
      idx[static_cast<size_t>(l--)] = 0;
    if (l < 0) break;
  }
  return true;
}

}  // namespace flagbott
