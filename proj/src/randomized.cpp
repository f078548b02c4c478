#include "flagbott/randomized.hpp"

#include <algorithm>

#include "flagbott/orbit.hpp"

namespace flagbott {

namespace {

std::vector<int> random_composition(Rng& rng, int total) {
  std::vector<int> parts;
  int remaining = total;
  while (remaining > 0) {
    const int part = draw(rng, 1, remaining);
    parts.push_back(part);
    remaining -= part;
  }
  return parts;
}

Fan random_complete_fan(Rng& rng, int dim) {
  const int kind = draw(rng, 0, 2);
  if (kind == 2) return permutohedral_fan(dim);
  GeneralizedBottTower t;
  t.dims = random_composition(rng, dim);
  for (int j = 2; j <= t.stages(); ++j)
    for (int l = 1; l < j; ++l) {
      IntVec a(static_cast<size_t>(t.dims[j - 1]));
      for (Int& x : a) x = draw(rng, -3, 3);
      t.vecs.emplace(std::make_pair(j, l), std::move(a));
    }
  return kind == 0 ? gbt_fan(t) : orbit_fan(t);
}

// Embed a fan of R^k into the first k coordinates of R^dim and shear it by a
// random integer map into the remaining coordinates. Fan combinatorics and
// primitivity survive: the map x -> (x, Lx) is injective and unimodular onto
// its image.
Fan shear_embed(Rng& rng, const Fan& base, int dim, bool with_shear) {
  const int k = base.dim;
  IntMatrix shear(dim - k, k);
  if (with_shear)
    for (int i = 0; i < shear.rows(); ++i)
      for (int j = 0; j < k; ++j) shear(i, j) = draw(rng, -3, 3);
  Fan out;
  out.dim = dim;
  for (const IntVec& u : base.rays) {
    IntVec v(static_cast<size_t>(dim), Int(0));
    for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = u[static_cast<size_t>(i)];
    for (int i = 0; i < shear.rows(); ++i) {
      Int acc = 0;
      for (int j = 0; j < k; ++j) acc += shear(i, j) * u[static_cast<size_t>(j)];
      v[static_cast<size_t>(k + i)] = acc;
    }
    out.rays.push_back(std::move(v));
  }
  out.max_cones = base.max_cones;
  return out;
}

Fan swap_blocks(const Fan& f, int front) {
  // Move the leading `front` coordinates to the back.
  Fan out;
  out.dim = f.dim;
  for (const IntVec& u : f.rays) {
    IntVec v;
    v.insert(v.end(), u.begin() + front, u.end());
    v.insert(v.end(), u.begin(), u.begin() + front);
    out.rays.push_back(std::move(v));
  }
  out.max_cones = f.max_cones;
  return out;
}

}  // namespace

int draw(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

GeneralizedBottTower random_generalized_tower(Rng& rng, int max_stages, int max_dim,
                                              int max_abs_entry) {
  GeneralizedBottTower t;
  const int m = draw(rng, 1, max_stages);
  for (int j = 0; j < m; ++j) t.dims.push_back(draw(rng, 1, max_dim));
  for (int j = 2; j <= m; ++j)
    for (int l = 1; l < j; ++l) {
      IntVec a(static_cast<size_t>(t.dims[j - 1]));
      for (Int& x : a) x = draw(rng, -max_abs_entry, max_abs_entry);
      t.vecs.emplace(std::make_pair(j, l), std::move(a));
    }
  return t;
}

FlagBottTower random_flag_tower(Rng& rng, int max_stages, int max_dim, int max_abs_entry) {
  FlagBottTower t;
  const int m = draw(rng, 1, max_stages);
  for (int j = 0; j < m; ++j) t.dims.push_back(draw(rng, 1, max_dim));
  for (int j = 2; j <= m; ++j)
    for (int l = 1; l < j; ++l) {
      IntMatrix a(t.dims[j - 1] + 1, t.dims[l - 1] + 1);
      for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) a(r, c) = draw(rng, -max_abs_entry, max_abs_entry);
      t.mats.emplace(std::make_pair(j, l), std::move(a));
    }
  return t;
}

JoinStarSample random_join_star_sample(Rng& rng) {
  const int d1 = draw(rng, 1, 4);
  const int d2 = draw(rng, 1, 5 - d1);
  const int dim = d1 + d2;

  JoinStarSample sample;
  sample.f1 = shear_embed(rng, random_complete_fan(rng, d1), dim, true);
  sample.f2 = swap_blocks(shear_embed(rng, random_complete_fan(rng, d2), dim, false), d2);

  const ConeRef& cone =
      sample.f1.max_cones[static_cast<size_t>(draw(rng, 0, static_cast<int>(sample.f1.max_cones.size()) - 1))];
  ConeRef tau = cone;
  const int size = draw(rng, 1, static_cast<int>(tau.size()));
  while (static_cast<int>(tau.size()) > size)
    tau.erase(tau.begin() + draw(rng, 0, static_cast<int>(tau.size()) - 1));
  std::sort(tau.begin(), tau.end());
  sample.tau = std::move(tau);
  return sample;
}

bool join_star_commutes(const JoinStarSample& sample) {
  const Fan lhs = join_fans(star_subdivide(sample.f1, sample.tau), sample.f2);
  const Fan rhs = star_subdivide(join_fans(sample.f1, sample.f2), sample.tau);
  return fans_equal(lhs, rhs);
}

}  // namespace flagbott
