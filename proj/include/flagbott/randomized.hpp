#pragma once

#include <random>

#include "flagbott/fan.hpp"
#include "flagbott/tower.hpp"

namespace flagbott {

// Deterministic small-case generators for the randomized verification
// batteries. Draws go through the raw engine so that a seed pins the exact
// sample sequence.

using Rng = std::mt19937_64;

int draw(Rng& rng, int lo, int hi);  // uniform-ish in [lo, hi]

GeneralizedBottTower random_generalized_tower(Rng& rng, int max_stages, int max_dim,
                                              int max_abs_entry);

FlagBottTower random_flag_tower(Rng& rng, int max_stages, int max_dim, int max_abs_entry);

/// A random instance of the join/star commutation setup: two fans with
/// disjoint rays living in complementary coordinate blocks (the first one
/// sheared into general position) and a cone tau of the first fan.
struct JoinStarSample {
  Fan f1;
  Fan f2;
  ConeRef tau;
};

JoinStarSample random_join_star_sample(Rng& rng);

/// Exact check of star_subdivide(join(f1,f2), tau) == join(star_subdivide(f1,tau), f2).
bool join_star_commutes(const JoinStarSample& sample);

}  // namespace flagbott
