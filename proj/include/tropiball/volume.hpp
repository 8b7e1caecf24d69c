#pragma once

// Monte-Carlo volume estimation by sampling the minimum enclosing ball,
// analytic volume bounds from the two extremal balls, and rounding of a
// tropical simplex via pseudo-vertex enumeration.

#include <cstdint>
#include <utility>
#include <vector>

#include "tropiball/balls.hpp"
#include "tropiball/core.hpp"

namespace tropiball {

struct VolumeEstimate {
    long long hits = 0;      // C
    long long samples = 0;   // I
    Scalar p = 0.0;          // C / I
    Scalar enclosing_radius = 0.0;
    Scalar enclosing_volume = 0.0;
    Scalar inscribed_radius = 0.0;
    Scalar estimate = 0.0;     // p * enclosing_volume
    Scalar lower_bound = 0.0;  // volume of the inscribed ball
    Scalar upper_bound = 0.0;  // volume of the enclosing ball
    Scalar std_error3 = 0.0;   // 3 binomial standard errors, scaled to the estimate
    std::uint64_t seed = 0;
    int burn_in = 0;
    int thinning = 1;
    bool direct = false;   // true when the i.i.d. ball sampler was used
    bool rounded = false;  // true when the enclosing ball came from rounding
    std::vector<std::uint64_t> shard_seeds;
};

struct VolumeOptions {
    int burn_in = 100;
    int thinning = 1;
    bool direct = false;  // exact i.i.d. sampling of the ball instead of Hit-and-Run
    int shards = 0;       // 0 = derived from the sample count
};

// Samples Vol(B_r(P)) * #{points in P} / I from the enclosing ball. Sampling
// is sharded into independent chains with derived seeds; the shard layout
// depends only on I, so results are identical for any thread count.
VolumeEstimate estimate_volume(const TropPolytope& P, long long I, std::uint64_t seed,
                               const VolumeOptions& opts = {});
VolumeEstimate estimate_volume_serial(const TropPolytope& P, long long I, std::uint64_t seed,
                                      const VolumeOptions& opts = {});

// (Vol(B_R(P)), Vol(B_r(P))) - the analytic volume sandwich.
std::pair<Scalar, Scalar> volume_bounds(const TropPolytope& P);

// Lower bound (R/r)^(e-1) on the expected hit rate of enclosing-ball sampling.
Scalar acceptance_rate_bound(Scalar R, Scalar r, int e);

struct PseudoVertexSet {
    std::vector<TropPoint> points;
};

// Classical vertices of the (e-1)-trunk: every feasible basic solution of the
// half-space system, found by exhaustive (e-1)-subset active-set search,
// deduplicated and sorted lexicographically.
PseudoVertexSet enumerate_pseudo_vertices(const TropPolytope& simplex);
PseudoVertexSet enumerate_pseudo_vertices_serial(const TropPolytope& simplex);

// Minimum enclosing ball of the pseudo-vertices: B_k(Tr_{e-1}), with k no
// larger than the enclosing radius of the simplex itself.
TropBall round_polytope(const TropPolytope& simplex);

// Volume of the trunk of a simplex, sampled from the rounded ball B_k with
// membership tested against the half-space system.
VolumeEstimate estimate_volume_rounded(const TropPolytope& simplex, long long I,
                                       std::uint64_t seed, const VolumeOptions& opts = {});

} // namespace tropiball
