#pragma once

// The tropical simplicial complex of a polytope: enumerating its simplices,
// identifying a non-overlapping covering subset with mixture weights from
// enclosing-ball samples, and uniform sampling of the (e-1)-trunk.

#include <cstdint>
#include <vector>

#include "tropiball/core.hpp"

namespace tropiball {

struct SimplexInfo {
    std::vector<int> indices;  // ascending vertex indices into P
    bool degenerate;
};

// All C(|V|, e) vertex-index subsets in lexicographic order, each tagged by
// tropical-determinant degeneracy.
std::vector<SimplexInfo> enumerate_simplices(const TropPolytope& P);

struct SimplexCover {
    std::vector<std::vector<int>> simplices;  // selected subsets, selection order
    std::vector<Scalar> weights;              // nonnegative, sums to 1
    long long sample_size_used = 0;           // |X_P|
    std::uint64_t seed = 0;
};

struct CoverOptions {
    int burn_in = 100;
    int thinning = 1;
    Scalar membership_tol = kDefaultTol;
};

// Samples I points from the enclosing ball, keeps those inside P, assigns each
// to the lexicographically first containing simplex, then greedily selects
// simplices by descending exclusive count until every kept point is covered.
// Weights are the exclusive counts of the selected simplices, renormalized.
SimplexCover identify_cover(const TropPolytope& P, long long I, std::uint64_t seed,
                            const CoverOptions& opts = {});
SimplexCover identify_cover_serial(const TropPolytope& P, long long I, std::uint64_t seed,
                                   const CoverOptions& opts = {});

// Draws J points whose simplex is chosen from Categorical(weights); each
// selected simplex runs its own chain started at its inscribed-ball center.
std::vector<TropPoint> uniform_sample(const SimplexCover& cover, const TropPolytope& P,
                                      long long J, std::uint64_t seed,
                                      const CoverOptions& opts = {});

} // namespace tropiball
