#pragma once

// Tropical balls: generating vertices, maximum inscribed balls of simplices
// and general polytopes (via the simplicial complex), minimum enclosing
// balls, and the closed-form ball volume.

#include <cstdint>
#include <vector>

#include "tropiball/core.hpp"
#include "tropiball/hull.hpp"
#include "tropiball/lp.hpp"

namespace tropiball {

struct TropBall {
    TropPoint center;
    Scalar radius;
};

// The e generating vertices center + radius*e_i (normalized); their tropical
// hull is exactly the ball. Radius 0 collapses them to the center.
TropPolytope ball_generators(const TropBall& b, int e);

// Largest ball inside the (e-1)-trunk of a simplex, by LP over the half-space
// system. The optimal center need not be unique; the lexicographically
// smallest center on the optimal face is returned so output is reproducible.
// Throws NoTrunk when no ball of positive radius fits.
TropBall max_inscribed_simplex(const TropPolytope& simplex);

// Largest inscribed ball over all C(|V|, e) simplices of the polytope's
// simplicial complex; degenerate combinations are skipped, radius ties break
// toward the lexicographically smallest index combination.
TropBall max_inscribed(const TropPolytope& P);
TropBall max_inscribed_serial(const TropPolytope& P);

// Smallest ball containing every vertex (hence the polytope), by LP.
TropBall min_enclosing(const TropPolytope& P);

// max_{i,j} d(v_i, v_j) / 2, a lower bound on the enclosing radius.
Scalar min_enclosing_lower_bound(const TropPolytope& P);

// Euclidean volume of a radius-l ball in the (e-1)-dimensional torus:
// e * l^(e-1).
Scalar ball_volume(Scalar radius, int e);

// LP rows (over variables x_2..x_e, R) of the inflated half-space system.
LpProblem inscribed_ball_lp(const HRep& rep);

} // namespace tropiball
