#pragma once

// Kleene-star weight matrix of a tropical simplex, the classical half-space
// system it induces, and min-tropical hyperplane arrangements with a
// point-to-hyperplane distance.

#include <vector>

#include "tropiball/core.hpp"

namespace tropiball {

// Weight matrix m* of a tropical simplex: zero diagonal, no positive cycles,
// transitively closed. `sigma` is the column-to-row permutation picked by the
// tropical determinant of the vertex matrix.
struct KleeneStar {
    TropMatrix m;
    std::vector<int> sigma;
    int e() const { return m.rows(); }
};

// Column i of the vertex matrix moves to position sigma[i], putting the
// determinant-attaining entries on the diagonal; m[j][k] = A'[j][k] - A'[k][k].
KleeneStar kleene_star(const std::vector<TropPoint>& V);

// One half-space y_j - y_i <= bound (0-based i, j; bound = -m[i][j]).
struct HRepConstraint {
    int i;
    int j;
    Scalar bound;
};

// The e(e-1) half-spaces plus the gauge y_1 = 0. For a simplex that is not a
// polytrope this system describes only the (e-1)-trunk; redundant rows are
// kept as-is.
struct HRep {
    int e = 0;
    std::vector<HRepConstraint> constraints;

    Scalar max_violation(const TropPoint& y) const;
    bool satisfied(const TropPoint& y, Scalar tol = kDefaultTol) const {
        return max_violation(y) <= tol;
    }
};

HRep h_rep(const KleeneStar& ks);

// Min-tropical hyperplane with normal vector omega (apex at -omega).
struct MinHyperplane {
    TropPoint omega;
};

// d(x, H) after shifting by omega: second-smallest minus smallest coordinate
// of x + omega. Zero exactly on the hyperplane.
Scalar hyperplane_distance(const TropPoint& x, const MinHyperplane& H);

// One hyperplane per vertex, apex at the vertex (omega = -v).
std::vector<MinHyperplane> arrangement(const std::vector<TropPoint>& V);

} // namespace tropiball
