#include "tropiball/hull.hpp"

#include <algorithm>
#include <limits>

namespace tropiball {

KleeneStar kleene_star(const std::vector<TropPoint>& V) {
    if (V.empty()) throw NotASimplex("empty vertex set");
    const int e = V[0].dim();
    if (static_cast<int>(V.size()) != e) {
        throw NotASimplex("a tropical simplex in e coordinates needs exactly e vertices");
    }

    TropMatrix A = TropMatrix::from_columns(V);
    TdetResult det = trop_det(A);
    if (det.singular) {
        throw DegenerateSimplex("vertex matrix is tropically singular");
    }

    // A'[.,sigma[i]] = A[.,i]; subtracting the diagonal from each column
    // yields the Kleene star.
    TropMatrix Ap(e, e, 0.0);
    for (int i = 0; i < e; ++i) {
        const int k = det.sigma[static_cast<std::size_t>(i)];
        for (int j = 0; j < e; ++j) Ap(j, k) = A(j, i);
    }
    TropMatrix m(e, e, 0.0);
    for (int k = 0; k < e; ++k) {
        const Scalar d = Ap(k, k);
        for (int j = 0; j < e; ++j) m(j, k) = Ap(j, k) - d;
    }
    return KleeneStar{std::move(m), std::move(det.sigma)};
}

HRep h_rep(const KleeneStar& ks) {
    const int e = ks.e();
    HRep rep;
    rep.e = e;
    rep.constraints.reserve(static_cast<std::size_t>(e) * static_cast<std::size_t>(e - 1));
    for (int i = 0; i < e; ++i) {
        for (int j = 0; j < e; ++j) {
            if (i == j) continue;
            const Scalar bound = ks.m(i, j) == 0.0 ? 0.0 : -ks.m(i, j);
            rep.constraints.push_back(HRepConstraint{i, j, bound});
        }
    }
    return rep;
}

Scalar HRep::max_violation(const TropPoint& y) const {
    Scalar worst = -std::numeric_limits<Scalar>::infinity();
    for (const HRepConstraint& c : constraints) {
        worst = std::max(worst, y[c.j] - y[c.i] - c.bound);
    }
    return worst;
}

Scalar hyperplane_distance(const TropPoint& x, const MinHyperplane& H) {
    if (x.dim() != H.omega.dim()) throw DimensionError("hyperplane_distance: dimension mismatch");
    Scalar lo = std::numeric_limits<Scalar>::infinity();
    Scalar second = std::numeric_limits<Scalar>::infinity();
    for (int i = 0; i < x.dim(); ++i) {
        const Scalar z = x[i] + H.omega[i];
        if (z < lo) {
            second = lo;
            lo = z;
        } else if (z < second) {
            second = z;
        }
    }
    return second - lo;
}

std::vector<MinHyperplane> arrangement(const std::vector<TropPoint>& V) {
    std::vector<MinHyperplane> out;
    out.reserve(V.size());
    for (const TropPoint& v : V) {
        std::vector<Scalar> w(static_cast<std::size_t>(v.dim()));
        for (int i = 0; i < v.dim(); ++i) w[static_cast<std::size_t>(i)] = -v[i];
        out.push_back(MinHyperplane{normalize(w)});
    }
    return out;
}

} // namespace tropiball
