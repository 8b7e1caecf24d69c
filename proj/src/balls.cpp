#include "tropiball/balls.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "tropiball/parallel.hpp"

namespace tropiball {

namespace {

constexpr Scalar kTrunkTol = 1e-12;

std::vector<std::vector<int>> index_combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

// Solves the inscribed-ball LP for one simplex; empty when the trunk has no
// interior. Center is not canonicalized here.
std::optional<std::pair<Scalar, std::vector<Scalar>>> inscribed_raw(const TropPolytope& simplex) {
    const KleeneStar ks = kleene_star(simplex.vertices());
    const HRep rep = h_rep(ks);
    LpProblem lp = inscribed_ball_lp(rep);
    LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal || sol.value <= kTrunkTol) return std::nullopt;
    return std::make_pair(sol.value, sol.z);
}

TropBall canonical_inscribed(const TropPolytope& simplex) {
    const KleeneStar ks = kleene_star(simplex.vertices());
    const HRep rep = h_rep(ks);
    const int e = rep.e;
    LpProblem lp = inscribed_ball_lp(rep);
    LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal || sol.value <= kTrunkTol) {
        throw NoTrunk("simplex has an empty (e-1)-trunk");
    }
    const Scalar radius = sol.value;

    // Lexicographic minimization over the optimal face, one coordinate at a
    // time, keeps the returned center independent of pivot order.
    LpProblem sub = lp;
    {
        LpRow fix;
        fix.a.assign(static_cast<std::size_t>(e), 0.0);
        fix.a[static_cast<std::size_t>(e - 1)] = 1.0;
        fix.b = radius;
        sub.equal.push_back(fix);
    }
    std::vector<Scalar> center(static_cast<std::size_t>(e), 0.0); // coords 1..e-1 used
    for (int k = 0; k < e - 1; ++k) {
        sub.objective.assign(static_cast<std::size_t>(e), 0.0);
        sub.objective[static_cast<std::size_t>(k)] = -1.0;
        LpSolution s = lp_solve(sub);
        if (s.status != LpStatus::Optimal) throw NoTrunk("inscribed-ball face exploration failed");
        const Scalar xk = s.z[static_cast<std::size_t>(k)];
        center[static_cast<std::size_t>(k + 1)] = xk;
        LpRow fix;
        fix.a.assign(static_cast<std::size_t>(e), 0.0);
        fix.a[static_cast<std::size_t>(k)] = 1.0;
        fix.b = xk;
        sub.equal.push_back(fix);
    }
    return TropBall{TropPoint::from_normalized(std::move(center)), radius};
}

} // namespace

LpProblem inscribed_ball_lp(const HRep& rep) {
    const int e = rep.e;
    // Variables: x_2..x_e (indices 0..e-2), then R (index e-1).
    LpProblem lp;
    lp.n = e;
    lp.objective.assign(static_cast<std::size_t>(e), 0.0);
    lp.objective[static_cast<std::size_t>(e - 1)] = 1.0;
    for (const HRepConstraint& c : rep.constraints) {
        LpRow row;
        row.a.assign(static_cast<std::size_t>(e), 0.0);
        if (c.j > 0) row.a[static_cast<std::size_t>(c.j - 1)] += 1.0;
        if (c.i > 0) row.a[static_cast<std::size_t>(c.i - 1)] -= 1.0;
        row.a[static_cast<std::size_t>(e - 1)] += 1.0;
        row.b = c.bound;
        lp.less_equal.push_back(std::move(row));
    }
    return lp;
}

TropPolytope ball_generators(const TropBall& b, int e) {
    if (b.center.dim() != e) throw DimensionError("ball_generators: dimension mismatch");
    std::vector<TropPoint> gens;
    gens.reserve(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
        std::vector<Scalar> g = b.center.coords();
        g[static_cast<std::size_t>(i)] += b.radius;
        gens.push_back(normalize(g));
    }
    return TropPolytope(std::move(gens));
}

TropBall max_inscribed_simplex(const TropPolytope& simplex) {
    return canonical_inscribed(simplex);
}

namespace {

TropBall max_inscribed_impl(const TropPolytope& P, bool parallel) {
    const int e = P.dim();
    const int s = P.size();
    if (s < e) throw TooFewVertices("need at least e vertices for an (e-1)-trunk");
    if (s == e) return max_inscribed_simplex(P);

    const std::vector<std::vector<int>> combos = index_combinations(s, e);
    const int nc = static_cast<int>(combos.size());
    std::vector<Scalar> radius(combos.size(), kNegInf);

    auto eval = [&](int ci) {
        std::vector<TropPoint> sub;
        sub.reserve(static_cast<std::size_t>(e));
        for (int idx : combos[static_cast<std::size_t>(ci)]) sub.push_back(P.vertex(idx));
        try {
            const TropPolytope sp{std::move(sub)};
            if (sp.size() != e) return; // duplicate vertices collapsed
            if (auto r = inscribed_raw(sp)) radius[static_cast<std::size_t>(ci)] = r->first;
        } catch (const DegenerateSimplex&) {
        }
    };

    if (parallel) {
#ifdef TROPIBALL_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(max_worker_threads())
        for (int ci = 0; ci < nc; ++ci) eval(ci);
#else
        for (int ci = 0; ci < nc; ++ci) eval(ci);
#endif
    } else {
        for (int ci = 0; ci < nc; ++ci) eval(ci);
    }

    int best = -1;
    for (int ci = 0; ci < nc; ++ci) {
        if (radius[static_cast<std::size_t>(ci)] == kNegInf) continue;
        if (best < 0 || radius[static_cast<std::size_t>(ci)] > radius[static_cast<std::size_t>(best)]) {
            best = ci;
        }
    }
    if (best < 0) throw NoTrunk("no simplex of the complex has an (e-1)-trunk");

    std::vector<TropPoint> sub;
    for (int idx : combos[static_cast<std::size_t>(best)]) sub.push_back(P.vertex(idx));
    return max_inscribed_simplex(TropPolytope(std::move(sub)));
}

} // namespace

TropBall max_inscribed(const TropPolytope& P) { return max_inscribed_impl(P, true); }
TropBall max_inscribed_serial(const TropPolytope& P) { return max_inscribed_impl(P, false); }

TropBall min_enclosing(const TropPolytope& P) {
    const int e = P.dim();
    const int s = P.size();
    // Variables: y_2..y_e, then r. Minimize r subject to
    // v_ij - y_j - v_ik + y_k <= r for every vertex i and ordered pair j != k.
    LpProblem lp;
    lp.n = e;
    lp.objective.assign(static_cast<std::size_t>(e), 0.0);
    lp.objective[static_cast<std::size_t>(e - 1)] = -1.0;
    for (int i = 0; i < s; ++i) {
        const TropPoint& v = P.vertex(i);
        for (int j = 0; j < e; ++j) {
            for (int k = 0; k < e; ++k) {
                if (j == k) continue;
                LpRow row;
                row.a.assign(static_cast<std::size_t>(e), 0.0);
                if (j > 0) row.a[static_cast<std::size_t>(j - 1)] -= 1.0;
                if (k > 0) row.a[static_cast<std::size_t>(k - 1)] += 1.0;
                row.a[static_cast<std::size_t>(e - 1)] -= 1.0;
                row.b = v[k] - v[j];
                lp.less_equal.push_back(std::move(row));
            }
        }
    }
    {
        LpRow rpos;
        rpos.a.assign(static_cast<std::size_t>(e), 0.0);
        rpos.a[static_cast<std::size_t>(e - 1)] = -1.0;
        rpos.b = 0.0;
        lp.less_equal.push_back(std::move(rpos));
    }
    LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal) {
        throw TropicalError("LpError", "enclosing-ball LP did not solve");
    }
    std::vector<Scalar> center(static_cast<std::size_t>(e), 0.0);
    for (int k = 1; k < e; ++k) center[static_cast<std::size_t>(k)] = sol.z[static_cast<std::size_t>(k - 1)];
    return TropBall{TropPoint::from_normalized(std::move(center)), sol.z[static_cast<std::size_t>(e - 1)]};
}

Scalar min_enclosing_lower_bound(const TropPolytope& P) {
    Scalar best = 0.0; // a single (possibly repeated) vertex has radius 0
    for (int i = 0; i < P.size(); ++i) {
        for (int j = i + 1; j < P.size(); ++j) {
            best = std::max(best, trop_dist(P.vertex(i), P.vertex(j)));
        }
    }
    return best / 2.0;
}

Scalar ball_volume(Scalar radius, int e) {
    return static_cast<Scalar>(e) * std::pow(radius, e - 1);
}

} // namespace tropiball
