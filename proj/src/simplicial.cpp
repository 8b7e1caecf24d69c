#include "tropiball/simplicial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "tropiball/balls.hpp"
#include "tropiball/parallel.hpp"
#include "tropiball/sampler.hpp"

namespace tropiball {

std::vector<SimplexInfo> enumerate_simplices(const TropPolytope& P) {
    const int e = P.dim();
    const int s = P.size();
    if (s < e) throw TooFewVertices("the simplicial complex needs at least e vertices");

    std::vector<SimplexInfo> out;
    std::vector<int> cur(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::vector<TropPoint> sub;
        sub.reserve(static_cast<std::size_t>(e));
        for (int idx : cur) sub.push_back(P.vertex(idx));
        const TdetResult det = trop_det(TropMatrix::from_columns(sub));
        out.push_back(SimplexInfo{cur, det.singular});

        int i = e - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == s - e + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < e; ++j) {
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

namespace {

SimplexCover identify_cover_impl(const TropPolytope& P, long long I, std::uint64_t seed,
                                 const CoverOptions& opts, bool parallel) {
    if (I < 1) throw TropicalError("InvalidArgument", "need at least one sample");
    const int e = P.dim();

    // Candidate simplices (non-degenerate only) and their polytopes.
    std::vector<SimplexInfo> all = enumerate_simplices(P);
    std::vector<std::vector<int>> cand;
    std::vector<TropPolytope> candPoly;
    for (const SimplexInfo& si : all) {
        if (si.degenerate) continue;
        std::vector<TropPoint> sub;
        for (int idx : si.indices) sub.push_back(P.vertex(idx));
        cand.push_back(si.indices);
        candPoly.emplace_back(std::move(sub));
    }
    if (cand.empty()) throw NoTrunk("every simplex of the complex is degenerate");

    // Sample the enclosing ball with a single chain.
    const TropBall ball = min_enclosing(P);
    const TropPolytope ballSimplex = ball_generators(ball, e);
    HarChain chain(ballSimplex, ball.center, seed);
    for (int b = 0; b < opts.burn_in; ++b) chain.step();
    std::vector<TropPoint> X;
    X.reserve(static_cast<std::size_t>(I));
    for (long long k = 0; k < I; ++k) {
        TropPoint x = chain.step();
        for (int t = 1; t < opts.thinning; ++t) x = chain.step();
        X.push_back(std::move(x));
    }

    // Membership matrix over the kept points (pure per-point work).
    const int npts = static_cast<int>(X.size());
    std::vector<char> inP(static_cast<std::size_t>(npts), 0);
    std::vector<std::vector<char>> inS(static_cast<std::size_t>(npts));

    auto classify = [&](int k) {
        const TropPoint& x = X[static_cast<std::size_t>(k)];
        if (!contains(P, x, opts.membership_tol)) return;
        inP[static_cast<std::size_t>(k)] = 1;
        auto& row = inS[static_cast<std::size_t>(k)];
        row.assign(cand.size(), 0);
        for (std::size_t c = 0; c < cand.size(); ++c) {
            if (contains(candPoly[c], x, opts.membership_tol)) row[c] = 1;
        }
    };

    if (parallel) {
#ifdef TROPIBALL_HAVE_OPENMP
#pragma omp parallel for schedule(static) num_threads(max_worker_threads())
        for (int k = 0; k < npts; ++k) classify(k);
#else
        for (int k = 0; k < npts; ++k) classify(k);
#endif
    } else {
        for (int k = 0; k < npts; ++k) classify(k);
    }

    // Exclusive assignment: lexicographically first containing simplex, or the
    // closest one when tolerance leaves a point unclaimed.
    std::vector<int> assigned(static_cast<std::size_t>(npts), -1);
    std::vector<long long> exclusive(cand.size(), 0);
    long long kept = 0;
    for (int k = 0; k < npts; ++k) {
        if (!inP[static_cast<std::size_t>(k)]) continue;
        ++kept;
        int a = -1;
        for (std::size_t c = 0; c < cand.size(); ++c) {
            if (inS[static_cast<std::size_t>(k)][c]) {
                a = static_cast<int>(c);
                break;
            }
        }
        if (a < 0) {
            Scalar best = std::numeric_limits<Scalar>::infinity();
            for (std::size_t c = 0; c < cand.size(); ++c) {
                const Scalar d =
                    trop_dist(X[static_cast<std::size_t>(k)],
                              project(candPoly[c], X[static_cast<std::size_t>(k)]));
                if (d < best) {
                    best = d;
                    a = static_cast<int>(c);
                }
            }
            inS[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)] = 1;
        }
        assigned[static_cast<std::size_t>(k)] = a;
        ++exclusive[static_cast<std::size_t>(a)];
    }
    if (kept == 0) throw InsufficientSamples("no sampled point landed inside the polytope");

    // Greedy cover by descending exclusive count (ties: smaller index).
    std::vector<std::size_t> order(cand.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (exclusive[a] != exclusive[b]) return exclusive[a] > exclusive[b];
        return a < b;
    });

    std::vector<char> covered(static_cast<std::size_t>(npts), 0);
    long long uncovered = kept;
    SimplexCover cover;
    cover.seed = seed;
    cover.sample_size_used = kept;
    std::vector<std::size_t> selected;
    for (std::size_t c : order) {
        if (uncovered == 0) break;
        long long gain = 0;
        for (int k = 0; k < npts; ++k) {
            if (!inP[static_cast<std::size_t>(k)] || covered[static_cast<std::size_t>(k)]) continue;
            if (inS[static_cast<std::size_t>(k)][c]) ++gain;
        }
        if (gain == 0) continue;
        selected.push_back(c);
        for (int k = 0; k < npts; ++k) {
            if (!inP[static_cast<std::size_t>(k)] || covered[static_cast<std::size_t>(k)]) continue;
            if (inS[static_cast<std::size_t>(k)][c]) {
                covered[static_cast<std::size_t>(k)] = 1;
                --uncovered;
            }
        }
    }

    Scalar total = 0.0;
    for (std::size_t c : selected) total += static_cast<Scalar>(exclusive[c]);
    for (std::size_t c : selected) {
        cover.simplices.push_back(cand[c]);
        cover.weights.push_back(total > 0.0 ? static_cast<Scalar>(exclusive[c]) / total : 0.0);
    }
    return cover;
}

} // namespace

SimplexCover identify_cover(const TropPolytope& P, long long I, std::uint64_t seed,
                            const CoverOptions& opts) {
    return identify_cover_impl(P, I, seed, opts, true);
}

SimplexCover identify_cover_serial(const TropPolytope& P, long long I, std::uint64_t seed,
                                   const CoverOptions& opts) {
    return identify_cover_impl(P, I, seed, opts, false);
}

std::vector<TropPoint> uniform_sample(const SimplexCover& cover, const TropPolytope& P,
                                      long long J, std::uint64_t seed, const CoverOptions& opts) {
    if (J < 1) throw TropicalError("InvalidArgument", "need at least one draw");
    if (cover.simplices.empty() || cover.simplices.size() != cover.weights.size()) {
        throw TropicalError("InvalidArgument", "malformed simplex cover");
    }
    for (const auto& s : cover.simplices) {
        if (static_cast<int>(s.size()) != P.dim()) {
            throw TropicalError("InvalidArgument", "cover simplex arity does not match the polytope");
        }
        for (int idx : s) {
            if (idx < 0 || idx >= P.size()) {
                throw TropicalError("InvalidArgument", "cover references a vertex outside the polytope");
            }
        }
    }

    std::vector<Scalar> cdf(cover.weights.size(), 0.0);
    Scalar acc = 0.0;
    for (std::size_t i = 0; i < cover.weights.size(); ++i) {
        acc += cover.weights[i];
        cdf[i] = acc;
    }

    Rng master(split_seed(seed, 0));
    std::vector<std::optional<HarChain>> chains(cover.simplices.size());

    std::vector<TropPoint> out;
    out.reserve(static_cast<std::size_t>(J));
    for (long long j = 0; j < J; ++j) {
        const Scalar u = master.uniform01() * acc;
        std::size_t pick = 0;
        while (pick + 1 < cdf.size() && cdf[pick] <= u) ++pick;

        auto& chain = chains[pick];
        if (!chain) {
            std::vector<TropPoint> sub;
            for (int idx : cover.simplices[pick]) sub.push_back(P.vertex(idx));
            TropPolytope sp(std::move(sub));
            const TropBall inscribed = max_inscribed_simplex(sp);
            chain.emplace(std::move(sp), inscribed.center,
                          split_seed(seed, 1 + static_cast<std::uint64_t>(pick)));
            for (int b = 0; b < opts.burn_in; ++b) chain->step();
        }
        TropPoint x = chain->step();
        for (int t = 1; t < opts.thinning; ++t) x = chain->step();
        out.push_back(std::move(x));
    }
    return out;
}

} // namespace tropiball
