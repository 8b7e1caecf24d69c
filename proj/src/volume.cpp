#include "tropiball/volume.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "tropiball/parallel.hpp"
#include "tropiball/sampler.hpp"

namespace tropiball {

namespace {

constexpr Scalar kFeasTol = 1e-8;

int auto_shards(long long I) {
    const long long s = I / 10000;
    return static_cast<int>(std::clamp<long long>(s, 1, 16));
}

// One sampling shard: burn_in steps, then n counted samples (each `thinning`
// steps apart), returning the number accepted by `member`.
long long run_shard(const TropPolytope& ballSimplex, const TropPoint& start,
                    std::uint64_t seed, long long n, const VolumeOptions& opts, int e,
                    const TropBall& ball, const std::function<bool(const TropPoint&)>& member) {
    long long hits = 0;
    if (opts.direct) {
        Rng rng(seed);
        const Scalar l = ball.radius;
        std::vector<Scalar> w(static_cast<std::size_t>(e));
        for (long long k = 0; k < n; ++k) {
            // The ball is a union of e congruent hypercubes indexed by which
            // coordinate of y - center attains the minimum.
            const int lowIdx = rng.uniform_index(e);
            for (int i = 0; i < e; ++i) {
                w[static_cast<std::size_t>(i)] =
                    ball.center[i] + (i == lowIdx ? 0.0 : l * rng.uniform01());
            }
            if (member(normalize(w))) ++hits;
        }
        return hits;
    }
    HarChain chain(ballSimplex, start, seed);
    for (int b = 0; b < opts.burn_in; ++b) chain.step();
    for (long long k = 0; k < n; ++k) {
        TropPoint x = chain.step();
        for (int t = 1; t < opts.thinning; ++t) x = chain.step();
        if (member(x)) ++hits;
    }
    return hits;
}

VolumeEstimate estimate_impl(const TropPolytope& domain, const TropBall& ball,
                             const std::function<bool(const TropPoint&)>& member,
                             Scalar inscribedRadius, long long I, std::uint64_t seed,
                             const VolumeOptions& opts, bool parallel, bool rounded) {
    const int e = domain.dim();
    VolumeEstimate est;
    est.samples = I;
    est.seed = seed;
    est.burn_in = opts.burn_in;
    est.thinning = opts.thinning;
    est.direct = opts.direct;
    est.rounded = rounded;
    est.enclosing_radius = ball.radius;
    est.enclosing_volume = ball_volume(ball.radius, e);
    est.inscribed_radius = inscribedRadius;
    est.lower_bound = ball_volume(inscribedRadius, e);
    est.upper_bound = est.enclosing_volume;

    if (ball.radius <= 0.0) {
        est.hits = I;
        est.p = 1.0;
        est.estimate = 0.0;
        return est;
    }

    const TropPolytope ballSimplex = ball_generators(ball, e);
    const TropPoint start = ball.center;

    const int shards = opts.shards > 0 ? opts.shards : auto_shards(I);
    std::vector<long long> counts(static_cast<std::size_t>(shards), 0);
    std::vector<long long> sizes(static_cast<std::size_t>(shards), I / shards);
    for (long long r = 0; r < I % shards; ++r) ++sizes[static_cast<std::size_t>(r)];
    est.shard_seeds.resize(static_cast<std::size_t>(shards));
    for (int k = 0; k < shards; ++k) {
        est.shard_seeds[static_cast<std::size_t>(k)] = split_seed(seed, static_cast<std::uint64_t>(k));
    }

    if (parallel) {
#ifdef TROPIBALL_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(max_worker_threads())
        for (int k = 0; k < shards; ++k) {
            counts[static_cast<std::size_t>(k)] =
                run_shard(ballSimplex, start, est.shard_seeds[static_cast<std::size_t>(k)],
                          sizes[static_cast<std::size_t>(k)], opts, e, ball, member);
        }
#else
        for (int k = 0; k < shards; ++k) {
            counts[static_cast<std::size_t>(k)] =
                run_shard(ballSimplex, start, est.shard_seeds[static_cast<std::size_t>(k)],
                          sizes[static_cast<std::size_t>(k)], opts, e, ball, member);
        }
#endif
    } else {
        for (int k = 0; k < shards; ++k) {
            counts[static_cast<std::size_t>(k)] =
                run_shard(ballSimplex, start, est.shard_seeds[static_cast<std::size_t>(k)],
                          sizes[static_cast<std::size_t>(k)], opts, e, ball, member);
        }
    }

    for (long long c : counts) est.hits += c;
    est.p = static_cast<Scalar>(est.hits) / static_cast<Scalar>(I);
    est.estimate = est.p * est.enclosing_volume;
    est.std_error3 =
        3.0 * std::sqrt(est.p * (1.0 - est.p) / static_cast<Scalar>(I)) * est.enclosing_volume;
    return est;
}

VolumeEstimate estimate_volume_impl(const TropPolytope& P, long long I, std::uint64_t seed,
                                    const VolumeOptions& opts, bool parallel) {
    if (I < 1) throw TropicalError("InvalidArgument", "need at least one sample");
    const TropBall ball = min_enclosing(P);
    const TropBall inscribed = max_inscribed(P);
    auto member = [&P](const TropPoint& x) { return contains(P, x); };
    return estimate_impl(P, ball, member, inscribed.radius, I, seed, opts, parallel, false);
}

} // namespace

VolumeEstimate estimate_volume(const TropPolytope& P, long long I, std::uint64_t seed,
                               const VolumeOptions& opts) {
    return estimate_volume_impl(P, I, seed, opts, true);
}

VolumeEstimate estimate_volume_serial(const TropPolytope& P, long long I, std::uint64_t seed,
                                      const VolumeOptions& opts) {
    return estimate_volume_impl(P, I, seed, opts, false);
}

std::pair<Scalar, Scalar> volume_bounds(const TropPolytope& P) {
    const TropBall inscribed = max_inscribed(P);
    const TropBall enclosing = min_enclosing(P);
    return {ball_volume(inscribed.radius, P.dim()), ball_volume(enclosing.radius, P.dim())};
}

Scalar acceptance_rate_bound(Scalar R, Scalar r, int e) {
    if (r <= 0.0) throw DegenerateBall("enclosing radius must be positive");
    return std::pow(R / r, e - 1);
}

namespace {

// Gaussian elimination with partial pivoting; nullopt for singular systems.
std::optional<std::vector<Scalar>> solve_dense(std::vector<std::vector<Scalar>> M,
                                               std::vector<Scalar> rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r) {
            if (std::fabs(M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) >
                std::fabs(M[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)])) {
                piv = r;
            }
        }
        if (std::fabs(M[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c)]) < 1e-10) {
            return std::nullopt;
        }
        std::swap(M[static_cast<std::size_t>(c)], M[static_cast<std::size_t>(piv)]);
        std::swap(rhs[static_cast<std::size_t>(c)], rhs[static_cast<std::size_t>(piv)]);
        for (int r = c + 1; r < n; ++r) {
            const Scalar f = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] /
                             M[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
            if (f == 0.0) continue;
            for (int k = c; k < n; ++k) {
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -=
                    f * M[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
            }
            rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(c)];
        }
    }
    std::vector<Scalar> x(static_cast<std::size_t>(n), 0.0);
    for (int r = n - 1; r >= 0; --r) {
        Scalar s = rhs[static_cast<std::size_t>(r)];
        for (int k = r + 1; k < n; ++k) {
            s -= M[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
        }
        x[static_cast<std::size_t>(r)] = s / M[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
    }
    return x;
}

PseudoVertexSet pseudo_vertices_impl(const TropPolytope& simplex, bool parallel) {
    const KleeneStar ks = kleene_star(simplex.vertices());
    const HRep rep = h_rep(ks);
    const int e = rep.e;
    const int nv = e - 1; // variables y_2..y_e
    const int nc = static_cast<int>(rep.constraints.size());

    // Dense rows of the half-space system over y_2..y_e.
    std::vector<std::vector<Scalar>> A(static_cast<std::size_t>(nc),
                                       std::vector<Scalar>(static_cast<std::size_t>(nv), 0.0));
    std::vector<Scalar> b(static_cast<std::size_t>(nc), 0.0);
    for (int r = 0; r < nc; ++r) {
        const HRepConstraint& c = rep.constraints[static_cast<std::size_t>(r)];
        if (c.j > 0) A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c.j - 1)] += 1.0;
        if (c.i > 0) A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c.i - 1)] -= 1.0;
        b[static_cast<std::size_t>(r)] = c.bound;
    }

    std::vector<std::vector<int>> combos;
    {
        std::vector<int> cur(static_cast<std::size_t>(nv));
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == nv) {
                combos.push_back(cur);
                return;
            }
            for (int i = start; i < nc; ++i) {
                cur[static_cast<std::size_t>(depth)] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
    }

    const int ncomb = static_cast<int>(combos.size());
    std::vector<std::optional<std::vector<Scalar>>> found(static_cast<std::size_t>(ncomb));

    auto eval = [&](int ci) {
        std::vector<std::vector<Scalar>> M;
        std::vector<Scalar> rhs;
        M.reserve(static_cast<std::size_t>(nv));
        for (int r : combos[static_cast<std::size_t>(ci)]) {
            M.push_back(A[static_cast<std::size_t>(r)]);
            rhs.push_back(b[static_cast<std::size_t>(r)]);
        }
        auto y = solve_dense(std::move(M), std::move(rhs));
        if (!y) return;
        for (int r = 0; r < nc; ++r) {
            Scalar lhs = 0.0;
            for (int k = 0; k < nv; ++k) {
                lhs += A[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] *
                       (*y)[static_cast<std::size_t>(k)];
            }
            if (lhs > b[static_cast<std::size_t>(r)] + kFeasTol) return;
        }
        found[static_cast<std::size_t>(ci)] = std::move(*y);
    };

    if (parallel) {
#ifdef TROPIBALL_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(max_worker_threads())
        for (int ci = 0; ci < ncomb; ++ci) eval(ci);
#else
        for (int ci = 0; ci < ncomb; ++ci) eval(ci);
#endif
    } else {
        for (int ci = 0; ci < ncomb; ++ci) eval(ci);
    }

    std::vector<std::vector<Scalar>> uniq;
    for (const auto& cand : found) {
        if (!cand) continue;
        bool dup = false;
        for (const auto& u : uniq) {
            Scalar diff = 0.0;
            for (int k = 0; k < nv; ++k) {
                diff = std::max(diff, std::fabs(u[static_cast<std::size_t>(k)] -
                                                (*cand)[static_cast<std::size_t>(k)]));
            }
            if (diff <= 1e-8) {
                dup = true;
                break;
            }
        }
        if (!dup) uniq.push_back(*cand);
    }
    if (uniq.empty()) throw NoTrunk("half-space system has no vertices");
    std::sort(uniq.begin(), uniq.end());

    PseudoVertexSet out;
    out.points.reserve(uniq.size());
    for (auto& y : uniq) {
        std::vector<Scalar> coords(static_cast<std::size_t>(e), 0.0);
        for (int k = 0; k < nv; ++k) coords[static_cast<std::size_t>(k + 1)] = y[static_cast<std::size_t>(k)];
        out.points.push_back(TropPoint::from_normalized(std::move(coords)));
    }
    return out;
}

} // namespace

PseudoVertexSet enumerate_pseudo_vertices(const TropPolytope& simplex) {
    return pseudo_vertices_impl(simplex, true);
}

PseudoVertexSet enumerate_pseudo_vertices_serial(const TropPolytope& simplex) {
    return pseudo_vertices_impl(simplex, false);
}

TropBall round_polytope(const TropPolytope& simplex) {
    const PseudoVertexSet pv = enumerate_pseudo_vertices(simplex);
    return min_enclosing(TropPolytope(pv.points));
}

VolumeEstimate estimate_volume_rounded(const TropPolytope& simplex, long long I,
                                       std::uint64_t seed, const VolumeOptions& opts) {
    if (I < 1) throw TropicalError("InvalidArgument", "need at least one sample");
    const TropBall ball = round_polytope(simplex);
    const HRep rep = h_rep(kleene_star(simplex.vertices()));
    const TropBall inscribed = max_inscribed_simplex(simplex);
    auto member = [rep](const TropPoint& x) { return rep.satisfied(x); };
    return estimate_impl(simplex, ball, member, inscribed.radius, I, seed, opts, true, true);
}

} // namespace tropiball
