#include "tropiball/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tropiball {

namespace {

void check_finite(const std::vector<Scalar>& raw) {
    for (Scalar x : raw) {
        if (!std::isfinite(x)) {
            throw InvalidPoint("point coordinates must be finite");
        }
    }
}

} // namespace

TropPoint::TropPoint(std::vector<Scalar> raw) {
    if (raw.size() < 2) throw InvalidPoint("a torus point needs at least 2 coordinates");
    check_finite(raw);
    const Scalar c = raw[0];
    for (Scalar& x : raw) x -= c;
    raw[0] = 0.0;
    coords_ = std::move(raw);
}

TropPoint TropPoint::from_normalized(std::vector<Scalar> coords) {
    TropPoint p;
    p.coords_ = std::move(coords);
    return p;
}

TropPoint normalize(const std::vector<Scalar>& raw) { return TropPoint(raw); }

Scalar trop_dist(const TropPoint& v, const TropPoint& w) {
    if (v.dim() != w.dim()) throw DimensionError("trop_dist: dimension mismatch");
    Scalar mx = -std::numeric_limits<Scalar>::infinity();
    Scalar mn = std::numeric_limits<Scalar>::infinity();
    for (int i = 0; i < v.dim(); ++i) {
        const Scalar d = v[i] - w[i];
        mx = std::max(mx, d);
        mn = std::min(mn, d);
    }
    return mx - mn;
}

TropMatrix::TropMatrix(int rows, int cols, Scalar fill) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw DimensionError("matrix dimensions must be >= 1");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
}

TropMatrix TropMatrix::from_columns(const std::vector<TropPoint>& columns) {
    if (columns.empty()) throw DimensionError("need at least one column");
    const int e = columns[0].dim();
    TropMatrix A(e, static_cast<int>(columns.size()));
    for (int j = 0; j < A.cols(); ++j) {
        if (columns[static_cast<std::size_t>(j)].dim() != e) {
            throw DimensionError("columns of mixed dimension");
        }
        for (int i = 0; i < e; ++i) A(i, j) = columns[static_cast<std::size_t>(j)][i];
    }
    return A;
}

TropSegment trop_segment(const TropPoint& u, const TropPoint& v) {
    if (u.dim() != v.dim()) throw DimensionError("trop_segment: dimension mismatch");
    const int e = u.dim();

    std::vector<Scalar> lambdas(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) lambdas[static_cast<std::size_t>(i)] = v[i] - u[i];
    std::sort(lambdas.begin(), lambdas.end());
    lambdas.erase(std::unique(lambdas.begin(), lambdas.end()), lambdas.end());

    TropSegment seg{u, v, {}, {}};
    for (Scalar lam : lambdas) {
        // the extreme multipliers give the endpoints themselves; taking them
        // verbatim keeps endpoint equality exact
        TropPoint bend = u;
        if (lam == lambdas.front()) {
            bend = v;
        } else if (lam != lambdas.back()) {
            std::vector<Scalar> p(static_cast<std::size_t>(e));
            for (int i = 0; i < e; ++i) {
                p[static_cast<std::size_t>(i)] = std::max(lam + u[i], v[i]);
            }
            bend = normalize(p);
        }
        if (!seg.bends.empty() && bend == seg.bends.back()) continue;
        if (seg.bends.empty()) {
            seg.cum_length.push_back(0.0);
        } else {
            const TropPoint& prev = seg.bends.back();
            Scalar s = 0.0;
            for (int i = 0; i < e; ++i) {
                const Scalar d = bend[i] - prev[i];
                s += d * d;
            }
            seg.cum_length.push_back(seg.cum_length.back() + std::sqrt(s));
        }
        seg.bends.push_back(std::move(bend));
    }
    return seg;
}

TropPolytope::TropPolytope(std::vector<TropPoint> vertices) {
    if (vertices.empty()) throw InvalidPoint("a polytope needs at least one vertex");
    e_ = vertices[0].dim();
    for (const TropPoint& p : vertices) {
        if (p.dim() != e_) throw DimensionError("vertices of mixed dimension");
        if (std::find(vertices_.begin(), vertices_.end(), p) == vertices_.end()) {
            vertices_.push_back(p);
        }
    }
}

TropPoint project(const TropPolytope& P, const TropPoint& x) {
    if (P.dim() != x.dim()) throw DimensionError("project: dimension mismatch");
    const int e = x.dim();
    std::vector<Scalar> out(static_cast<std::size_t>(e), kNegInf);
    for (const TropPoint& v : P.vertices()) {
        Scalar lam = std::numeric_limits<Scalar>::infinity();
        for (int i = 0; i < e; ++i) lam = std::min(lam, x[i] - v[i]);
        for (int i = 0; i < e; ++i) {
            out[static_cast<std::size_t>(i)] = std::max(out[static_cast<std::size_t>(i)], lam + v[i]);
        }
    }
    return normalize(out);
}

bool contains(const TropPolytope& P, const TropPoint& x, Scalar tol) {
    if (P.dim() != x.dim()) return false;
    return trop_dist(x, project(P, x)) <= tol;
}

namespace {

Scalar assignment_value(const TropMatrix& A, const std::vector<int>& sigma) {
    Scalar s = 0.0;
    for (int i = 0; i < static_cast<int>(sigma.size()); ++i) {
        const Scalar a = A(sigma[static_cast<std::size_t>(i)], i);
        if (a == kNegInf) return kNegInf;
        s += a;
    }
    return s;
}

TdetResult tdet_enumerate(const TropMatrix& A) {
    const int n = A.rows();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    TdetResult res{kNegInf, perm, false};
    int attained = 0;
    do {
        const Scalar s = assignment_value(A, perm);
        if (s == kNegInf) continue;
        if (s > res.value) {
            res.value = s;
            res.sigma = perm;
            attained = 1;
        } else if (s == res.value) {
            ++attained;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    res.singular = (res.value == kNegInf) || (attained >= 2);
    return res;
}

// O(n^3) Hungarian method (maximization) with forbidden entries. Returns an
// optimal column->row assignment, or empty if no finite assignment exists.
std::vector<int> solve_assignment(const TropMatrix& A, const std::vector<std::pair<int, int>>& forbidden) {
    const int n = A.rows();
    const Scalar inf = std::numeric_limits<Scalar>::infinity();

    auto cost = [&](int row, int col) -> Scalar {
        const Scalar a = A(row, col);
        if (a == kNegInf) return inf;
        for (const auto& f : forbidden) {
            if (f.first == row && f.second == col) return inf;
        }
        return -a; // minimize negated benefit
    };

    // Potentials over rows (u) and columns (v); p[col] = matched row, 1-based
    // internal indexing with 0 as the virtual start column.
    std::vector<Scalar> u(static_cast<std::size_t>(n) + 1, 0.0), v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> p(static_cast<std::size_t>(n) + 1, 0), way(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<Scalar> minv(static_cast<std::size_t>(n) + 1, inf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = p[static_cast<std::size_t>(j0)];
            Scalar delta = inf;
            int j1 = -1;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const Scalar cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            if (j1 < 0 || delta == inf) return {}; // no augmenting path with finite cost
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> sigma(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j) sigma[static_cast<std::size_t>(j - 1)] = p[static_cast<std::size_t>(j)] - 1;
    for (int j = 0; j < n; ++j) {
        if (A(sigma[static_cast<std::size_t>(j)], j) == kNegInf) return {};
    }
    return sigma;
}

TdetResult tdet_assignment(const TropMatrix& A) {
    const int n = A.rows();
    std::vector<int> best = solve_assignment(A, {});
    if (best.empty()) {
        std::vector<int> id(static_cast<std::size_t>(n));
        std::iota(id.begin(), id.end(), 0);
        return TdetResult{kNegInf, id, true};
    }
    const Scalar value = assignment_value(A, best);

    // Uniqueness probe: forbid each matched cell in turn; a re-solve reaching
    // the same value means a second optimal permutation exists.
    bool tie = false;
    for (int j = 0; j < n && !tie; ++j) {
        std::vector<int> alt = solve_assignment(A, {{best[static_cast<std::size_t>(j)], j}});
        if (!alt.empty() && assignment_value(A, alt) == value) tie = true;
    }
    return TdetResult{value, best, tie};
}

} // namespace

TdetResult trop_det(const TropMatrix& A, TdetMode mode) {
    if (!A.square()) throw DimensionError("trop_det: matrix must be square");
    const int n = A.rows();
    if (mode == TdetMode::Enumerate || (mode == TdetMode::Auto && n <= 8)) {
        return tdet_enumerate(A);
    }
    return tdet_assignment(A);
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace tropiball
