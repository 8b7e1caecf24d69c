#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "test_util.hpp"
#include "tropiball/hull.hpp"

using namespace tropiball;

TEST_CASE("tropical semiring operations") {
    CHECK(trop_add(3.0, 5.0) == 5.0);
    CHECK(trop_mul(3.0, 5.0) == 8.0);
    CHECK(trop_add(kNegInf, 7.0) == 7.0);
    CHECK(trop_mul(kNegInf, 7.0) == kNegInf);
    CHECK(trop_mul(7.0, kNegInf) == kNegInf);
}

TEST_CASE("normalization pins the first coordinate at zero") {
    CHECK(tt::pt({2, 3, 5}) == tt::pt({0, 1, 3}));
    CHECK(tt::pt({0, 0, 0}).coords() == std::vector<double>{0, 0, 0});
    CHECK(tt::pt({-1, 1, 0}) == tt::pt({0, 2, 1}));
    CHECK_THROWS_AS(normalize({1.0, std::nan("")}), InvalidPoint);
    CHECK_THROWS_AS(normalize({1.0, kNegInf}), InvalidPoint);
    CHECK_THROWS_AS(normalize({1.0}), InvalidPoint);
}

TEST_CASE("tropical distance values") {
    CHECK(trop_dist(tt::pt({0, 1, 0}), tt::pt({0, 0, 1})) == 2.0);
    CHECK(trop_dist(tt::pt({0, -2, 5}), tt::pt({0, 1, 0})) == 8.0);
    const TropPoint x = tt::pt({0, 3.25, -1.5});
    CHECK(trop_dist(x, x) == 0.0);
    CHECK_THROWS_AS(trop_dist(tt::pt({0, 1}), tt::pt({0, 1, 2})), DimensionError);
}

TEST_CASE("metric axioms on random triples") {
    Rng rng(101);
    for (int k = 0; k < 10000; ++k) {
        const TropPoint a = tt::random_point(rng, 4, 10.0);
        const TropPoint b = tt::random_point(rng, 4, 10.0);
        const TropPoint c = tt::random_point(rng, 4, 10.0);
        const double ab = trop_dist(a, b);
        REQUIRE(ab >= 0.0);
        REQUIRE(ab == trop_dist(b, a));
        REQUIRE(trop_dist(a, c) <= ab + trop_dist(b, c) + 1e-9);
    }
}

TEST_CASE("translation invariance") {
    const TropPoint x = tt::pt({0, 1.5, -2.25});
    const TropPoint y = tt::pt({0, 4, 0.5});
    // dyadic shift: exact
    CHECK(trop_dist(tt::pt({3, 4.5, 0.75}), y) == trop_dist(x, y));
    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
        const TropPoint a = tt::random_point(rng, 3, 5.0);
        const double c = rng.uniform01() * 7.0 - 3.5;
        std::vector<double> shifted = a.coords();
        for (double& v : shifted) v += c;
        CHECK(tt::close(trop_dist(normalize(shifted), y), trop_dist(a, y), 1e-12));
    }
}

TEST_CASE("segment between coincident endpoints is a single bend") {
    const TropPoint x = tt::pt({0, 2, 1});
    const TropSegment seg = trop_segment(x, x);
    CHECK(seg.bends.size() == 1);
    CHECK(seg.bends.front() == x);
    CHECK(seg.length() == 0.0);
}

TEST_CASE("segment bends of a worked example") {
    const TropPoint u = tt::pt({0, 0, 0});
    const TropPoint v = tt::pt({0, 2, 5});
    const TropSegment seg = trop_segment(u, v);
    REQUIRE(seg.bends.size() == 3);
    CHECK(seg.bends[0] == v);
    CHECK(seg.bends[1] == tt::pt({0, 0, 3}));
    CHECK(seg.bends[2] == u);
    // every bend splits the endpoint distance additively
    const double duv = trop_dist(u, v);
    for (const TropPoint& b : seg.bends) {
        CHECK(tt::close(trop_dist(u, b) + trop_dist(b, v), duv, 1e-9));
    }
    CHECK(seg.cum_length.front() == 0.0);
    CHECK(seg.length() > 0.0);
}

TEST_CASE("random segments: bend count, additivity, membership, arc lengths") {
    Rng rng(77);
    for (int k = 0; k < 300; ++k) {
        const TropPoint u = tt::random_point(rng, 4, 8.0);
        const TropPoint v = tt::random_point(rng, 4, 8.0);
        const TropSegment seg = trop_segment(u, v);
        REQUIRE(seg.bends.size() <= 4);
        REQUIRE(seg.bends.front() == v);
        REQUIRE(seg.bends.back() == u);
        const double duv = trop_dist(u, v);
        const TropPolytope hull({u, v});
        for (const TropPoint& b : seg.bends) {
            REQUIRE(tt::close(trop_dist(u, b) + trop_dist(b, v), duv, 1e-9));
            REQUIRE(contains(hull, b, 1e-9));
        }
        for (std::size_t i = 1; i < seg.cum_length.size(); ++i) {
            REQUIRE(seg.cum_length[i] > seg.cum_length[i - 1]);
        }
    }
}

TEST_CASE("projection fixes vertices and is idempotent") {
    const TropPolytope P = tt::load_data("tri_simplex.json");
    for (const TropPoint& v : P.vertices()) {
        CHECK(project(P, v) == v);
    }
    Rng rng(13);
    for (int k = 0; k < 200; ++k) {
        const TropPoint x = tt::random_point(rng, 3, 12.0);
        const TropPoint pi = project(P, x);
        CHECK(tt::point_close(project(P, pi), pi, 1e-12));
    }
}

TEST_CASE("projection minimizes the distance to the polytope") {
    const TropPolytope P({tt::pt({0, 0, 0}), tt::pt({0, 2, 5}), tt::pt({0, 3, 1})});
    const TropPoint x = tt::pt({0, 10, 10});
    const TropPoint pi = project(P, x);
    const double dpi = trop_dist(x, pi);
    Rng rng(23);
    for (int k = 0; k < 10000; ++k) {
        REQUIRE(dpi <= trop_dist(x, tt::random_member(rng, P)) + 1e-9);
    }

    // the same property on random polytopes
    for (int t = 0; t < 10; ++t) {
        std::vector<TropPoint> verts;
        for (int i = 0; i < 5; ++i) verts.push_back(tt::random_point(rng, 4, 6.0));
        const TropPolytope Q(std::move(verts));
        const TropPoint y = tt::random_point(rng, 4, 12.0);
        const TropPoint piQ = project(Q, y);
        const double dQ = trop_dist(y, piQ);
        REQUIRE(contains(Q, piQ, 1e-9));
        for (int k = 0; k < 1000; ++k) {
            REQUIRE(dQ <= trop_dist(y, tt::random_member(rng, Q)) + 1e-9);
        }
    }
}

TEST_CASE("membership: vertices in, distant translates out") {
    const TropPolytope P = tt::load_data("quad_polytope.json");
    for (const TropPoint& v : P.vertices()) {
        CHECK(contains(P, v, kDefaultTol));
    }
    std::vector<double> far = P.vertex(0).coords();
    far[1] += 10.0;
    CHECK_FALSE(contains(P, normalize(far), kDefaultTol));
}

TEST_CASE("membership agrees with the simplex half-space systems off tentacles") {
    const TropPolytope P = tt::load_data("quad_polytope.json");
    // every 3-subset of the vertex set, as a half-space system
    std::vector<HRep> reps;
    const int s = P.size();
    for (int a = 0; a < s; ++a) {
        for (int b = a + 1; b < s; ++b) {
            for (int c = b + 1; c < s; ++c) {
                reps.push_back(h_rep(kleene_star({P.vertex(a), P.vertex(b), P.vertex(c)})));
            }
        }
    }
    // an offset grid avoids the polytope's one-dimensional tentacles
    int checked = 0;
    for (int gx = 0; gx < 32; ++gx) {
        for (int gy = 0; gy < 32; ++gy) {
            const double y2 = -2.47 + 0.17 * gx;
            const double y3 = -0.53 + 0.21 * gy;
            const TropPoint x = tt::pt({0, y2, y3});
            bool inTrunk = false;
            for (const HRep& r : reps) {
                if (r.satisfied(x, 1e-9)) {
                    inTrunk = true;
                    break;
                }
            }
            REQUIRE(contains(P, x, 1e-9) == inTrunk);
            ++checked;
        }
    }
    CHECK(checked == 1024);
}

namespace {

// Independent of trop_det: recursive maximum over all assignments.
void best_assignment(const TropMatrix& A, int col, std::vector<char>& used, double acc,
                     double& best, int& count) {
    const int n = A.rows();
    if (col == n) {
        if (acc > best) {
            best = acc;
            count = 1;
        } else if (acc == best) {
            ++count;
        }
        return;
    }
    for (int r = 0; r < n; ++r) {
        if (used[static_cast<std::size_t>(r)]) continue;
        if (A(r, col) == kNegInf) continue;
        used[static_cast<std::size_t>(r)] = 1;
        best_assignment(A, col + 1, used, acc + A(r, col), best, count);
        used[static_cast<std::size_t>(r)] = 0;
    }
}

struct Brute {
    double value;
    int count;
};

Brute brute_tdet(const TropMatrix& A) {
    std::vector<char> used(static_cast<std::size_t>(A.rows()), 0);
    double best = kNegInf;
    int count = 0;
    best_assignment(A, 0, used, 0.0, best, count);
    return Brute{best, count};
}

TropMatrix random_matrix(Rng& rng, int n, bool withNegInf) {
    TropMatrix A(n, n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (withNegInf && rng.uniform01() < 0.1) {
                A(i, j) = kNegInf;
            } else {
                A(i, j) = std::floor(rng.uniform01() * 19.0) - 9.0;
            }
        }
    }
    return A;
}

} // namespace

TEST_CASE("tropical determinant of a worked 3x3 matrix") {
    TropMatrix A(3, 3, 0.0);
    const double rows[3][3] = {{0, 0, 0}, {0, 2, 3}, {0, 5, 1}};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) A(i, j) = rows[i][j];
    }
    const TdetResult res = trop_det(A);
    CHECK(res.value == 8.0);
    CHECK(res.sigma == std::vector<int>{0, 2, 1});
    CHECK_FALSE(res.singular);
    CHECK(A.at1(3, 2) == 5.0);
}

TEST_CASE("all-zero matrix is singular with value zero") {
    TropMatrix A(3, 3, 0.0);
    const TdetResult res = trop_det(A);
    CHECK(res.value == 0.0);
    CHECK(res.singular);
}

TEST_CASE("determinant matches exhaustive enumeration") {
    Rng rng(303);
    for (int n = 2; n <= 6; ++n) {
        for (int t = 0; t < 40; ++t) {
            const TropMatrix A = random_matrix(rng, n, t % 3 == 0);
            const Brute oracle = brute_tdet(A);
            const TdetResult res = trop_det(A, TdetMode::Enumerate);
            REQUIRE(res.value == oracle.value);
            REQUIRE(res.singular == (oracle.count != 1));
            if (!res.singular) {
                double s = 0.0;
                for (int i = 0; i < n; ++i) s += A(res.sigma[static_cast<std::size_t>(i)], i);
                REQUIRE(s == oracle.value);
            }
        }
    }
}

TEST_CASE("assignment-solver path agrees with enumeration") {
    Rng rng(404);
    for (int n = 3; n <= 7; ++n) {
        for (int t = 0; t < 30; ++t) {
            const TropMatrix A = random_matrix(rng, n, t % 4 == 0);
            const TdetResult byEnum = trop_det(A, TdetMode::Enumerate);
            const TdetResult byAssign = trop_det(A, TdetMode::Assignment);
            REQUIRE(byAssign.value == byEnum.value);
            REQUIRE(byAssign.singular == byEnum.singular);
        }
    }
    // all entries blocked: value -inf, singular
    TropMatrix blocked(3, 3, kNegInf);
    const TdetResult res = trop_det(blocked, TdetMode::Assignment);
    CHECK(res.value == kNegInf);
    CHECK(res.singular);

    // one larger instance near the auto-mode crossover
    const TropMatrix big = random_matrix(rng, 9, false);
    const TdetResult bigEnum = trop_det(big, TdetMode::Enumerate);
    const TdetResult bigAssign = trop_det(big, TdetMode::Assignment);
    CHECK(bigAssign.value == bigEnum.value);
    CHECK(bigAssign.singular == bigEnum.singular);
}

TEST_CASE("polytopes merge duplicate vertices") {
    // the middle point is a torus duplicate of the first
    const TropPolytope P({tt::pt({0, 1, 2}), tt::pt({3, 4, 5}), tt::pt({0, 4, 5})});
    CHECK(P.size() == 2);
}
