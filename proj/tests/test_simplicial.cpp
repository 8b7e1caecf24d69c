#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "tropiball/simplicial.hpp"

using namespace tropiball;

TEST_CASE("simplex enumeration counts") {
    CHECK(enumerate_simplices(tt::load_data("quad_polytope.json")).size() == 4);
    CHECK(enumerate_simplices(tt::load_data("cover_penta4.json")).size() == 5);
    CHECK(enumerate_simplices(tt::load_data("tri_simplex.json")).size() == 1);
    const TropPolytope two({tt::pt({0, 0, 0}), tt::pt({0, 1, 2})});
    CHECK_THROWS_AS(enumerate_simplices(two), TooFewVertices);
}

TEST_CASE("degenerate members of the complex are tagged") {
    const TropPolytope P({tt::pt({0, 0, 0}), tt::pt({0, 1, 1}), tt::pt({0, 2, 2}),
                          tt::pt({0, 1, 0})});
    const std::vector<SimplexInfo> infos = enumerate_simplices(P);
    REQUIRE(infos.size() == 4);
    auto flag = [&](const std::vector<int>& idx) {
        for (const SimplexInfo& si : infos) {
            if (si.indices == idx) return si.degenerate;
        }
        return false;
    };
    CHECK(flag({0, 1, 2}));        // three diagonal points
    CHECK_FALSE(flag({0, 1, 3}));
    CHECK_FALSE(flag({0, 2, 3}));
}

TEST_CASE("a lone simplex covers itself with weight one") {
    const SimplexCover cover = identify_cover(tt::load_data("tri_simplex.json"), 500, 17);
    REQUIRE(cover.simplices.size() == 1);
    CHECK(cover.simplices[0] == std::vector<int>{0, 1, 2});
    CHECK(cover.weights[0] == 1.0);
    CHECK(cover.sample_size_used > 0);
}

TEST_CASE("cover of the four-vertex polytope") {
    const TropPolytope P = tt::load_data("cover_quad.json");
    const SimplexCover cover = identify_cover(P, 2000, 7);
    REQUIRE(cover.simplices.size() == 2);
    CHECK(cover.simplices[0] == std::vector<int>{0, 1, 2});
    CHECK(cover.simplices[1] == std::vector<int>{0, 1, 3});
    // exclusive areas are 6 and 3.5 of a total 9.5
    CHECK(tt::close(cover.weights[0], 6.0 / 9.5, 0.05));
    CHECK(tt::close(cover.weights[1], 3.5 / 9.5, 0.05));
    double sum = 0.0;
    for (double w : cover.weights) {
        CHECK(w >= 0.0);
        sum += w;
    }
    CHECK(tt::close(sum, 1.0, 1e-6));
}

TEST_CASE("cover of the five-vertex polytope in four coordinates") {
    const TropPolytope P = tt::load_data("cover_penta4.json");
    const SimplexCover cover = identify_cover(P, 3000, 1);
    REQUIRE(cover.simplices.size() == 2);
    CHECK(cover.simplices[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(cover.simplices[1] == std::vector<int>{0, 1, 2, 4});
    // exclusive volumes are near 62.7 and 4.5 of a 67.3 total
    CHECK(tt::close(cover.weights[0], 0.933, 0.06));
    CHECK(tt::close(cover.weights[1], 0.067, 0.06));
}

TEST_CASE("cover identification is reproducible and seed-sensitive") {
    const TropPolytope P = tt::load_data("cover_quad.json");
    const SimplexCover a = identify_cover(P, 1000, 5);
    const SimplexCover b = identify_cover(P, 1000, 5);
    CHECK(a.simplices == b.simplices);
    CHECK(a.weights == b.weights);
    const SimplexCover c = identify_cover(P, 1000, 6);
    CHECK((a.weights != c.weights || a.sample_size_used != c.sample_size_used));
}

TEST_CASE("insufficient samples fail loudly") {
    const TropPolytope P = tt::load_data("quad_polytope.json");
    CHECK_THROWS_AS(identify_cover(P, 0, 1), TropicalError);
}

TEST_CASE("uniform draws stay inside the polytope and follow the weights") {
    const TropPolytope P = tt::load_data("cover_quad.json");
    const SimplexCover cover = identify_cover(P, 2000, 7);
    const long long J = 2000;
    const std::vector<TropPoint> pts = uniform_sample(cover, P, J, 99);
    REQUIRE(pts.size() == static_cast<std::size_t>(J));

    std::vector<TropPoint> first;
    for (int idx : cover.simplices[0]) first.push_back(P.vertex(idx));
    const TropPolytope S0(std::move(first));
    long long inFirst = 0;
    for (const TropPoint& p : pts) {
        REQUIRE(contains(P, p, 1e-6));
        if (contains(S0, p, 1e-9)) ++inFirst;
    }
    const double f = static_cast<double>(inFirst) / static_cast<double>(J);
    const double w0 = cover.weights[0];
    // overlap between the selected simplices has measure zero
    CHECK(tt::close(f, w0, 3.0 * std::sqrt(w0 * (1 - w0) / static_cast<double>(J)) + 0.01));
}

TEST_CASE("single-entry covers reduce to plain chain sampling") {
    const TropPolytope S = tt::load_data("square_simplex.json");
    SimplexCover cover;
    cover.simplices = {{0, 1, 2}};
    cover.weights = {1.0};
    const std::vector<TropPoint> pts = uniform_sample(cover, S, 300, 21);
    REQUIRE(pts.size() == 300);
    for (const TropPoint& p : pts) REQUIRE(contains(S, p, 1e-6));
    const std::vector<TropPoint> again = uniform_sample(cover, S, 300, 21);
    CHECK(pts == again);
}

TEST_CASE("mixture sampling is uniform over the union") {
    // identify with a generous sample so the weights track the areas closely,
    // then verify cell frequencies over the union; thinning keeps the draws
    // nearly independent so the chi-square statistic is calibrated
    const TropPolytope P = tt::load_data("cover_quad.json");
    const SimplexCover cover = identify_cover(P, 100000, 7);
    CoverOptions thin;
    thin.thinning = 5;
    const std::vector<TropPoint> pts = uniform_sample(cover, P, 100000, 11, thin);

    // cells: the 3x2 grid on [-2,1]x[3,5] plus the band {1<=y2<=2, y2<=y3<=5}
    // split at integer heights; all unit squares except two half cells
    struct Cell {
        double x0, y0, x1, y1, area;
    };
    std::vector<Cell> cells;
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 2; ++y) {
            cells.push_back(Cell{-2.0 + x, 3.0 + y, -1.0 + x, 4.0 + y, 1.0});
        }
    }
    for (int y = 1; y < 5; ++y) {
        // triangle rows of the band between the diagonal and the top
        const double area = y == 1 ? 0.5 : 1.0;
        cells.push_back(Cell{1.0, static_cast<double>(y), 2.0, static_cast<double>(y + 1), area});
    }
    double areaTotal = 0.0;
    for (const Cell& c : cells) areaTotal += c.area;

    std::vector<double> counts(cells.size(), 0.0);
    double kept = 0.0;
    for (const TropPoint& p : pts) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const Cell& c = cells[i];
            if (p[1] >= c.x0 && p[1] < c.x1 && p[2] >= c.y0 && p[2] < c.y1) {
                if (c.area == 1.0 || p[2] >= p[1]) {
                    counts[i] += 1.0;
                    kept += 1.0;
                }
                break;
            }
        }
    }
    REQUIRE(kept / static_cast<double>(pts.size()) > 0.97);
    double stat = 0.0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const double expect = kept * cells[i].area / areaTotal;
        stat += (counts[i] - expect) * (counts[i] - expect) / expect;
    }
    CHECK(stat < 21.666); // chi-square 0.99 quantile, 9 degrees of freedom
}
