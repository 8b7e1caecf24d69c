// Timing comparison of the OpenMP kernels against their serial references.
// Results must agree exactly; the table reports wall times and speedups.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "tropiball/balls.hpp"
#include "tropiball/parallel.hpp"
#include "tropiball/sampler.hpp"
#include "tropiball/simplicial.hpp"
#include "tropiball/volume.hpp"

using namespace tropiball;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

TropPolytope random_polytope(int e, int n, std::uint64_t seed, double spread) {
    Rng rng(seed);
    std::vector<TropPoint> verts;
    for (int i = 0; i < n; ++i) {
        std::vector<Scalar> raw(static_cast<std::size_t>(e), 0.0);
        for (int k = 1; k < e; ++k) {
            raw[static_cast<std::size_t>(k)] = (rng.uniform01() * 2.0 - 1.0) * spread;
        }
        verts.push_back(normalize(raw));
    }
    return TropPolytope(std::move(verts));
}

struct Row {
    const char* name;
    double serialMs;
    double parallelMs;
    bool equal;
};

void print(const Row& r) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%.2f   %s\n", r.name, r.serialMs, r.parallelMs,
                r.parallelMs > 0 ? r.serialMs / r.parallelMs : 0.0,
                r.equal ? "results equal" : "RESULTS DIFFER");
}

} // namespace

int main() {
    std::printf("worker threads: %d\n", max_worker_threads());
    std::printf("%-28s %13s %13s\n", "kernel", "serial", "openmp");

    {
        const TropPolytope P = random_polytope(4, 12, 11, 6.0);
        const double t0 = now_ms();
        const TropBall a = max_inscribed_serial(P);
        const double t1 = now_ms();
        const TropBall b = max_inscribed(P);
        const double t2 = now_ms();
        print(Row{"max_inscribed C(12,4)", t1 - t0, t2 - t1,
                  a.radius == b.radius && a.center == b.center});
    }

    {
        const TropPolytope S = random_polytope(6, 6, 23, 8.0);
        const double t0 = now_ms();
        const PseudoVertexSet a = enumerate_pseudo_vertices_serial(S);
        const double t1 = now_ms();
        const PseudoVertexSet b = enumerate_pseudo_vertices(S);
        const double t2 = now_ms();
        print(Row{"pseudo_vertices e=6", t1 - t0, t2 - t1, a.points == b.points});
    }

    {
        const TropPolytope S = random_polytope(4, 4, 37, 5.0);
        const long long I = 200000;
        const double t0 = now_ms();
        const VolumeEstimate a = estimate_volume_serial(S, I, 99);
        const double t1 = now_ms();
        const VolumeEstimate b = estimate_volume(S, I, 99);
        const double t2 = now_ms();
        print(Row{"estimate_volume I=2e5", t1 - t0, t2 - t1,
                  a.hits == b.hits && a.estimate == b.estimate});
    }

    {
        const TropPolytope P = random_polytope(3, 7, 51, 5.0);
        const long long I = 60000;
        const double t0 = now_ms();
        const SimplexCover a = identify_cover_serial(P, I, 7);
        const double t1 = now_ms();
        const SimplexCover b = identify_cover(P, I, 7);
        const double t2 = now_ms();
        print(Row{"identify_cover I=6e4", t1 - t0, t2 - t1,
                  a.simplices == b.simplices && a.weights == b.weights});
    }

    return 0;
}
