#pragma once

// Vertex Hit-and-Run sampling from the (e-1)-trunk of a tropical simplex:
// project the current point away from one vertex, walk the tropical segment
// back toward that vertex, truncate at the first bend on an arrangement
// hyperplane, and draw uniformly (by arc length) from what is left.

#include <cstdint>
#include <random>
#include <vector>

#include "tropiball/core.hpp"
#include "tropiball/hull.hpp"

namespace tropiball {

// Deterministic uniform source. The engine is std::mt19937_64; uniforms are
// derived from raw 64-bit draws so the stream is identical on every platform.
class Rng {
public:
    static constexpr const char* kAlgorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    int uniform_index(int n) {
        const int k = static_cast<int>(uniform01() * n);
        return k >= n ? n - 1 : k;
    }

private:
    std::mt19937_64 engine_;
};

// Projection of x onto the tropical hull of the e-1 remaining vertices.
TropPoint extrapolate(const std::vector<TropPoint>& v_minus_i, const TropPoint& x);

// Walks the interior bends (endpoints excluded) in order from seg.v; the first
// bend lying on an arrangement hyperplane (distance <= tol) ends the segment.
TropSegment truncate_segment(const TropSegment& seg, const std::vector<MinHyperplane>& arr,
                             Scalar tol = kDefaultTol);

// Uniform draw with respect to Euclidean arc length along the polyline.
TropPoint sample_on_segment(const TropSegment& seg, Rng& rng);

class HarChain {
public:
    HarChain(TropPolytope simplex, TropPoint start, std::uint64_t seed);

    const TropPoint& current() const { return current_; }
    const TropPolytope& simplex() const { return simplex_; }
    std::uint64_t iterations_done() const { return iterations_; }

    // One Hit-and-Run move; returns (and records) the new point.
    TropPoint step();

private:
    TropPolytope simplex_;
    std::vector<MinHyperplane> arrangement_;
    TropPoint current_;
    Rng rng_;
    std::uint64_t iterations_ = 0;
};

// Runs `iterations` successive steps from x0 and returns them all (no burn-in
// is discarded at this layer). x0 must lie in the trunk within 1e-6.
std::vector<TropPoint> run_chain(const TropPolytope& simplex, const TropPoint& x0,
                                 long long iterations, std::uint64_t seed);

} // namespace tropiball
