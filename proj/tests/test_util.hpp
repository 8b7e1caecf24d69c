#pragma once

#include <string>
#include <vector>

#include "tropiball/core.hpp"
#include "tropiball/io.hpp"
#include "tropiball/sampler.hpp"

namespace tt {

inline std::string data_path(const std::string& name) {
    return std::string(TROPIBALL_TEST_DATA) + "/" + name;
}

inline tropiball::TropPolytope load_data(const std::string& name) {
    return tropiball::load_polytope(data_path(name)).polytope;
}

inline tropiball::TropPoint pt(std::vector<double> raw) {
    return tropiball::normalize(raw);
}

// Random torus point with coordinates in [-spread, spread].
inline tropiball::TropPoint random_point(tropiball::Rng& rng, int e, double spread) {
    std::vector<double> raw(static_cast<std::size_t>(e), 0.0);
    for (int i = 1; i < e; ++i) {
        raw[static_cast<std::size_t>(i)] = (rng.uniform01() * 2.0 - 1.0) * spread;
    }
    return tropiball::normalize(raw);
}

// Random point of P: a tropical combination with finite coefficients.
inline tropiball::TropPoint random_member(tropiball::Rng& rng, const tropiball::TropPolytope& P,
                                          double spread = 5.0) {
    const int e = P.dim();
    std::vector<double> acc(static_cast<std::size_t>(e), -1e300);
    for (const tropiball::TropPoint& v : P.vertices()) {
        const double a = (rng.uniform01() * 2.0 - 1.0) * spread;
        for (int i = 0; i < e; ++i) {
            acc[static_cast<std::size_t>(i)] = std::max(acc[static_cast<std::size_t>(i)], a + v[i]);
        }
    }
    return tropiball::normalize(acc);
}

inline bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline bool point_close(const tropiball::TropPoint& a, const tropiball::TropPoint& b, double tol) {
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i) {
        if (std::fabs(a[i] - b[i]) > tol) return false;
    }
    return true;
}

} // namespace tt
