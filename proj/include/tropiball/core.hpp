#pragma once

// Max-plus arithmetic on the tropical projective torus R^e / R*1:
// points, the tropical metric, tropical line segments, projection onto a
// tropical polytope, and the tropical determinant.

#include <cstdint>
#include <limits>
#include <vector>

#include "tropiball/errors.hpp"

namespace tropiball {

using Scalar = double;

inline constexpr Scalar kNegInf = -std::numeric_limits<Scalar>::infinity();

// Default tolerance for membership / fixed-point style checks.
inline constexpr Scalar kDefaultTol = 1e-9;

// Tropical semiring operations (max-plus). -inf is the additive identity and
// absorbing for multiplication.
inline Scalar trop_add(Scalar x, Scalar y) { return x > y ? x : y; }
inline Scalar trop_mul(Scalar x, Scalar y) {
    if (x == kNegInf || y == kNegInf) return kNegInf;
    return x + y;
}

// A point of the torus, stored with its canonical representative: the first
// coordinate is exactly 0 and all entries are finite.
class TropPoint {
public:
    // Normalizes `raw` by subtracting its first coordinate.
    explicit TropPoint(std::vector<Scalar> raw);

    // Adopts already-normalized coordinates (coords[0] must be 0).
    static TropPoint from_normalized(std::vector<Scalar> coords);

    int dim() const { return static_cast<int>(coords_.size()); }
    Scalar operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<Scalar>& coords() const { return coords_; }

    bool operator==(const TropPoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const TropPoint& o) const { return !(*this == o); }

private:
    TropPoint() = default;
    std::vector<Scalar> coords_;
};

// Equivalent to TropPoint's normalizing constructor; kept as a free function
// because call sites read better with a verb.
TropPoint normalize(const std::vector<Scalar>& raw);

// Generalized Hilbert projective metric:
//   d(v, w) = max_i (v_i - w_i) - min_i (v_i - w_i).
Scalar trop_dist(const TropPoint& v, const TropPoint& w);

// Dense matrix over R u {-inf}. Indices are 0-based; at1() mirrors the 1-based
// convention used in printed systems.
class TropMatrix {
public:
    TropMatrix(int rows, int cols, Scalar fill = kNegInf);
    static TropMatrix from_columns(const std::vector<TropPoint>& columns);

    Scalar& operator()(int i, int j) { return data_[idx(i, j)]; }
    Scalar operator()(int i, int j) const { return data_[idx(i, j)]; }
    Scalar at1(int i, int j) const { return (*this)(i - 1, j - 1); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
    int rows_, cols_;
    std::vector<Scalar> data_;
};

// Tropical line segment between two points. The polyline runs from `v` to `u`
// through at most e bend points; `cum_length` holds cumulative Euclidean arc
// length (in normalized coordinates) at each bend, starting at 0.
struct TropSegment {
    TropPoint u;
    TropPoint v;
    std::vector<TropPoint> bends;
    std::vector<Scalar> cum_length;

    Scalar length() const { return cum_length.back(); }
};

// Builds the segment tconv({u, v}). Bends correspond to the sorted distinct
// values of the coordinate differences v - u; coincident bends are merged.
TropSegment trop_segment(const TropPoint& u, const TropPoint& v);

// A tropical polytope given by its generating vertex set. Duplicate vertices
// (after normalization) are merged, keeping first occurrences.
class TropPolytope {
public:
    explicit TropPolytope(std::vector<TropPoint> vertices);

    int dim() const { return e_; }
    int size() const { return static_cast<int>(vertices_.size()); }
    const TropPoint& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
    const std::vector<TropPoint>& vertices() const { return vertices_; }

private:
    int e_;
    std::vector<TropPoint> vertices_;
};

// Metric projection onto P: pi_P(x) = max_l (lambda_l + v^l) with
// lambda_l = min_i (x_i - v^l_i). The result lies in P and minimizes the
// tropical distance to x.
TropPoint project(const TropPolytope& P, const TropPoint& x);

// Membership via the projection fixed point: d(x, pi_P(x)) <= tol.
bool contains(const TropPolytope& P, const TropPoint& x, Scalar tol = kDefaultTol);

struct TdetResult {
    Scalar value;            // max over permutations s of sum_i A(s(i), i)
    std::vector<int> sigma;  // attaining permutation, sigma[i] = row of column i (0-based)
    bool singular;           // value == -inf, or >= 2 permutations attain it
};

enum class TdetMode {
    Auto,        // enumerate up to 8x8, assignment solver above
    Enumerate,   // always full permutation enumeration
    Assignment,  // always Hungarian assignment + uniqueness probing
};

TdetResult trop_det(const TropMatrix& A, TdetMode mode = TdetMode::Auto);

// Seed derivation for independent RNG streams (splitmix64 step).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace tropiball
