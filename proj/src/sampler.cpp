#include "tropiball/sampler.hpp"

#include <utility>

namespace tropiball {

TropPoint extrapolate(const std::vector<TropPoint>& v_minus_i, const TropPoint& x) {
    return project(TropPolytope(v_minus_i), x);
}

TropSegment truncate_segment(const TropSegment& seg, const std::vector<MinHyperplane>& arr,
                             Scalar tol) {
    const int nb = static_cast<int>(seg.bends.size());
    for (int j = 1; j + 1 < nb; ++j) {
        const TropPoint& b = seg.bends[static_cast<std::size_t>(j)];
        bool hit = false;
        for (const MinHyperplane& H : arr) {
            if (hyperplane_distance(b, H) <= tol) {
                hit = true;
                break;
            }
        }
        if (hit) {
            TropSegment cut{b, seg.v, {}, {}};
            cut.bends.assign(seg.bends.begin(), seg.bends.begin() + j + 1);
            cut.cum_length.assign(seg.cum_length.begin(), seg.cum_length.begin() + j + 1);
            return cut;
        }
    }
    return seg;
}

TropPoint sample_on_segment(const TropSegment& seg, Rng& rng) {
    const Scalar total = seg.length();
    if (total <= 0.0) return seg.bends.front();
    const Scalar t = rng.uniform01() * total;
    std::size_t k = 1;
    while (k + 1 < seg.cum_length.size() && seg.cum_length[k] < t) ++k;
    const TropPoint& a = seg.bends[k - 1];
    const TropPoint& b = seg.bends[k];
    const Scalar span = seg.cum_length[k] - seg.cum_length[k - 1];
    const Scalar alpha = span > 0.0 ? (t - seg.cum_length[k - 1]) / span : 0.0;
    std::vector<Scalar> p(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) {
        p[static_cast<std::size_t>(i)] = a[i] + alpha * (b[i] - a[i]);
    }
    p[0] = 0.0; // both bends are normalized, keep it exact
    return TropPoint::from_normalized(std::move(p));
}

HarChain::HarChain(TropPolytope simplex, TropPoint start, std::uint64_t seed)
    : simplex_(std::move(simplex)),
      arrangement_(arrangement(simplex_.vertices())),
      current_(std::move(start)),
      rng_(seed) {
    if (simplex_.size() != simplex_.dim()) {
        throw NotASimplex("Hit-and-Run needs a tropical simplex (e vertices)");
    }
    if (!contains(simplex_, current_, 1e-6)) {
        throw InvalidStart("chain start point is not inside the simplex");
    }
}

TropPoint HarChain::step() {
    const int e = simplex_.dim();
    const int i = rng_.uniform_index(e);

    std::vector<TropPoint> rest;
    rest.reserve(static_cast<std::size_t>(e - 1));
    for (int l = 0; l < e; ++l) {
        if (l != i) rest.push_back(simplex_.vertex(l));
    }
    const TropPoint pi = extrapolate(rest, current_);

    TropSegment seg = trop_segment(simplex_.vertex(i), pi); // bends run pi -> v_i
    seg = truncate_segment(seg, arrangement_);
    current_ = sample_on_segment(seg, rng_);
    ++iterations_;
    return current_;
}

std::vector<TropPoint> run_chain(const TropPolytope& simplex, const TropPoint& x0,
                                 long long iterations, std::uint64_t seed) {
    if (iterations < 1) throw TropicalError("InvalidArgument", "need at least one iteration");
    HarChain chain(simplex, x0, seed);
    std::vector<TropPoint> out;
    out.reserve(static_cast<std::size_t>(iterations));
    for (long long k = 0; k < iterations; ++k) out.push_back(chain.step());
    return out;
}

} // namespace tropiball
