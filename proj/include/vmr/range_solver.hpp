#ifndef VMR_RANGE_SOLVER_HPP
#define VMR_RANGE_SOLVER_HPP

#include <vector>

#include "vmr/convex_region.hpp"
#include "vmr/interval_set.hpp"
#include "vmr/level_profile.hpp"
#include "vmr/vector_measure.hpp"

namespace vmr {

struct RangeOptions {
    /// Sample count per curved level band of the lower boundary. Flat bands
    /// are exact and need no sampling.
    int samples_per_band = 512;
    /// Tolerance for membership tests against the range.
    double membership_tol = 1e-9;
};

/// Range of a two-dimensional vector measure over all measurable subsets:
/// a convex polygon, exact where the boundary is piecewise linear and
/// inscribed (vertices on the true boundary) where it curves.
struct RangeResult {
    ConvexRegion region;
    std::vector<Vec2> lower_boundary; // (a, mu2(L_a)) kinks and samples
    Vec2 total;                       // mu(X)
    double sampling_error_bound = 0.0;
};

RangeResult compute_range(const VectorMeasure& mu, const RangeOptions& opt = {});

/// Range of the measure restricted to s.
RangeResult range_of_subset(const VectorMeasure& mu, const IntervalSet& s,
                            const RangeOptions& opt = {});

/// Q^p = (R - {mu(X) - p}) intersect R. Throws NotInRange when p lies
/// outside the range by more than opt.membership_tol.
ConvexRegion q_set(const RangeResult& range, Vec2 p, double tol = 1e-9);

struct MaximalSetResult {
    IntervalSet z_star;
    double a_star = 0.0;
    ConvexRegion q_region; // Q^p, equals the range of z_star
    Vec2 achieved;         // mu(z_star)
};

/// Subset with measure p whose range contains the range of every other
/// subset of measure p: complement of the level slab M_{a*, u1} taken in
/// the equivalent basis, u = mu(X) - p.
MaximalSetResult maximal_subset(const VectorMeasure& mu, Vec2 p,
                                const RangeOptions& opt = {});

struct MinimalSetResult {
    IntervalSet m_star;
    ConvexRegion region; // range (-) Q^{mu(X)-q}, equals the range of m_star
    Vec2 achieved;
};

/// Subset with measure q whose range is contained in every other's:
/// complement of the maximal subset for mu(X) - q.
MinimalSetResult minimal_subset(const VectorMeasure& mu, Vec2 q,
                                const RangeOptions& opt = {});

} // namespace vmr

#endif
