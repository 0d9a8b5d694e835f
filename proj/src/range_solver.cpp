#include "vmr/range_solver.hpp"

#include <algorithm>
#include <cmath>

#include "vmr/errors.hpp"

namespace vmr {

namespace {

// Largest singular value of a 2x2 matrix, to push the boundary sampling
// error bound through the inverse basis change.
double operator_norm(const double m[2][2]) {
    double a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
    double t = a * a + b * b + c * c + d * d;
    double det = a * d - b * c;
    double disc = std::sqrt(std::max(0.0, t * t - 4.0 * det * det));
    return std::sqrt(0.5 * (t + disc));
}

} // namespace

RangeResult compute_range(const VectorMeasure& mu, const RangeOptions& opt) {
    if (mu.dimension() != 2)
        throw SchemaError("compute_range expects a two-dimensional measure");

    auto [nu, basis] = ensure_equivalent(mu);
    LevelProfile prof = LevelProfile::build(nu);

    // Lower boundary of the equivalent pair: a -> nu2(L_a). Anchors at every
    // critical level are exact; curved bands in between are sampled.
    std::vector<Vec2> lower{{0.0, 0.0}};
    std::vector<double> slope{0.0};
    const auto& crit = prof.critical_levels();
    for (std::size_t i = 0; i < crit.size(); ++i) {
        if (i > 0 && prof.band_has_curve(i - 1)) {
            int n = std::max(1, opt.samples_per_band);
            for (int s = 1; s <= n; ++s) {
                double l = crit[i - 1] + (crit[i] - crit[i - 1]) * s / (n + 1);
                lower.push_back({prof.sublevel_mass(l), prof.sublevel_mass2(l)});
                slope.push_back(l);
            }
        }
        lower.push_back({prof.strict_sublevel_mass(crit[i]), prof.strict_sublevel_mass2(crit[i])});
        slope.push_back(crit[i]);
        lower.push_back({prof.sublevel_mass(crit[i]), prof.sublevel_mass2(crit[i])});
        slope.push_back(crit[i]);
    }

    // Chord-vs-curve gap of an inscribed convex polyline is at most
    // (delta a)(delta slope)/4 per segment.
    double bound = 0.0;
    for (std::size_t k = 0; k + 1 < lower.size(); ++k)
        bound = std::max(bound, (lower[k + 1].x - lower[k].x) *
                                    (slope[k + 1] - slope[k]) / 4.0);
    bound *= operator_norm(basis.dinv);

    Vec2 total = mu.measure2_of(IntervalSet::full());
    std::vector<Vec2> pts;
    pts.reserve(2 * lower.size());
    for (Vec2 q : lower) {
        Vec2 v = basis.apply_inverse(q);
        pts.push_back(v);
        pts.push_back(total - v);
    }

    RangeResult out;
    out.region = ConvexRegion::hull_of(std::move(pts));
    out.lower_boundary = lower_chain(out.region);
    out.total = total;
    out.sampling_error_bound = bound;
    return out;
}

RangeResult range_of_subset(const VectorMeasure& mu, const IntervalSet& s,
                            const RangeOptions& opt) {
    return compute_range(mu.restricted(s), opt);
}

ConvexRegion q_set(const RangeResult& range, Vec2 p, double tol) {
    if (!range.region.contains(p, tol + range.sampling_error_bound))
        throw NotInRange("target vector is not in the range");
    Vec2 shift = range.total - p;
    return intersect(range.region.translated(-shift), range.region);
}

MaximalSetResult maximal_subset(const VectorMeasure& mu, Vec2 p,
                                const RangeOptions& opt) {
    RangeResult range = compute_range(mu, opt);
    ConvexRegion q_region = q_set(range, p, opt.membership_tol);

    auto [nu, basis] = ensure_equivalent(mu);
    LevelProfile prof = LevelProfile::build(nu);
    Vec2 u = range.total - p;
    Vec2 u_nu = basis.apply(u);
    double a_star = prof.solve_slab(u_nu, opt.membership_tol);
    double u1 = std::clamp(u_nu.x, 0.0, prof.total_mass());
    IntervalSet m = prof.slab(a_star, u1);
    IntervalSet z = m.complement();

    MaximalSetResult out;
    out.z_star = std::move(z);
    out.a_star = a_star;
    out.q_region = std::move(q_region);
    out.achieved = mu.measure2_of(out.z_star);
    return out;
}

MinimalSetResult minimal_subset(const VectorMeasure& mu, Vec2 q,
                                const RangeOptions& opt) {
    RangeResult range = compute_range(mu, opt);
    Vec2 p = range.total - q;
    MaximalSetResult max = maximal_subset(mu, p, opt);

    MinimalSetResult out;
    out.m_star = max.z_star.complement();
    out.region = minkowski_sub(range.region, max.q_region);
    out.achieved = mu.measure2_of(out.m_star);
    return out;
}

} // namespace vmr
