#include "vmr/purification.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "vmr/errors.hpp"

namespace vmr {

namespace {

std::vector<int> bits_of(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (mask >> i & 1) out.push_back(i);
    return out;
}

Vec2 effective_total(const std::vector<Vec2>& targets) {
    Vec2 s{0.0, 0.0};
    for (Vec2 t : targets) s = s + t;
    return s;
}

} // namespace

TargetAllocation kernel_targets(const TransitionKernel& pi, const VectorMeasure& mu) {
    if (pi.weights.empty() || pi.weights.size() != pi.labels.size())
        throw InvalidKernel("kernel needs one weight function per label");
    for (const auto& w : pi.weights) w.validate_nonnegative(1e-9);

    // row sums must be identically one: degree <= 2 per piece, so endpoint
    // and midpoint checks on the merged grid are exact
    PiecewisePoly sum = pi.weights[0];
    for (std::size_t a = 1; a < pi.weights.size(); ++a)
        sum = PiecewisePoly::linear_combination(1.0, sum, 1.0, pi.weights[a]);
    const auto& grid = sum.breakpoints();
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        for (double x : {grid[i], 0.5 * (grid[i] + grid[i + 1])}) {
            if (std::fabs(sum(x) - 1.0) > 1e-9)
                throw InvalidKernel("kernel weights do not sum to one at x=" + std::to_string(x));
        }
    }

    TargetAllocation t;
    t.targets.reserve(pi.weights.size());
    for (const auto& w : pi.weights) {
        t.targets.push_back({PiecewisePoly::integrate_product(w, mu.density(0), 0.0, 1.0),
                             PiecewisePoly::integrate_product(w, mu.density(1), 0.0, 1.0)});
    }
    return t;
}

FeasibilityReport check_conditions(const TargetAllocation& t, const RangeResult& range,
                                   double tol, std::uint64_t seed) {
    FeasibilityReport rep;
    rep.expected = range.total;
    rep.sum = effective_total(t.targets);
    rep.sum_ok = std::fabs(rep.sum.x - rep.expected.x) <= tol &&
                 std::fabs(rep.sum.y - rep.expected.y) <= tol;
    rep.seed = seed;

    int n = static_cast<int>(t.targets.size());
    // the region polygon is inscribed, so membership gets the sampling slack
    double slack = tol + range.sampling_error_bound;
    auto test_subset = [&](std::uint64_t mask) {
        Vec2 s{0.0, 0.0};
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s = s + t.targets[static_cast<std::size_t>(i)];
        double sd = range.region.signed_distance(s);
        if (sd > slack) {
            rep.violations.push_back({bits_of(mask, n), s, sd});
        } else if (std::fabs(sd) <= slack && rep.boundary_contacts.size() < 64) {
            rep.boundary_contacts.push_back(bits_of(mask, n));
        }
    };

    if (n <= 20) {
        rep.exhaustive = true;
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
            test_subset(mask);
        rep.sampled_subsets = (std::uint64_t{1} << n) - 1;
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(seed);
        std::uint64_t full = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        rep.sampled_subsets = 1000000;
        for (std::uint64_t k = 0; k < rep.sampled_subsets; ++k)
            test_subset(rng() & full);
    }
    rep.subsets_ok = rep.violations.empty();
    return rep;
}

std::vector<IntervalSet> purify(const TargetAllocation& t, const VectorMeasure& mu,
                                const RangeOptions& opt) {
    if (t.targets.empty()) throw Infeasible("no targets to assign");
    std::vector<Vec2> targets = t.targets;
    Vec2 total = mu.measure2_of(IntervalSet::full());
    Vec2 residual = total - effective_total(targets);
    if (t.policy == ResidualPolicy::absorb_into_last) {
        targets.back() = targets.back() + residual;
    } else if (norm_inf(residual) > 1e-9) {
        throw Infeasible("targets do not sum to the total measure");
    }

    std::vector<IntervalSet> parts;
    parts.reserve(targets.size());
    IntervalSet base = IntervalSet::full();
    for (std::size_t k = 0; k + 1 < targets.size(); ++k) {
        VectorMeasure cur = mu.restricted(base);
        Vec2 cur_total = cur.measure2_of(IntervalSet::full());
        Vec2 p = cur_total - targets[k]; // carve the slab with measure targets[k]
        MaximalSetResult max;
        try {
            max = maximal_subset(cur, p, opt);
        } catch (const NotInRange& e) {
            throw Infeasible("target " + std::to_string(k + 1) +
                             " leaves the remaining range: " + e.what());
        }
        IntervalSet next_base = base.set_intersect(max.z_star);
        IntervalSet block = base.set_minus(next_base);
        Vec2 got = mu.measure2_of(block);
        if (norm_inf(got - targets[k]) > 1e-10)
            throw Infeasible("step " + std::to_string(k + 1) +
                             " drifted beyond the per-step tolerance");
        parts.push_back(std::move(block));
        base = std::move(next_base);
    }
    parts.push_back(base); // residual block takes the final target
    return parts;
}

PartitionReport verify_partition(const std::vector<IntervalSet>& parts,
                                 const TargetAllocation& t, const VectorMeasure& mu,
                                 double measure_tol) {
    PartitionReport rep;
    IntervalSet all = IntervalSet::empty();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            rep.max_overlap = std::max(rep.max_overlap, parts[i].overlap_length(parts[j]));
        all = all.set_union(parts[i]);
    }
    rep.cover_defect = all.symmetric_difference_length(IntervalSet::full());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        Vec2 got = mu.measure2_of(parts[i]);
        rep.achieved.push_back(got);
        if (i < t.targets.size())
            rep.max_deviation = std::max(rep.max_deviation, norm_inf(got - t.targets[i]));
    }
    rep.disjoint_ok = rep.max_overlap <= 1e-12;
    rep.cover_ok = rep.cover_defect <= 1e-12;
    rep.measures_ok = rep.max_deviation <= measure_tol;
    return rep;
}

} // namespace vmr
