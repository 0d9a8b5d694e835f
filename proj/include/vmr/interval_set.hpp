#ifndef VMR_INTERVAL_SET_HPP
#define VMR_INTERVAL_SET_HPP

#include <initializer_list>
#include <span>
#include <vector>

namespace vmr {

/// Half-open interval [lo, hi) inside [0, 1].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

/// A measurable subset of [0,1] stored as a sorted, pairwise-disjoint,
/// non-adjacent list of half-open intervals. The value of the densities at
/// single points never matters, so [x, 1) stands in for [x, 1] as well.
class IntervalSet {
public:
    IntervalSet() = default;
    IntervalSet(std::initializer_list<Interval> ivs);

    static IntervalSet empty() { return {}; }
    static IntervalSet full() { return IntervalSet{{0.0, 1.0}}; }
    static IntervalSet from_unsorted(std::vector<Interval> ivs);

    bool is_empty() const { return ivs_.empty(); }
    std::size_t size() const { return ivs_.size(); }
    std::span<const Interval> intervals() const { return ivs_; }

    double total_length() const;
    bool contains_point(double x) const;

    IntervalSet complement() const; // within [0,1]
    IntervalSet set_union(const IntervalSet& other) const;
    IntervalSet set_intersect(const IntervalSet& other) const;
    IntervalSet set_minus(const IntervalSet& other) const;

    /// Length of the overlap with `other`.
    double overlap_length(const IntervalSet& other) const;
    /// Every point of `other` within this set, allowing `tol` of stray length.
    bool covers(const IntervalSet& other, double tol) const;
    /// Length of the symmetric difference.
    double symmetric_difference_length(const IntervalSet& other) const;

    /// All interval endpoints inside (0,1), for grid refinement.
    std::vector<double> inner_endpoints() const;

private:
    std::vector<Interval> ivs_;
    void normalize();
};

} // namespace vmr

#endif
