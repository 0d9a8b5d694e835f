#include "vmr/interval_set.hpp"

#include <algorithm>
#include <cmath>

namespace vmr {

namespace {
constexpr double kMinLength = 1e-15; // drop numerical sliver intervals
}

IntervalSet::IntervalSet(std::initializer_list<Interval> ivs) : ivs_(ivs) {
    normalize();
}

IntervalSet IntervalSet::from_unsorted(std::vector<Interval> ivs) {
    IntervalSet s;
    s.ivs_ = std::move(ivs);
    s.normalize();
    return s;
}

void IntervalSet::normalize() {
    for (auto& iv : ivs_) {
        iv.lo = std::max(0.0, iv.lo);
        iv.hi = std::min(1.0, iv.hi);
    }
    std::erase_if(ivs_, [](const Interval& iv) { return iv.hi - iv.lo <= kMinLength; });
    std::sort(ivs_.begin(), ivs_.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const auto& iv : ivs_) {
        if (!merged.empty() && iv.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }
    ivs_ = std::move(merged);
}

double IntervalSet::total_length() const {
    double t = 0.0;
    for (const auto& iv : ivs_) t += iv.length();
    return t;
}

bool IntervalSet::contains_point(double x) const {
    for (const auto& iv : ivs_) {
        if (x >= iv.lo && x < iv.hi) return true;
        if (iv.lo > x) break;
    }
    return false;
}

IntervalSet IntervalSet::complement() const {
    std::vector<Interval> out;
    double cursor = 0.0;
    for (const auto& iv : ivs_) {
        if (iv.lo > cursor) out.push_back({cursor, iv.lo});
        cursor = iv.hi;
    }
    if (cursor < 1.0) out.push_back({cursor, 1.0});
    return from_unsorted(std::move(out));
}

IntervalSet IntervalSet::set_union(const IntervalSet& other) const {
    std::vector<Interval> all(ivs_.begin(), ivs_.end());
    all.insert(all.end(), other.ivs_.begin(), other.ivs_.end());
    return from_unsorted(std::move(all));
}

IntervalSet IntervalSet::set_intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < ivs_.size() && j < other.ivs_.size()) {
        const Interval& a = ivs_[i];
        const Interval& b = other.ivs_[j];
        double lo = std::max(a.lo, b.lo);
        double hi = std::min(a.hi, b.hi);
        if (hi > lo) out.push_back({lo, hi});
        if (a.hi < b.hi) ++i; else ++j;
    }
    return from_unsorted(std::move(out));
}

IntervalSet IntervalSet::set_minus(const IntervalSet& other) const {
    return set_intersect(other.complement());
}

double IntervalSet::overlap_length(const IntervalSet& other) const {
    return set_intersect(other).total_length();
}

bool IntervalSet::covers(const IntervalSet& other, double tol) const {
    return other.set_minus(*this).total_length() <= tol;
}

double IntervalSet::symmetric_difference_length(const IntervalSet& other) const {
    return set_minus(other).total_length() + other.set_minus(*this).total_length();
}

std::vector<double> IntervalSet::inner_endpoints() const {
    std::vector<double> pts;
    for (const auto& iv : ivs_) {
        if (iv.lo > 0.0 && iv.lo < 1.0) pts.push_back(iv.lo);
        if (iv.hi > 0.0 && iv.hi < 1.0) pts.push_back(iv.hi);
    }
    return pts;
}

} // namespace vmr
