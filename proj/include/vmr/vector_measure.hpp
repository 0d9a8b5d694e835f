#ifndef VMR_VECTOR_MEASURE_HPP
#define VMR_VECTOR_MEASURE_HPP

#include <utility>
#include <vector>

#include "vmr/interval_set.hpp"
#include "vmr/piecewise_poly.hpp"
#include "vmr/vec2.hpp"

namespace vmr {

/// Finite atomless vector measure on [0,1] given by m nonnegative
/// piecewise-polynomial densities (m = 2 or 3) on a common breakpoint grid.
class VectorMeasure {
public:
    explicit VectorMeasure(std::vector<PiecewisePoly> densities);

    int dimension() const { return static_cast<int>(densities_.size()); }
    const PiecewisePoly& density(int i) const { return densities_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& grid() const { return densities_.front().breakpoints(); }

    std::vector<double> measure_of(const IntervalSet& s) const;
    std::vector<double> total() const { return measure_of(IntervalSet::full()); }

    Vec2 measure2_of(const IntervalSet& s) const; // m == 2 convenience
    Vec2 total2() const { return measure2_of(IntervalSet::full()); }

    VectorMeasure restricted(const IntervalSet& s) const;
    VectorMeasure component_pair(int i, int j) const;

private:
    std::vector<PiecewisePoly> densities_;
};

/// Invertible 2x2 change of basis for measure pairs, row-vector convention:
/// nu = mu * D, i.e. nu_j = sum_i D[i][j] * mu_i. Identity is the no-op
/// marker returned when no transform was needed.
struct BasisChange {
    double d[2][2];
    double dinv[2][2];

    static BasisChange identity();
    /// D = [[1,1],[1,2]]: nu1 = mu1 + mu2, nu2 = mu1 + 2*mu2.
    static BasisChange mixing();

    bool is_identity() const;
    Vec2 apply(Vec2 v) const;
    Vec2 apply_inverse(Vec2 v) const;
};

/// True when the two densities define mutually absolutely continuous
/// measures whose ratio d mu2 / d mu1 is bounded on every piece, so the
/// level machinery can run on the pair directly.
bool pair_has_bounded_ratio(const VectorMeasure& mu);

/// Returns (nu, D) with nu = mu * D an equivalent pair. When the pair
/// already qualifies, returns mu unchanged with D = identity.
std::pair<VectorMeasure, BasisChange> ensure_equivalent(const VectorMeasure& mu);

} // namespace vmr

#endif
