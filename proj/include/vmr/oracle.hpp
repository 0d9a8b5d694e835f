#ifndef VMR_ORACLE_HPP
#define VMR_ORACLE_HPP

#include <optional>
#include <span>
#include <vector>

#include "vmr/convex_region.hpp"
#include "vmr/vec2.hpp"
#include "vmr/vector_measure.hpp"

namespace vmr {

/// Discretization of a two-dimensional measure into n equal-length cells;
/// the independent ground truth the analytic solver is checked against.
struct AtomGrid {
    int cells = 0;
    std::vector<Vec2> atoms; // measure vector of each cell

    static AtomGrid build(const VectorMeasure& mu, int n);
    Vec2 total() const;
    double max_cell_mass() const; // max over cells of the sup-norm
};

/// Minkowski sum of the segments [0, v_i]: the exact range of the discrete
/// measure, equal to the hull of all subset sums.
ConvexRegion zonogon(const AtomGrid& atoms);

struct QSetCloud {
    std::vector<Vec2> points;
    ConvexRegion hull;
};

/// Enumerates all pairs T subset of S subset of cells with mu(S) within eps
/// of p (componentwise) and collects mu(T). 3^n pairs; refuses n > 16.
QSetCloud brute_force_qset(const AtomGrid& atoms, Vec2 p, Vec2 eps);

/// Default slack: 1.5x the largest cell mass per coordinate.
Vec2 default_qset_eps(const AtomGrid& atoms);

/// Searches label assignments of cells whose per-label sums land within eps
/// of every target. k^n assignments; refuses n > 14 or more than 3 targets.
std::optional<std::vector<int>> brute_force_partition(const AtomGrid& atoms,
                                                      std::span<const Vec2> targets,
                                                      Vec2 eps);

} // namespace vmr

#endif
