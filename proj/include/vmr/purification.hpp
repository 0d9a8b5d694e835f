#ifndef VMR_PURIFICATION_HPP
#define VMR_PURIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vmr/interval_set.hpp"
#include "vmr/piecewise_poly.hpp"
#include "vmr/range_solver.hpp"
#include "vmr/vec2.hpp"
#include "vmr/vector_measure.hpp"

namespace vmr {

/// What to do when the listed targets do not sum to mu(X): refuse, or fold
/// the remainder into the last target (the "everything else" block).
enum class ResidualPolicy { reject, absorb_into_last };

struct TargetAllocation {
    std::vector<Vec2> targets;
    ResidualPolicy policy = ResidualPolicy::reject;
};

/// Randomized assignment x -> label with measurable weights that sum to one
/// pointwise.
struct TransitionKernel {
    std::vector<std::string> labels;
    std::vector<PiecewisePoly> weights;
};

/// Aggregate measure vector of each label: integral of w_a against both
/// densities, in closed form. Throws InvalidKernel when weights are negative
/// or row sums stray from one by more than 1e-9.
TargetAllocation kernel_targets(const TransitionKernel& pi, const VectorMeasure& mu);

struct SubsetViolation {
    std::vector<int> subset;
    Vec2 sum;
    double distance = 0.0;
};

struct FeasibilityReport {
    bool sum_ok = false;
    Vec2 sum, expected;
    bool subsets_ok = false;
    bool exhaustive = true;  // false when 2^n was sampled instead of enumerated
    std::uint64_t sampled_subsets = 0;
    std::uint64_t seed = 0;
    std::vector<SubsetViolation> violations;
    std::vector<std::vector<int>> boundary_contacts; // subsets within tol of the boundary
    bool feasible() const { return sum_ok && subsets_ok; }
};

/// Necessary and sufficient conditions for a partition to exist: (i) targets sum to mu(X);
/// (ii) every finite subset sum stays inside the range. Exhaustive up to
/// n = 20 targets, sampled (1e6 subsets) beyond that.
FeasibilityReport check_conditions(const TargetAllocation& t, const RangeResult& range,
                                   double tol = 1e-9, std::uint64_t seed = 1);

/// Splits [0,1] into one block per target with matching measure vectors, by
/// repeatedly carving the slab for the next target out of the remaining
/// space and recursing into the maximal complement. Throws Infeasible when
/// an intermediate target leaves the current range.
std::vector<IntervalSet> purify(const TargetAllocation& t, const VectorMeasure& mu,
                                const RangeOptions& opt = {});

struct PartitionReport {
    double max_overlap = 0.0;
    double cover_defect = 0.0;
    std::vector<Vec2> achieved;
    double max_deviation = 0.0;
    bool disjoint_ok = false, cover_ok = false, measures_ok = false;
    bool ok() const { return disjoint_ok && cover_ok && measures_ok; }
};

PartitionReport verify_partition(const std::vector<IntervalSet>& parts,
                                 const TargetAllocation& t, const VectorMeasure& mu,
                                 double measure_tol = 1e-8);

} // namespace vmr

#endif
