#ifndef VMR_JSON_IO_HPP
#define VMR_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "vmr/convex_region.hpp"
#include "vmr/counterexample.hpp"
#include "vmr/interval_set.hpp"
#include "vmr/purification.hpp"
#include "vmr/range_solver.hpp"
#include "vmr/vector_measure.hpp"

namespace vmr {

using nlohmann::json;

// measure schema:
// {"densities": [{"breakpoints": [0, 0.5, 1], "coeffs": [[2], [0]]}, ...]}
// with coeffs[i] the polynomial coefficients (constant first) in the local
// variable x - breakpoints[i].
json to_json(const PiecewisePoly& p);
PiecewisePoly piecewise_poly_from_json(const json& j);

json to_json(const VectorMeasure& mu);
VectorMeasure measure_from_json(const json& j);

json to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const json& j);

json to_json(const ConvexRegion& r);
ConvexRegion region_from_json(const json& j);

json to_json(const RangeResult& r);
json to_json(const CertificateReport& rep);
json to_json(const FeasibilityReport& rep);
json to_json(const PartitionReport& rep);

struct ProblemFile {
    VectorMeasure measure;
    std::optional<Vec2> p;
    std::optional<Vec2> q;
    std::optional<TargetAllocation> targets;
    std::optional<TransitionKernel> kernel;
};

/// Parses and validates a problem file; throws SchemaError on any defect.
ProblemFile problem_from_json(const json& j);
ProblemFile load_problem(const std::string& path);

} // namespace vmr

#endif
