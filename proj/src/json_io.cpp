#include "vmr/json_io.hpp"

#include <fstream>

#include "vmr/errors.hpp"

namespace vmr {

namespace {

double number_at(const json& j, const char* what) {
    if (!j.is_number()) throw SchemaError(std::string(what) + " must be a number");
    return j.get<double>();
}

Vec2 vec2_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2)
        throw SchemaError(std::string(what) + " must be a [x, y] pair");
    return {number_at(j[0], what), number_at(j[1], what)};
}

json vec2_to_json(Vec2 v) { return json::array({v.x, v.y}); }

} // namespace

json to_json(const PiecewisePoly& p) {
    json coeffs = json::array();
    for (const auto& piece : p.pieces()) {
        json c = json::array();
        std::size_t deg = 0;
        if (piece.c[2] != 0.0) deg = 2;
        else if (piece.c[1] != 0.0) deg = 1;
        for (std::size_t i = 0; i <= deg; ++i) c.push_back(piece.c[i]);
        coeffs.push_back(std::move(c));
    }
    return json{{"breakpoints", p.breakpoints()}, {"coeffs", std::move(coeffs)}};
}

PiecewisePoly piecewise_poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("coeffs"))
        throw SchemaError("density needs 'breakpoints' and 'coeffs'");
    const json& jb = j["breakpoints"];
    const json& jc = j["coeffs"];
    if (!jb.is_array() || !jc.is_array())
        throw SchemaError("'breakpoints' and 'coeffs' must be arrays");
    std::vector<double> breaks;
    for (const auto& b : jb) breaks.push_back(number_at(b, "breakpoint"));
    std::vector<Poly> pieces;
    for (const auto& c : jc) {
        if (!c.is_array() || c.empty() || c.size() > 3)
            throw SchemaError("piece coefficients must hold 1 to 3 numbers");
        Poly p;
        for (std::size_t i = 0; i < c.size(); ++i) p.c[i] = number_at(c[i], "coefficient");
        pieces.push_back(p);
    }
    PiecewisePoly out(std::move(breaks), std::move(pieces));
    out.validate_nonnegative();
    return out;
}

json to_json(const VectorMeasure& mu) {
    json ds = json::array();
    for (int i = 0; i < mu.dimension(); ++i) ds.push_back(to_json(mu.density(i)));
    return json{{"densities", std::move(ds)}};
}

VectorMeasure measure_from_json(const json& j) {
    if (!j.is_object() || !j.contains("densities") || !j["densities"].is_array())
        throw SchemaError("measure needs a 'densities' array");
    std::vector<PiecewisePoly> ds;
    for (const auto& d : j["densities"]) ds.push_back(piecewise_poly_from_json(d));
    return VectorMeasure(std::move(ds));
}

json to_json(const IntervalSet& s) {
    json out = json::array();
    for (const auto& iv : s.intervals()) out.push_back(json::array({iv.lo, iv.hi}));
    return out;
}

IntervalSet interval_set_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("interval set must be an array of [lo, hi] pairs");
    std::vector<Interval> ivs;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw SchemaError("interval must be a [lo, hi] pair");
        ivs.push_back({number_at(e[0], "interval endpoint"), number_at(e[1], "interval endpoint")});
    }
    return IntervalSet::from_unsorted(std::move(ivs));
}

json to_json(const ConvexRegion& r) {
    json out = json::array();
    for (Vec2 v : r.vertices()) out.push_back(vec2_to_json(v));
    return out;
}

ConvexRegion region_from_json(const json& j) {
    if (!j.is_array()) throw SchemaError("region must be an array of vertices");
    std::vector<Vec2> pts;
    for (const auto& e : j) pts.push_back(vec2_from_json(e, "vertex"));
    return ConvexRegion::hull_of(std::move(pts));
}

json to_json(const RangeResult& r) {
    json lb = json::array();
    for (Vec2 v : r.lower_boundary) lb.push_back(vec2_to_json(v));
    return json{{"region", to_json(r.region)},
                {"lower_boundary", std::move(lb)},
                {"total", vec2_to_json(r.total)},
                {"sampling_error_bound", r.sampling_error_bound}};
}

json to_json(const CertificateReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name},
                              {"passed", c.passed},
                              {"margin", c.margin},
                              {"detail", c.detail}});
    return json{{"checks", std::move(checks)}, {"all_passed", rep.all_passed}};
}

json to_json(const FeasibilityReport& rep) {
    json viols = json::array();
    for (const auto& v : rep.violations)
        viols.push_back(json{{"subset", v.subset},
                             {"sum", vec2_to_json(v.sum)},
                             {"distance", v.distance}});
    return json{{"sum_ok", rep.sum_ok},
                {"sum", vec2_to_json(rep.sum)},
                {"expected", vec2_to_json(rep.expected)},
                {"subsets_ok", rep.subsets_ok},
                {"exhaustive", rep.exhaustive},
                {"sampled_subsets", rep.sampled_subsets},
                {"seed", rep.seed},
                {"violations", std::move(viols)},
                {"boundary_contacts", rep.boundary_contacts},
                {"feasible", rep.feasible()}};
}

json to_json(const PartitionReport& rep) {
    json achieved = json::array();
    for (Vec2 v : rep.achieved) achieved.push_back(vec2_to_json(v));
    return json{{"max_overlap", rep.max_overlap},
                {"cover_defect", rep.cover_defect},
                {"achieved", std::move(achieved)},
                {"max_deviation", rep.max_deviation},
                {"disjoint_ok", rep.disjoint_ok},
                {"cover_ok", rep.cover_ok},
                {"measures_ok", rep.measures_ok},
                {"ok", rep.ok()}};
}

ProblemFile problem_from_json(const json& j) {
    if (!j.is_object() || !j.contains("measure"))
        throw SchemaError("problem file needs a 'measure'");
    ProblemFile pf{measure_from_json(j["measure"]), {}, {}, {}, {}};
    if (j.contains("p")) pf.p = vec2_from_json(j["p"], "p");
    if (j.contains("q")) pf.q = vec2_from_json(j["q"], "q");
    if (j.contains("targets")) {
        TargetAllocation t;
        if (!j["targets"].is_array()) throw SchemaError("'targets' must be an array");
        for (const auto& e : j["targets"]) t.targets.push_back(vec2_from_json(e, "target"));
        if (j.contains("residual_policy")) {
            std::string p = j["residual_policy"].get<std::string>();
            if (p == "reject") t.policy = ResidualPolicy::reject;
            else if (p == "absorb-into-last") t.policy = ResidualPolicy::absorb_into_last;
            else throw SchemaError("residual_policy must be 'reject' or 'absorb-into-last'");
        }
        pf.targets = std::move(t);
    }
    if (j.contains("kernel")) {
        const json& jk = j["kernel"];
        if (!jk.is_object() || !jk.contains("labels") || !jk.contains("weights"))
            throw SchemaError("'kernel' needs 'labels' and 'weights'");
        TransitionKernel k;
        for (const auto& l : jk["labels"]) k.labels.push_back(l.get<std::string>());
        for (const auto& w : jk["weights"]) k.weights.push_back(piecewise_poly_from_json(w));
        pf.kernel = std::move(k);
    }
    return pf;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open problem file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return problem_from_json(j);
}

} // namespace vmr
