#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "vmr/errors.hpp"
#include "vmr/examples.hpp"
#include "vmr/json_io.hpp"
#include "vmr/oracle.hpp"
#include "vmr/svg.hpp"

namespace fs = std::filesystem;
using vmr::json;

namespace {

struct Options {
    std::string problem;
    std::string out_dir;
    double tol = 1e-9;
    int cells = 256;
    std::uint64_t seed = 1;
};

fs::path out_path(const Options& opt, const std::string& name) {
    fs::path dir = opt.out_dir;
    fs::create_directories(dir);
    return dir / name;
}

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw vmr::Error("cannot write " + p.string());
    f << text;
}

void write_json(const fs::path& p, const json& j) { write_text(p, j.dump(2) + "\n"); }

vmr::ProblemFile require_problem(const Options& opt) {
    if (opt.problem.empty()) throw vmr::SchemaError("this command needs --problem <file>");
    return vmr::load_problem(opt.problem);
}

vmr::RangeOptions range_options(const Options& opt) {
    vmr::RangeOptions r;
    r.membership_tol = opt.tol;
    return r;
}

std::string range_csv(const vmr::RangeResult& r) {
    std::string csv = "a,lower,upper\n";
    auto upper = vmr::upper_chain(r.region);
    char buf[96];
    for (vmr::Vec2 v : r.lower_boundary) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", v.x, v.y,
                      vmr::chain_value_at(upper, v.x));
        csv += buf;
    }
    return csv;
}

int cmd_range(const Options& opt) {
    auto pf = require_problem(opt);
    vmr::RangeResult r = vmr::compute_range(pf.measure, range_options(opt));
    write_json(out_path(opt, "range.json"), vmr::to_json(r));
    write_text(out_path(opt, "range.csv"), range_csv(r));
    write_text(out_path(opt, "range.svg"),
               vmr::figure_svg(r.region, vmr::ConvexRegion::empty(),
                               vmr::ConvexRegion::empty(), "range"));
    std::printf("range: %zu vertices, total (%.12g, %.12g), sampling error bound %.3g\n",
                r.region.vertex_count(), r.total.x, r.total.y, r.sampling_error_bound);
    return 0;
}

int cmd_qset(const Options& opt) {
    auto pf = require_problem(opt);
    if (!pf.p) throw vmr::SchemaError("qset needs a 'p' vector in the problem file");
    vmr::RangeResult r = vmr::compute_range(pf.measure, range_options(opt));
    vmr::ConvexRegion q = vmr::q_set(r, *pf.p, opt.tol);
    write_json(out_path(opt, "qset.json"),
               json{{"p", {pf.p->x, pf.p->y}}, {"region", vmr::to_json(q)}});
    std::printf("qset: %zu vertices\n", q.vertex_count());
    return 0;
}

int cmd_maximal(const Options& opt) {
    auto pf = require_problem(opt);
    if (!pf.p) throw vmr::SchemaError("maximal needs a 'p' vector in the problem file");
    vmr::MaximalSetResult res = vmr::maximal_subset(pf.measure, *pf.p, range_options(opt));
    write_json(out_path(opt, "maximal.json"),
               json{{"p", {pf.p->x, pf.p->y}},
                    {"z_star", vmr::to_json(res.z_star)},
                    {"a_star", res.a_star},
                    {"achieved", {res.achieved.x, res.achieved.y}},
                    {"q_region", vmr::to_json(res.q_region)}});
    std::printf("maximal subset: %zu intervals, a* = %.12g, measure (%.12g, %.12g)\n",
                res.z_star.size(), res.a_star, res.achieved.x, res.achieved.y);
    return 0;
}

int cmd_minimal(const Options& opt) {
    auto pf = require_problem(opt);
    if (!pf.q) throw vmr::SchemaError("minimal needs a 'q' vector in the problem file");
    vmr::MinimalSetResult res = vmr::minimal_subset(pf.measure, *pf.q, range_options(opt));
    write_json(out_path(opt, "minimal.json"),
               json{{"q", {pf.q->x, pf.q->y}},
                    {"m_star", vmr::to_json(res.m_star)},
                    {"achieved", {res.achieved.x, res.achieved.y}},
                    {"region", vmr::to_json(res.region)}});
    std::printf("minimal subset: %zu intervals, measure (%.12g, %.12g)\n",
                res.m_star.size(), res.achieved.x, res.achieved.y);
    return 0;
}

int cmd_purify(const Options& opt) {
    auto pf = require_problem(opt);
    vmr::TargetAllocation targets;
    std::vector<std::string> labels;
    if (pf.kernel) {
        targets = vmr::kernel_targets(*pf.kernel, pf.measure);
        labels = pf.kernel->labels;
    } else if (pf.targets) {
        targets = *pf.targets;
    } else {
        throw vmr::SchemaError("purify needs 'targets' or 'kernel' in the problem file");
    }
    for (std::size_t i = labels.size(); i < targets.targets.size(); ++i)
        labels.push_back(std::to_string(i + 1));

    vmr::RangeResult range = vmr::compute_range(pf.measure, range_options(opt));
    vmr::FeasibilityReport feas = vmr::check_conditions(targets, range, opt.tol, opt.seed);
    if (!feas.feasible()) {
        write_json(out_path(opt, "purify.json"),
                   json{{"error", "infeasible targets"}, {"feasibility", vmr::to_json(feas)}});
        std::printf("purify: infeasible (see purify.json)\n");
        return 1;
    }
    std::vector<vmr::IntervalSet> parts = vmr::purify(targets, pf.measure, range_options(opt));
    vmr::PartitionReport rep = vmr::verify_partition(parts, targets, pf.measure);
    json jp = json::array();
    for (std::size_t i = 0; i < parts.size(); ++i)
        jp.push_back(json{{"label", labels[i]}, {"intervals", vmr::to_json(parts[i])}});
    write_json(out_path(opt, "purify.json"),
               json{{"parts", std::move(jp)},
                    {"feasibility", vmr::to_json(feas)},
                    {"report", vmr::to_json(rep)}});
    std::printf("purify: %zu blocks, max measure deviation %.3g\n", parts.size(),
                rep.max_deviation);
    return rep.ok() ? 0 : 1;
}

int cmd_counterexample(const Options& opt) {
    vmr::CertificateReport rep = vmr::certify_counterexample();
    write_json(out_path(opt, "counterexample.json"), vmr::to_json(rep));
    for (const auto& c : rep.checks)
        std::printf("%-55s %s (margin %.3g)\n", c.name.c_str(),
                    c.passed ? "pass" : "FAIL", c.margin);
    return rep.all_passed ? 0 : 1;
}

int cmd_figure(const Options& opt, const std::string& which) {
    vmr::VectorMeasure mu = which == "a"   ? vmr::examples::singular_pair()
                            : which == "b" ? vmr::examples::step_ratio()
                                           : vmr::examples::linear_ratio();
    vmr::Vec2 p{0.7, 0.8};
    vmr::RangeResult r = vmr::compute_range(mu, range_options(opt));
    vmr::ConvexRegion q = vmr::q_set(r, p, opt.tol);
    vmr::ConvexRegion shifted = r.region.translated(p - r.total);
    std::string svg = vmr::figure_svg(r.region, shifted, q, "figure " + which);
    write_text(out_path(opt, "figure_" + which + ".svg"), svg);
    std::printf("figure %s written\n", which.c_str());
    return 0;
}

int cmd_oracle_compare(const Options& opt) {
    auto pf = require_problem(opt);
    vmr::RangeResult r = vmr::compute_range(pf.measure, range_options(opt));
    vmr::AtomGrid grid = vmr::AtomGrid::build(pf.measure, opt.cells);
    double gap = vmr::hausdorff(vmr::zonogon(grid), r.region);
    json out{{"cells", opt.cells},
             {"max_cell_mass", grid.max_cell_mass()},
             {"range_vs_zonogon_hausdorff", gap}};
    std::printf("cells %d: hausdorff(zonogon, range) = %.6g (max cell mass %.6g)\n",
                opt.cells, gap, grid.max_cell_mass());

    if (pf.p && opt.cells <= 16) {
        vmr::ConvexRegion q = vmr::q_set(r, *pf.p, opt.tol);
        vmr::Vec2 eps = vmr::default_qset_eps(grid);
        vmr::QSetCloud cloud = vmr::brute_force_qset(grid, *pf.p, eps);
        double qgap = vmr::hausdorff(cloud.hull, q);
        out["qset_vs_bruteforce_hausdorff"] = qgap;
        out["eps"] = {eps.x, eps.y};
        out["cloud_points"] = cloud.points.size();
        std::printf("qset vs brute force: hausdorff = %.6g over %zu cloud points\n",
                    qgap, cloud.points.size());
    }
    write_json(out_path(opt, "oracle_compare.json"), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ranges of two-dimensional vector measures: maximal/minimal "
                 "subsets, shift-intersect sets, partitions, and a brute-force "
                 "cross-check"};
    app.require_subcommand(1);

    Options opt;
    if (const char* env = std::getenv("VMRANGE_OUT")) opt.out_dir = env;
    if (opt.out_dir.empty()) opt.out_dir = ".";
    app.add_option("--problem", opt.problem, "problem JSON file");
    app.add_option("--out", opt.out_dir, "output directory");
    app.add_option("--tol", opt.tol, "membership tolerance (default 1e-9)");
    app.add_option("--cells", opt.cells, "oracle cell count (default 256)");
    app.add_option("--seed", opt.seed, "seed for sampled feasibility checks");

    auto* range = app.add_subcommand("range", "range polygon, CSV boundary and SVG");
    auto* qset = app.add_subcommand("qset", "shift-intersect set for p");
    auto* maximal = app.add_subcommand("maximal", "maximal subset with measure p");
    auto* minimal = app.add_subcommand("minimal", "minimal subset with measure q");
    auto* purify = app.add_subcommand("purify", "partition [0,1] to match the targets");
    auto* counter = app.add_subcommand("counterexample",
                                       "certify the three-dimensional no-maximal-subset instance");
    auto* figure = app.add_subcommand("figure", "built-in illustration a, b or c");
    std::string which = "a";
    figure->add_option("which", which, "a | b | c")->check(CLI::IsMember({"a", "b", "c"}));
    auto* oracle = app.add_subcommand("oracle-compare", "hausdorff gaps vs the discrete oracle");

    CLI11_PARSE(app, argc, argv);

    try {
        if (range->parsed()) return cmd_range(opt);
        if (qset->parsed()) return cmd_qset(opt);
        if (maximal->parsed()) return cmd_maximal(opt);
        if (minimal->parsed()) return cmd_minimal(opt);
        if (purify->parsed()) return cmd_purify(opt);
        if (counter->parsed()) return cmd_counterexample(opt);
        if (figure->parsed()) return cmd_figure(opt, which);
        if (oracle->parsed()) return cmd_oracle_compare(opt);
    } catch (const vmr::SchemaError& e) {
        std::cout << json{{"error", {{"kind", "schema"}, {"message", e.what()}}}}.dump() << "\n";
        return 2;
    } catch (const vmr::Error& e) {
        std::cout << json{{"error", {{"kind", "infeasible"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 0;
}
