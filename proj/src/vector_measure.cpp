#include "vmr/vector_measure.hpp"

#include <algorithm>
#include <cmath>

#include "vmr/errors.hpp"

namespace vmr {

VectorMeasure::VectorMeasure(std::vector<PiecewisePoly> densities)
    : densities_(std::move(densities)) {
    if (densities_.size() < 2 || densities_.size() > 3)
        throw SchemaError("vector measure needs 2 or 3 density components");
    std::vector<double> grid = merge_breakpoints(densities_);
    for (auto& d : densities_) {
        d = d.refined(grid);
        d.validate_nonnegative();
    }
}

std::vector<double> VectorMeasure::measure_of(const IntervalSet& s) const {
    std::vector<double> v(densities_.size());
    for (std::size_t i = 0; i < densities_.size(); ++i) v[i] = densities_[i].integrate(s);
    return v;
}

Vec2 VectorMeasure::measure2_of(const IntervalSet& s) const {
    return {densities_[0].integrate(s), densities_[1].integrate(s)};
}

VectorMeasure VectorMeasure::restricted(const IntervalSet& s) const {
    std::vector<PiecewisePoly> ds;
    ds.reserve(densities_.size());
    for (const auto& d : densities_) ds.push_back(d.restricted(s));
    return VectorMeasure(std::move(ds));
}

VectorMeasure VectorMeasure::component_pair(int i, int j) const {
    return VectorMeasure({densities_[static_cast<std::size_t>(i)],
                          densities_[static_cast<std::size_t>(j)]});
}

BasisChange BasisChange::identity() {
    return BasisChange{{{1.0, 0.0}, {0.0, 1.0}}, {{1.0, 0.0}, {0.0, 1.0}}};
}

BasisChange BasisChange::mixing() {
    // det = 1, exact integer inverse
    return BasisChange{{{1.0, 1.0}, {1.0, 2.0}}, {{2.0, -1.0}, {-1.0, 1.0}}};
}

bool BasisChange::is_identity() const {
    return d[0][0] == 1.0 && d[0][1] == 0.0 && d[1][0] == 0.0 && d[1][1] == 1.0;
}

Vec2 BasisChange::apply(Vec2 v) const {
    return {v.x * d[0][0] + v.y * d[1][0], v.x * d[0][1] + v.y * d[1][1]};
}

Vec2 BasisChange::apply_inverse(Vec2 v) const {
    return {v.x * dinv[0][0] + v.y * dinv[1][0], v.x * dinv[0][1] + v.y * dinv[1][1]};
}

namespace {

double coeff_scale(const Poly& p, double len) {
    return std::max({std::fabs(p.c[0]), std::fabs(p.c[1]) * len,
                     std::fabs(p.c[2]) * len * len});
}

// 0 = does not vanish at t, 1 = simple zero, 2 = double zero.
int vanish_order(const Poly& p, double t, double len, double scale) {
    double tol = 1e-12 * std::max(scale, 1e-30);
    if (std::fabs(p.eval(t)) > tol) return 0;
    if (std::fabs(p.deriv(t)) * len > tol) return 1;
    return 2;
}

// Points of [0, len] where p may vanish: endpoints, critical point, roots.
std::vector<double> zero_candidates(const Poly& p, double len) {
    std::vector<double> ts{0.0, len};
    if (p.c[2] != 0.0) {
        double tc = -p.c[1] / (2.0 * p.c[2]);
        if (tc > 0.0 && tc < len) ts.push_back(tc);
        double disc = p.c[1] * p.c[1] - 4.0 * p.c[2] * p.c[0];
        if (disc >= 0.0) {
            double sq = std::sqrt(disc);
            for (double r : {(-p.c[1] - sq) / (2.0 * p.c[2]), (-p.c[1] + sq) / (2.0 * p.c[2])})
                if (r > 0.0 && r < len) ts.push_back(r);
        }
    } else if (p.c[1] != 0.0) {
        double r = -p.c[0] / p.c[1];
        if (r > 0.0 && r < len) ts.push_back(r);
    }
    return ts;
}

} // namespace

bool pair_has_bounded_ratio(const VectorMeasure& mu) {
    const PiecewisePoly& g1 = mu.density(0);
    const PiecewisePoly& g2 = mu.density(1);
    const auto& grid = g1.breakpoints();
    double s1_all = 0.0, s2_all = 0.0;
    for (std::size_t i = 0; i < g1.piece_count(); ++i) {
        double len = grid[i + 1] - grid[i];
        s1_all = std::max(s1_all, coeff_scale(g1.pieces()[i], len));
        s2_all = std::max(s2_all, coeff_scale(g2.pieces()[i], len));
    }
    for (std::size_t i = 0; i < g1.piece_count(); ++i) {
        double len = grid[i + 1] - grid[i];
        const Poly& p1 = g1.pieces()[i];
        const Poly& p2 = g2.pieces()[i];
        bool z1 = coeff_scale(p1, len) <= 1e-14 * std::max(s1_all, 1e-30);
        bool z2 = coeff_scale(p2, len) <= 1e-14 * std::max(s2_all, 1e-30);
        if (z1 && z2) continue;      // dead piece, carries no mass at all
        if (z1 != z2) return false;  // singular part on this piece
        double sc1 = coeff_scale(p1, len);
        for (double t : zero_candidates(p1, len)) {
            int o1 = vanish_order(p1, t, len, sc1);
            if (o1 == 0) continue;
            if (vanish_order(p2, t, len, coeff_scale(p2, len)) < o1) return false;
        }
    }
    return true;
}

std::pair<VectorMeasure, BasisChange> ensure_equivalent(const VectorMeasure& mu) {
    if (mu.dimension() != 2)
        throw SchemaError("ensure_equivalent expects a two-dimensional measure");
    if (pair_has_bounded_ratio(mu)) return {mu, BasisChange::identity()};
    PiecewisePoly n1 = PiecewisePoly::linear_combination(1.0, mu.density(0), 1.0, mu.density(1));
    PiecewisePoly n2 = PiecewisePoly::linear_combination(1.0, mu.density(0), 2.0, mu.density(1));
    return {VectorMeasure({std::move(n1), std::move(n2)}), BasisChange::mixing()};
}

} // namespace vmr
