#include "test_support.hpp"

#include <algorithm>
#include <cmath>

namespace vmr::testing {

namespace {

Poly positive_quadratic(Rng& rng, double len) {
    double c0 = uniform(rng, 0.3, 1.5);
    double budget = c0 - 0.1;
    double c1 = uniform(rng, -1.0, 1.0) * budget / std::max(len, 1e-9) * 0.5;
    double c2 = uniform(rng, -1.0, 1.0) * budget / std::max(len * len, 1e-9) * 0.25;
    return Poly{{c0, c1, c2}};
}

IntervalSet take_mass(const IntervalSet& s, const PiecewisePoly& density, double mass,
                      bool from_left) {
    std::vector<Interval> parts;
    double remaining = mass;
    auto ivs = s.intervals();
    auto handle = [&](Interval iv) {
        if (remaining <= 0.0) return;
        double m = density.integrate(iv.lo, iv.hi);
        if (m <= remaining) {
            parts.push_back(iv);
            remaining -= m;
            return;
        }
        double lo = iv.lo, hi = iv.hi;
        if (from_left) {
            for (int k = 0; k < 100 && hi - lo > 1e-18; ++k) {
                double mid = 0.5 * (lo + hi);
                if (density.integrate(iv.lo, mid) >= remaining) hi = mid; else lo = mid;
            }
            parts.push_back({iv.lo, hi});
        } else {
            for (int k = 0; k < 100 && hi - lo > 1e-18; ++k) {
                double mid = 0.5 * (lo + hi);
                if (density.integrate(mid, iv.hi) >= remaining) lo = mid; else hi = mid;
            }
            parts.push_back({lo, iv.hi});
        }
        remaining = 0.0;
    };
    if (from_left) {
        for (auto it = ivs.begin(); it != ivs.end(); ++it) handle(*it);
    } else {
        for (auto it = ivs.rbegin(); it != ivs.rend(); ++it) handle(*it);
    }
    return IntervalSet::from_unsorted(std::move(parts));
}

} // namespace

VectorMeasure random_measure(Rng& rng, const MeasureGen& g) {
    int n = uniform_int(rng, g.min_pieces, g.max_pieces);
    std::vector<double> breaks{0.0};
    for (int i = 1; i < n; ++i) breaks.push_back(uniform(rng, 0.05, 0.95));
    breaks.push_back(1.0);
    std::sort(breaks.begin(), breaks.end());
    for (std::size_t i = 1; i < breaks.size(); ++i)
        breaks[i] = std::max(breaks[i], breaks[i - 1] + 0.02);
    breaks.back() = 1.0;

    std::vector<Poly> p1(static_cast<std::size_t>(n)), p2(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double len = breaks[static_cast<std::size_t>(i) + 1] - breaks[static_cast<std::size_t>(i)];
        auto idx = static_cast<std::size_t>(i);
        if (g.allow_singular && uniform(rng, 0.0, 1.0) < 0.3) {
            if (uniform(rng, 0.0, 1.0) < 0.5) {
                p1[idx] = Poly{{uniform(rng, 0.4, 1.6), 0.0, 0.0}};
                p2[idx] = Poly{};
            } else {
                p1[idx] = Poly{};
                p2[idx] = Poly{{uniform(rng, 0.4, 1.6), 0.0, 0.0}};
            }
            continue;
        }
        if (g.tame) {
            p1[idx] = positive_quadratic(rng, len);
            double r = uniform(rng, 0.8, 1.2);
            p2[idx] = r * p1[idx];
            // small linear tilt keeps the ratio span under ~0.2
            p2[idx].c[1] += uniform(rng, -0.05, 0.05) / std::max(len, 0.05);
            if (p2[idx].eval(0.0) < 0.05 || p2[idx].eval(len) < 0.05)
                p2[idx] = r * p1[idx];
        } else {
            switch (uniform_int(rng, 0, 2)) {
            case 0: { // flat ratio
                p1[idx] = Poly{{uniform(rng, 0.3, 1.5), 0.0, 0.0}};
                p2[idx] = uniform(rng, 0.2, 1.8) * p1[idx];
                break;
            }
            case 1: { // linear ratio over constant density
                double c = uniform(rng, 0.3, 1.5);
                double r0 = uniform(rng, 0.1, 1.8), r1 = uniform(rng, 0.1, 1.8);
                p1[idx] = Poly{{c, 0.0, 0.0}};
                p2[idx] = Poly{{c * r0, c * (r1 - r0) / std::max(len, 1e-9), 0.0}};
                break;
            }
            default:
                p1[idx] = positive_quadratic(rng, len);
                p2[idx] = positive_quadratic(rng, len);
            }
        }
    }
    return VectorMeasure({PiecewisePoly(breaks, std::move(p1)),
                          PiecewisePoly(breaks, std::move(p2))});
}

IntervalSet random_interval_set(Rng& rng, int max_intervals) {
    int k = uniform_int(rng, 1, max_intervals);
    std::vector<double> pts;
    for (int i = 0; i < 2 * k; ++i) pts.push_back(uniform(rng, 0.0, 1.0));
    std::sort(pts.begin(), pts.end());
    std::vector<Interval> ivs;
    for (int i = 0; i < k; ++i) {
        double lo = pts[static_cast<std::size_t>(2 * i)];
        double hi = pts[static_cast<std::size_t>(2 * i + 1)];
        if (hi - lo > 1e-3) ivs.push_back({lo, hi});
    }
    if (ivs.empty()) ivs.push_back({0.25, 0.75});
    return IntervalSet::from_unsorted(std::move(ivs));
}

ConvexRegion random_polygon(Rng& rng, int max_points, double radius) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        int n = uniform_int(rng, 3, max_points);
        std::vector<Vec2> pts;
        for (int i = 0; i < n; ++i)
            pts.push_back({uniform(rng, -radius, radius), uniform(rng, -radius, radius)});
        ConvexRegion r = ConvexRegion::hull_of(std::move(pts));
        if (r.is_polygon()) return r;
    }
    return ConvexRegion::hull_of({{0, 0}, {1, 0}, {0, 1}});
}

std::vector<IntervalSet> random_partition(Rng& rng, int n) {
    int cells = std::max(n, 2 * n - 1 + uniform_int(rng, 0, n));
    std::vector<double> pts{0.0, 1.0};
    for (int i = 1; i < cells; ++i) pts.push_back(uniform(rng, 0.01, 0.99));
    std::sort(pts.begin(), pts.end());
    std::vector<std::vector<Interval>> blocks(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        int label = (i < static_cast<std::size_t>(n))
                        ? static_cast<int>(i) // every block gets at least one cell
                        : uniform_int(rng, 0, n - 1);
        blocks[static_cast<std::size_t>(label)].push_back({pts[i], pts[i + 1]});
    }
    std::vector<IntervalSet> out;
    out.reserve(static_cast<std::size_t>(n));
    for (auto& b : blocks) out.push_back(IntervalSet::from_unsorted(std::move(b)));
    return out;
}

IntervalSet leftmost_mass_subset(const IntervalSet& s, const PiecewisePoly& density,
                                 double mass) {
    return take_mass(s, density, mass, true);
}

IntervalSet rightmost_mass_subset(const IntervalSet& s, const PiecewisePoly& density,
                                  double mass) {
    return take_mass(s, density, mass, false);
}

std::optional<IntervalSet> perturb_preserving(Rng& rng, const VectorMeasure& mu,
                                              const IntervalSet& z) {
    const PiecewisePoly& d1 = mu.density(0);
    const PiecewisePoly& d2 = mu.density(1);
    IntervalSet comp = z.complement();
    if (comp.is_empty() || z.is_empty()) return std::nullopt;

    for (int attempt = 0; attempt < 60; ++attempt) {
        // window inside the complement
        double cm = d1.integrate(comp);
        if (cm <= 1e-9) return std::nullopt;
        double w = cm * uniform(rng, 0.05, 0.3);
        double off = uniform(rng, 0.0, cm - w);
        IntervalSet skip = leftmost_mass_subset(comp, d1, off);
        IntervalSet rest = comp.set_minus(skip);
        IntervalSet k_mid = leftmost_mass_subset(rest, d1, w);
        double target = d2.integrate(k_mid);

        // split z at the middle window and rebalance across it
        double lo_edge = k_mid.intervals().front().lo;
        IntervalSet z_left = z.set_intersect(IntervalSet{{0.0, lo_edge}});
        IntervalSet z_right = z.set_minus(z_left);
        double avail_lo = d1.integrate(z_left);
        double avail_hi = d1.integrate(z_right);
        if (avail_lo + avail_hi < w + 1e-12) continue;

        double blo = std::max(0.0, w - avail_hi) / w;
        double bhi = std::min(1.0, avail_lo / w);
        if (blo > bhi) continue;
        auto swap_pair = [&](double beta) {
            IntervalSet k_lo = rightmost_mass_subset(z_left, d1, beta * w);
            IntervalSet k_hi = leftmost_mass_subset(z_right, d1, (1.0 - beta) * w);
            return k_lo.set_union(k_hi);
        };
        auto mu2_at = [&](double beta) { return d2.integrate(swap_pair(beta)); };
        double flo = mu2_at(bhi) - target; // most mass taken low -> smallest mu2
        double fhi = mu2_at(blo) - target;
        if (flo > 1e-12 || fhi < -1e-12) continue; // cannot balance this window
        double a = blo, b = bhi;
        for (int k = 0; k < 100 && b - a > 1e-15; ++k) {
            double mid = 0.5 * (a + b);
            if (mu2_at(mid) - target >= 0.0) a = mid; else b = mid;
        }
        IntervalSet removed = swap_pair(0.5 * (a + b));
        IntervalSet z2 = z.set_minus(removed).set_union(k_mid);
        if (z2.symmetric_difference_length(z) < 1e-6) continue;
        Vec2 before = mu.measure2_of(z);
        Vec2 after = mu.measure2_of(z2);
        if (norm_inf(after - before) > 1e-9) continue;
        return z2;
    }
    return std::nullopt;
}

} // namespace vmr::testing
