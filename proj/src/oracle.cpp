#include "vmr/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "vmr/errors.hpp"

namespace vmr {

AtomGrid AtomGrid::build(const VectorMeasure& mu, int n) {
    if (mu.dimension() != 2) throw SchemaError("atom grid expects a two-dimensional measure");
    if (n < 1) throw SchemaError("atom grid needs at least one cell");
    AtomGrid g;
    g.cells = n;
    g.atoms.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double lo = static_cast<double>(i) / n;
        double hi = static_cast<double>(i + 1) / n;
        g.atoms.push_back({mu.density(0).integrate(lo, hi), mu.density(1).integrate(lo, hi)});
    }
    return g;
}

Vec2 AtomGrid::total() const {
    Vec2 s{0.0, 0.0};
    for (Vec2 v : atoms) s = s + v;
    return s;
}

double AtomGrid::max_cell_mass() const {
    double m = 0.0;
    for (Vec2 v : atoms) m = std::max(m, norm_inf(v));
    return m;
}

ConvexRegion zonogon(const AtomGrid& grid) {
    std::vector<Vec2> gens;
    for (Vec2 v : grid.atoms)
        if (norm(v) > 1e-15) gens.push_back(v);
    std::sort(gens.begin(), gens.end(), [](Vec2 a, Vec2 b) {
        return std::atan2(a.y, a.x) < std::atan2(b.y, b.x);
    });
    // prefix sums of the angle-sorted generators trace one boundary chain;
    // the opposite chain follows by central symmetry
    std::vector<Vec2> pts{{0.0, 0.0}};
    Vec2 acc{0.0, 0.0};
    for (Vec2 v : gens) {
        acc = acc + v;
        pts.push_back(acc);
    }
    Vec2 total = acc;
    std::size_t chain = pts.size();
    for (std::size_t i = 0; i < chain; ++i) pts.push_back(total - pts[i]);
    return ConvexRegion::hull_of(std::move(pts));
}

Vec2 default_qset_eps(const AtomGrid& atoms) {
    double mx = 0.0, my = 0.0;
    for (Vec2 v : atoms.atoms) {
        mx = std::max(mx, std::fabs(v.x));
        my = std::max(my, std::fabs(v.y));
    }
    return {1.5 * mx, 1.5 * my};
}

QSetCloud brute_force_qset(const AtomGrid& atoms, Vec2 p, Vec2 eps) {
    int n = atoms.cells;
    if (n > 16) throw TooLarge("brute-force pair enumeration capped at 16 cells");

    std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);
    std::vector<Vec2> sums(static_cast<std::size_t>(full) + 1, Vec2{0.0, 0.0});
    for (std::uint32_t m = 1; m <= full; ++m) {
        std::uint32_t low = m & (~m + 1u);
        int bit = std::countr_zero(low);
        sums[m] = sums[m ^ low] + atoms.atoms[static_cast<std::size_t>(bit)];
    }

    QSetCloud out;
    for (std::uint32_t s = 0; s <= full; ++s) {
        Vec2 ms = sums[s];
        if (std::fabs(ms.x - p.x) > eps.x || std::fabs(ms.y - p.y) > eps.y) continue;
        // all submasks of s, including empty and s itself
        std::uint32_t t = s;
        while (true) {
            out.points.push_back(sums[t]);
            if (t == 0) break;
            t = (t - 1) & s;
        }
    }
    out.hull = ConvexRegion::hull_of(out.points);
    return out;
}

std::optional<std::vector<int>> brute_force_partition(const AtomGrid& atoms,
                                                      std::span<const Vec2> targets,
                                                      Vec2 eps) {
    int n = atoms.cells;
    int k = static_cast<int>(targets.size());
    if (n > 14 || k > 3) throw TooLarge("brute-force partition capped at 14 cells / 3 labels");
    if (k == 0) return std::nullopt;

    std::vector<int> label(static_cast<std::size_t>(n), 0);
    std::vector<Vec2> sums(static_cast<std::size_t>(k), Vec2{0.0, 0.0});

    auto feasible = [&]() {
        for (int a = 0; a < k; ++a) {
            if (std::fabs(sums[static_cast<std::size_t>(a)].x - targets[static_cast<std::size_t>(a)].x) > eps.x ||
                std::fabs(sums[static_cast<std::size_t>(a)].y - targets[static_cast<std::size_t>(a)].y) > eps.y)
                return false;
        }
        return true;
    };

    // odometer over k^n assignments, cells in index order
    std::size_t i = 0;
    for (auto& s : sums) s = Vec2{0.0, 0.0};
    for (int c = 0; c < n; ++c) sums[0] = sums[0] + atoms.atoms[static_cast<std::size_t>(c)];
    while (true) {
        if (feasible()) return label;
        // advance odometer
        i = 0;
        while (i < static_cast<std::size_t>(n)) {
            int& l = label[i];
            sums[static_cast<std::size_t>(l)] = sums[static_cast<std::size_t>(l)] - atoms.atoms[i];
            if (l + 1 < k) {
                ++l;
                sums[static_cast<std::size_t>(l)] = sums[static_cast<std::size_t>(l)] + atoms.atoms[i];
                break;
            }
            l = 0;
            sums[0] = sums[0] + atoms.atoms[i];
            ++i;
        }
        if (i == static_cast<std::size_t>(n)) return std::nullopt;
    }
}

} // namespace vmr
