#include "vmr/level_profile.hpp"

#include <algorithm>
#include <cmath>

#include "vmr/errors.hpp"

namespace vmr {

namespace {

double coeff_scale(const Poly& p, double len) {
    return std::max({std::fabs(p.c[0]), std::fabs(p.c[1]) * len,
                     std::fabs(p.c[2]) * len * len});
}

// f = p2/p1 with l'Hopital fallbacks where the densities vanish together.
double ratio_at(const Poly& p2, const Poly& p1, double t, double len, double s1) {
    double tol = 1e-12 * std::max(s1, 1e-300);
    double v1 = p1.eval(t);
    if (std::fabs(v1) > tol) return p2.eval(t) / v1;
    double d1 = p1.deriv(t);
    if (std::fabs(d1) * std::max(len, 1e-300) > tol) return p2.deriv(t) / d1;
    return p1.c[2] != 0.0 ? p2.c[2] / p1.c[2] : 0.0;
}

// Numerator of f' for f = p2/p1; degree <= 2 because the cubic terms cancel.
Poly wronskian(const Poly& p1, const Poly& p2) {
    const auto& a = p1.c;
    const auto& b = p2.c;
    return Poly{{a[0] * b[1] - a[1] * b[0],
                 2.0 * (a[0] * b[2] - a[2] * b[0]),
                 a[1] * b[2] - a[2] * b[1]}};
}

std::vector<double> roots_in(const Poly& p, double len) {
    std::vector<double> rs;
    if (p.c[2] != 0.0) {
        double disc = p.c[1] * p.c[1] - 4.0 * p.c[2] * p.c[0];
        if (disc >= 0.0) {
            double sq = std::sqrt(disc);
            for (double r : {(-p.c[1] - sq) / (2.0 * p.c[2]),
                             (-p.c[1] + sq) / (2.0 * p.c[2])})
                if (r > 0.0 && r < len) rs.push_back(r);
        }
    } else if (p.c[1] != 0.0) {
        double r = -p.c[0] / p.c[1];
        if (r > 0.0 && r < len) rs.push_back(r);
    }
    return rs;
}

// Local boundary t of {f <= l} within a monotone piece, by sign bisection of
// p2 - l*p1. Deterministic and monotone in l.
double invert_level(const ProfilePiece& pc, double l) {
    double len = pc.x1 - pc.x0;
    auto q = [&](double t) { return pc.p2.eval(t) - l * pc.p1.eval(t); };
    double lo = 0.0, hi = len;
    if (pc.kind == PieceKind::increasing) {
        for (int k = 0; k < 100 && hi - lo > 1e-18; ++k) {
            double mid = 0.5 * (lo + hi);
            if (q(mid) >= 0.0) hi = mid; else lo = mid;
        }
    } else {
        for (int k = 0; k < 100 && hi - lo > 1e-18; ++k) {
            double mid = 0.5 * (lo + hi);
            if (q(mid) >= 0.0) lo = mid; else hi = mid;
        }
    }
    return hi;
}

// t with integral of p from 0 to t equal to target (mass-domain bisection,
// perfectly conditioned).
double invert_mass(const Poly& p, double len, double target) {
    target = std::clamp(target, 0.0, p.integral(len));
    double lo = 0.0, hi = len;
    for (int k = 0; k < 100 && hi - lo > 1e-18; ++k) {
        double mid = 0.5 * (lo + hi);
        if (p.integral(mid) >= target) hi = mid; else lo = mid;
    }
    return hi;
}

} // namespace

LevelProfile LevelProfile::build(const VectorMeasure& mu) {
    if (mu.dimension() != 2)
        throw SchemaError("level profile expects a two-dimensional measure");
    if (!pair_has_bounded_ratio(mu))
        throw NonEquivalent("density ratio is unbounded or the pair is singular; "
                            "apply ensure_equivalent first");

    LevelProfile pr;
    {
        // refine where the ratio changes monotonicity
        const auto& grid = mu.grid();
        std::vector<double> extra;
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            double len = grid[i + 1] - grid[i];
            Poly w = wronskian(mu.density(0).pieces()[i], mu.density(1).pieces()[i]);
            for (double r : roots_in(w, len)) extra.push_back(grid[i] + r);
        }
        pr.g1_ = mu.density(0).refined(extra);
        pr.g2_ = mu.density(1).refined(extra);
    }

    const auto& bks = pr.g1_.breakpoints();
    double s1_all = 0.0, s2_all = 0.0;
    for (std::size_t i = 0; i + 1 < bks.size(); ++i) {
        double len = bks[i + 1] - bks[i];
        s1_all = std::max(s1_all, coeff_scale(pr.g1_.pieces()[i], len));
        s2_all = std::max(s2_all, coeff_scale(pr.g2_.pieces()[i], len));
    }

    for (std::size_t i = 0; i + 1 < bks.size(); ++i) {
        double len = bks[i + 1] - bks[i];
        const Poly& p1 = pr.g1_.pieces()[i];
        const Poly& p2 = pr.g2_.pieces()[i];
        double s1 = coeff_scale(p1, len), s2 = coeff_scale(p2, len);
        if (s1 <= 1e-14 * std::max(s1_all, 1e-300) &&
            s2 <= 1e-14 * std::max(s2_all, 1e-300))
            continue; // dead piece

        ProfilePiece pc;
        pc.x0 = bks[i];
        pc.x1 = bks[i + 1];
        pc.p1 = p1;
        pc.p2 = p2;
        pc.mass1 = p1.integral(len);
        pc.mass2 = p2.integral(len);
        pc.level_left = ratio_at(p2, p1, 0.0, len, s1);
        pc.level_right = ratio_at(p2, p1, len, len, s1);

        Poly w = wronskian(p1, p2);
        double level_tol = 1e-12 * (1.0 + std::fabs(pc.level_left) + std::fabs(pc.level_right));
        if (coeff_scale(w, len) <= 1e-12 * std::max(s1 * s2, 1e-300) ||
            std::fabs(pc.level_right - pc.level_left) <= level_tol) {
            pc.kind = PieceKind::constant;
            double level = ratio_at(p2, p1, 0.5 * len, len, s1);
            pc.level_left = pc.level_right = level;
        } else {
            pc.kind = w.eval(0.5 * len) > 0.0 ? PieceKind::increasing
                                              : PieceKind::decreasing;
        }
        pc.level_lo = std::min(pc.level_left, pc.level_right);
        pc.level_hi = std::max(pc.level_left, pc.level_right);
        pr.pieces_.push_back(pc);
    }

    // snap piece levels onto a deduplicated critical grid
    std::vector<double> levels;
    for (const auto& pc : pr.pieces_) {
        levels.push_back(pc.level_left);
        levels.push_back(pc.level_right);
    }
    std::sort(levels.begin(), levels.end());
    for (double l : levels) {
        if (pr.crit_.empty() || l - pr.crit_.back() > 1e-12 * (1.0 + std::fabs(l)))
            pr.crit_.push_back(l);
    }
    auto snap = [&](double l) {
        auto it = std::lower_bound(pr.crit_.begin(), pr.crit_.end(), l);
        double best = it != pr.crit_.end() ? *it : pr.crit_.back();
        if (it != pr.crit_.begin() &&
            std::fabs(*(it - 1) - l) < std::fabs(best - l))
            best = *(it - 1);
        return best;
    };
    for (auto& pc : pr.pieces_) {
        pc.level_left = snap(pc.level_left);
        pc.level_right = snap(pc.level_right);
        pc.level_lo = std::min(pc.level_left, pc.level_right);
        pc.level_hi = std::max(pc.level_left, pc.level_right);
    }

    // flat levels: constant pieces grouped by (snapped) level
    std::vector<std::size_t> const_pieces;
    for (std::size_t i = 0; i < pr.pieces_.size(); ++i)
        if (pr.pieces_[i].kind == PieceKind::constant) const_pieces.push_back(i);
    std::sort(const_pieces.begin(), const_pieces.end(),
              [&](std::size_t a, std::size_t b) {
                  return pr.pieces_[a].level_left < pr.pieces_[b].level_left;
              });
    for (std::size_t idx : const_pieces) {
        ProfilePiece& pc = pr.pieces_[idx];
        if (pr.flats_.empty() || pr.flats_.back().level != pc.level_left) {
            pr.flats_.push_back({pc.level_left, IntervalSet::empty(), 0.0});
        }
        FlatLevel& fl = pr.flats_.back();
        fl.set = fl.set.set_union(IntervalSet{{pc.x0, pc.x1}});
        fl.mass1 += pc.mass1;
        pc.flat_index = static_cast<int>(pr.flats_.size()) - 1;
    }

    for (const auto& pc : pr.pieces_) {
        pr.total1_ += pc.mass1;
        pr.total2_ += pc.mass2;
    }
    pr.mass_at_crit_.reserve(pr.crit_.size());
    for (double l : pr.crit_) {
        pr.mass_at_crit_.push_back(pr.sublevel_mass(l));
        pr.strict_mass_at_crit_.push_back(pr.strict_sublevel_mass(l));
    }
    return pr;
}

double LevelProfile::max_level() const { return crit_.empty() ? 0.0 : crit_.back(); }

namespace {

// mass of one piece inside {f <= l} (or {f < l}); constant pieces are the
// only place strictness matters, the rest is atomless
double piece_sublevel(const ProfilePiece& pc, double l, bool strict, bool second) {
    const Poly& p = second ? pc.p2 : pc.p1;
    double full = second ? pc.mass2 : pc.mass1;
    switch (pc.kind) {
    case PieceKind::constant:
        return (strict ? pc.level_left < l : pc.level_left <= l) ? full : 0.0;
    case PieceKind::increasing:
        if (l >= pc.level_right) return full;
        if (l <= pc.level_left) return 0.0;
        return p.integral(invert_level(pc, l));
    default: // decreasing
        if (l >= pc.level_left) return full;
        if (l <= pc.level_right) return 0.0;
        return full - p.integral(invert_level(pc, l));
    }
}

} // namespace

double LevelProfile::sublevel_mass(double l) const {
    double acc = 0.0;
    for (const auto& pc : pieces_) acc += piece_sublevel(pc, l, false, false);
    return acc;
}

double LevelProfile::sublevel_mass2(double l) const {
    double acc = 0.0;
    for (const auto& pc : pieces_) acc += piece_sublevel(pc, l, false, true);
    return acc;
}

double LevelProfile::strict_sublevel_mass(double l) const {
    double acc = 0.0;
    for (const auto& pc : pieces_) acc += piece_sublevel(pc, l, true, false);
    return acc;
}

double LevelProfile::strict_sublevel_mass2(double l) const {
    double acc = 0.0;
    for (const auto& pc : pieces_) acc += piece_sublevel(pc, l, true, true);
    return acc;
}

LevelProfile::Quantile LevelProfile::quantile(double a) const {
    if (a < -1e-9 || a > total1_ + 1e-9)
        throw OutOfRange("mass argument outside [0, mu1(X)]");
    a = std::clamp(a, 0.0, total1_);
    if (a <= 0.0 || crit_.empty()) return {0.0, -1};

    auto flat_at = [&](double l) {
        for (std::size_t j = 0; j < flats_.size(); ++j)
            if (flats_[j].level == l) return static_cast<int>(j);
        return -1;
    };

    auto it = std::lower_bound(mass_at_crit_.begin(), mass_at_crit_.end(), a);
    if (it == mass_at_crit_.end()) it = mass_at_crit_.end() - 1;
    std::size_t i = static_cast<std::size_t>(it - mass_at_crit_.begin());
    double lc = crit_[i];
    if (i == 0 || a > strict_mass_at_crit_[i]) return {lc, flat_at(lc)};

    double lo = crit_[i - 1], hi = lc;
    for (int k = 0; k < 100 && hi - lo > 4e-17 * std::max(1.0, std::fabs(hi)); ++k) {
        double mid = 0.5 * (lo + hi);
        if (sublevel_mass(mid) >= a) hi = mid; else lo = mid;
    }
    return {hi, hi == lc ? flat_at(lc) : -1};
}

LevelProfile::Collected LevelProfile::collect_below(double level, int flat_index) const {
    Collected out;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const ProfilePiece& pc = pieces_[i];
        if (pc.kind == PieceKind::constant) {
            if (pc.flat_index == flat_index) continue; // filled separately
            if (pc.level_left < level) {
                out.parts.push_back({pc.x0, pc.x1});
                out.mass += pc.mass1;
            }
        } else if (pc.kind == PieceKind::increasing) {
            if (level >= pc.level_right) {
                out.parts.push_back({pc.x0, pc.x1});
                out.mass += pc.mass1;
            } else if (level > pc.level_left) {
                double t = invert_level(pc, level);
                out.parts.push_back({pc.x0, pc.x0 + t});
                out.mass += pc.p1.integral(t);
                out.cuts.push_back({i, t});
            }
        } else {
            if (level >= pc.level_left) {
                out.parts.push_back({pc.x0, pc.x1});
                out.mass += pc.mass1;
            } else if (level > pc.level_right) {
                double t = invert_level(pc, level);
                out.parts.push_back({pc.x0 + t, pc.x1});
                out.mass += pc.mass1 - pc.p1.integral(t);
                out.cuts.push_back({i, t});
            }
        }
    }
    return out;
}

IntervalSet LevelProfile::lower_set(double a) const {
    Quantile q = quantile(a);
    a = std::clamp(a, 0.0, total1_);
    Collected col = collect_below(q.level, q.flat_index);

    if (q.flat_index >= 0) {
        const FlatLevel& fl = flats_[static_cast<std::size_t>(q.flat_index)];
        double c = std::clamp(a - col.mass, 0.0, fl.mass1);
        for (const auto& iv : fl.set.intervals()) {
            if (c <= 0.0) break;
            double m = g1_.integrate(iv.lo, iv.hi);
            if (m <= c) {
                col.parts.push_back(iv);
                c -= m;
            } else {
                // leftmost fill: split the straddled interval in the mass domain
                double lo = iv.lo, hi = iv.hi;
                for (int k = 0; k < 100 && hi - lo > 1e-18; ++k) {
                    double mid = 0.5 * (lo + hi);
                    if (g1_.integrate(iv.lo, mid) >= c) hi = mid; else lo = mid;
                }
                col.parts.push_back({iv.lo, hi});
                c = 0.0;
            }
        }
    } else if (!col.cuts.empty()) {
        // repair the bisection residual on the rightmost partial piece so
        // that mu1(L_a) = a holds to machine precision
        double delta = a - col.mass;
        for (auto cut = col.cuts.rbegin(); cut != col.cuts.rend() && delta != 0.0; ++cut) {
            const ProfilePiece& pc = pieces_[cut->piece];
            double len = pc.x1 - pc.x0;
            double cur = pc.p1.integral(cut->t);
            double target = pc.kind == PieceKind::increasing ? cur + delta : cur - delta;
            double t2 = invert_mass(pc.p1, len, target);
            for (auto& part : col.parts) {
                if (pc.kind == PieceKind::increasing &&
                    part.lo == pc.x0 && part.hi == pc.x0 + cut->t) {
                    part.hi = pc.x0 + t2;
                    delta -= pc.p1.integral(t2) - cur;
                    break;
                }
                if (pc.kind == PieceKind::decreasing &&
                    part.lo == pc.x0 + cut->t && part.hi == pc.x1) {
                    part.lo = pc.x0 + t2;
                    delta -= cur - pc.p1.integral(t2);
                    break;
                }
            }
        }
    }
    return IntervalSet::from_unsorted(std::move(col.parts));
}

double LevelProfile::lower_value2(double a) const { return g2_.integrate(lower_set(a)); }

IntervalSet LevelProfile::slab(double a, double d) const {
    if (d < -1e-9 || d > total1_ + 1e-9 || a < -1e-9 || a > total1_ - d + 1e-9)
        throw OutOfRange("slab parameters outside [0, mu1(X)]");
    d = std::clamp(d, 0.0, total1_);
    a = std::clamp(a, 0.0, total1_ - d);
    return lower_set(a + d).set_minus(lower_set(a));
}

double LevelProfile::slab_value2(double a, double d) const {
    return g2_.integrate(slab(a, d));
}

double LevelProfile::solve_slab(Vec2 u, double boundary_tol) const {
    if (u.x < -boundary_tol || u.x > total1_ + boundary_tol)
        throw NotInRange("first slab coordinate outside [0, mu1(X)]");
    double u1 = std::clamp(u.x, 0.0, total1_);
    double width = total1_ - u1;
    double glo = slab_value2(0.0, u1);
    double ghi = slab_value2(width, u1);
    if (u.y < glo - boundary_tol || u.y > ghi + boundary_tol)
        throw NotInRange("target outside the vertical section of the range");
    double target = std::clamp(u.y, glo, ghi);

    double lo = 0.0, hi = width;
    for (int k = 0; k < 80 && hi - lo > 1e-13; ++k) {
        double mid = 0.5 * (lo + hi);
        if (slab_value2(mid, u1) >= target) hi = mid; else lo = mid;
    }
    return 0.5 * (lo + hi);
}

bool LevelProfile::band_has_curve(std::size_t k) const {
    if (k + 1 >= crit_.size()) return false;
    for (const auto& pc : pieces_)
        if (pc.kind != PieceKind::constant && pc.level_lo < crit_[k + 1] &&
            pc.level_hi > crit_[k])
            return true;
    return false;
}

} // namespace vmr
