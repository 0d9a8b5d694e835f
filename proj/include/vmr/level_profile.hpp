#ifndef VMR_LEVEL_PROFILE_HPP
#define VMR_LEVEL_PROFILE_HPP

#include <vector>

#include "vmr/interval_set.hpp"
#include "vmr/piecewise_poly.hpp"
#include "vmr/vec2.hpp"
#include "vmr/vector_measure.hpp"

namespace vmr {

enum class PieceKind { increasing, decreasing, constant };

/// One grid piece of the density ratio f = d mu2 / d mu1, refined so that f
/// is monotone or constant on it. Levels at the ends are continuous limits
/// (ratio of derivatives where the densities vanish together).
struct ProfilePiece {
    double x0 = 0.0, x1 = 0.0;
    Poly p1, p2; // local variable t = x - x0
    PieceKind kind = PieceKind::constant;
    double level_left = 0.0, level_right = 0.0;
    double level_lo = 0.0, level_hi = 0.0;
    double mass1 = 0.0, mass2 = 0.0;
    int flat_index = -1; // set for constant pieces
};

/// Level set {f = level} carrying positive mu1 mass.
struct FlatLevel {
    double level = 0.0;
    IntervalSet set;
    double mass1 = 0.0;
};

/// Distribution data of the density ratio f under mu1: sublevel masses,
/// quantile levels l_a, lower sets L_a filled leftmost through flat levels,
/// slabs M_{a,d} and the slab solve used by the maximal-set construction.
class LevelProfile {
public:
    /// Requires a pair with bounded ratio (see ensure_equivalent); otherwise
    /// throws NonEquivalent.
    static LevelProfile build(const VectorMeasure& mu);

    double total_mass() const { return total1_; }
    double total_mass2() const { return total2_; }
    double max_level() const;

    double sublevel_mass(double l) const;
    double sublevel_mass2(double l) const;
    double strict_sublevel_mass(double l) const;
    double strict_sublevel_mass2(double l) const;

    struct Quantile {
        double level = 0.0;
        int flat_index = -1; // >= 0 when a lands inside a flat level
    };
    /// Minimal level l with sublevel_mass(l) >= a. Throws OutOfRange when a
    /// is outside [0, total_mass()] by more than 1e-9.
    Quantile quantile(double a) const;

    /// L_a: mu1-mass-a set filling the lowest ratio values first, taking the
    /// leftmost portion of a straddled flat level. mu1(L_a) = a to ~1e-15.
    IntervalSet lower_set(double a) const;
    /// mu2(L_a); traces the lower boundary of the range.
    double lower_value2(double a) const;

    /// M_{a,d} = L_{a+d} \ L_a and g_d(a) = mu2(M_{a,d}).
    IntervalSet slab(double a, double d) const;
    double slab_value2(double a, double d) const;

    /// a* with mu(M_{a*, u.x}) = u, by bisection of the continuous map
    /// a -> g_{u.x}(a). Throws NotInRange when u.y is outside
    /// [g(0), g(total-u.x)] by more than boundary_tol.
    double solve_slab(Vec2 u, double boundary_tol = 1e-9) const;

    const std::vector<ProfilePiece>& pieces() const { return pieces_; }
    const std::vector<FlatLevel>& flat_levels() const { return flats_; }
    const std::vector<double>& critical_levels() const { return crit_; }

    /// True when (crit[k], crit[k+1]) is swept by some non-constant piece.
    bool band_has_curve(std::size_t k) const;

    double integrate1(const IntervalSet& s) const { return g1_.integrate(s); }
    double integrate2(const IntervalSet& s) const { return g2_.integrate(s); }

private:
    std::vector<ProfilePiece> pieces_;
    std::vector<FlatLevel> flats_;
    std::vector<double> crit_;
    std::vector<double> mass_at_crit_, strict_mass_at_crit_;
    PiecewisePoly g1_, g2_;
    double total1_ = 0.0, total2_ = 0.0;

    struct Cut { // partial inclusion of one piece at a given level
        std::size_t piece;
        double t; // local boundary
    };
    struct Collected {
        std::vector<Interval> parts;
        double mass = 0.0;
        std::vector<Cut> cuts;
    };
    Collected collect_below(double level, int flat_index) const;
};

} // namespace vmr

#endif
