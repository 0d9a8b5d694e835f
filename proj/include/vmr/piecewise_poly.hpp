#ifndef VMR_PIECEWISE_POLY_HPP
#define VMR_PIECEWISE_POLY_HPP

#include <array>
#include <span>
#include <vector>

#include "vmr/interval_set.hpp"

namespace vmr {

/// Polynomial of degree <= 2 in a piece-local variable, constant term first.
struct Poly {
    std::array<double, 3> c{0.0, 0.0, 0.0};

    double eval(double t) const { return c[0] + t * (c[1] + t * c[2]); }
    double deriv(double t) const { return c[1] + 2.0 * c[2] * t; }
    /// Integral from 0 to t.
    double integral(double t) const {
        return t * (c[0] + t * (c[1] / 2.0 + t * c[2] / 3.0));
    }
    bool is_zero(double tol = 0.0) const;

    /// Same polynomial re-centered: q(s) = p(shift + s).
    Poly shifted(double shift) const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator*(double s, const Poly& p);

/// Nonnegative piecewise polynomial density on [0,1]. Breakpoints run from 0
/// to 1; pieces[i] lives on [breakpoints[i], breakpoints[i+1]) in the local
/// variable x - breakpoints[i].
class PiecewisePoly {
public:
    PiecewisePoly(); // identically zero
    PiecewisePoly(std::vector<double> breakpoints, std::vector<Poly> pieces);

    static PiecewisePoly constant(double v);

    const std::vector<double>& breakpoints() const { return breaks_; }
    const std::vector<Poly>& pieces() const { return pieces_; }
    std::size_t piece_count() const { return pieces_.size(); }

    double operator()(double x) const;
    double integrate(double lo, double hi) const;
    double integrate(const IntervalSet& s) const;
    double total() const { return integrate(0.0, 1.0); }
    double max_value() const;

    /// True when the polynomial is (numerically) zero on every piece.
    bool is_identically_zero() const;

    /// Same function on a grid refined with the given extra breakpoints.
    PiecewisePoly refined(std::span<const double> extra) const;
    /// Zero outside s; grid refined at the endpoints of s.
    PiecewisePoly restricted(const IntervalSet& s) const;

    /// a*P + b*Q on the merged grid.
    static PiecewisePoly linear_combination(double a, const PiecewisePoly& P,
                                            double b, const PiecewisePoly& Q);
    /// Closed-form integral of the product P*Q over [lo, hi].
    static double integrate_product(const PiecewisePoly& P, const PiecewisePoly& Q,
                                    double lo, double hi);

    /// Throws SchemaError if a piece dips below -tol anywhere.
    void validate_nonnegative(double tol = 1e-9) const;

private:
    std::vector<double> breaks_;
    std::vector<Poly> pieces_;
    std::size_t piece_index(double x) const;
    void check_grid() const;
};

/// Union of several breakpoint grids (sorted, deduplicated).
std::vector<double> merge_breakpoints(std::span<const PiecewisePoly> ps,
                                      std::span<const double> extra = {});

} // namespace vmr

#endif
