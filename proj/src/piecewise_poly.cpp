#include "vmr/piecewise_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vmr/errors.hpp"

namespace vmr {

namespace {
constexpr double kGridTol = 1e-13; // breakpoints closer than this collapse
}

bool Poly::is_zero(double tol) const {
    return std::fabs(c[0]) <= tol && std::fabs(c[1]) <= tol && std::fabs(c[2]) <= tol;
}

Poly Poly::shifted(double shift) const {
    // q(s) = p(shift + s)
    Poly q;
    q.c[0] = eval(shift);
    q.c[1] = deriv(shift);
    q.c[2] = c[2];
    return q;
}

Poly operator+(const Poly& a, const Poly& b) {
    return Poly{{a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2]}};
}

Poly operator*(double s, const Poly& p) {
    return Poly{{s * p.c[0], s * p.c[1], s * p.c[2]}};
}

PiecewisePoly::PiecewisePoly() : breaks_{0.0, 1.0}, pieces_{Poly{}} {}

PiecewisePoly::PiecewisePoly(std::vector<double> breakpoints, std::vector<Poly> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    check_grid();
}

void PiecewisePoly::check_grid() const {
    if (breaks_.size() < 2 || pieces_.size() + 1 != breaks_.size())
        throw SchemaError("piecewise polynomial: breakpoint/piece count mismatch");
    if (breaks_.front() != 0.0 || breaks_.back() != 1.0)
        throw SchemaError("piecewise polynomial: breakpoints must start at 0 and end at 1");
    for (std::size_t i = 1; i < breaks_.size(); ++i)
        if (!(breaks_[i] > breaks_[i - 1]))
            throw SchemaError("piecewise polynomial: breakpoints must be strictly increasing");
}

PiecewisePoly PiecewisePoly::constant(double v) {
    return PiecewisePoly({0.0, 1.0}, {Poly{{v, 0.0, 0.0}}});
}

std::size_t PiecewisePoly::piece_index(double x) const {
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - breaks_.begin());
    if (i == 0) return 0;
    if (i >= breaks_.size()) return pieces_.size() - 1;
    return i - 1;
}

double PiecewisePoly::operator()(double x) const {
    std::size_t i = piece_index(x);
    return pieces_[i].eval(x - breaks_[i]);
}

double PiecewisePoly::integrate(double lo, double hi) const {
    if (hi <= lo) return 0.0;
    lo = std::max(lo, 0.0);
    hi = std::min(hi, 1.0);
    double acc = 0.0;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        double a = std::max(lo, breaks_[i]);
        double b = std::min(hi, breaks_[i + 1]);
        if (b <= a) continue;
        acc += pieces_[i].integral(b - breaks_[i]) - pieces_[i].integral(a - breaks_[i]);
    }
    return acc;
}

double PiecewisePoly::integrate(const IntervalSet& s) const {
    double acc = 0.0;
    for (const auto& iv : s.intervals()) acc += integrate(iv.lo, iv.hi);
    return acc;
}

double PiecewisePoly::max_value() const {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        double len = breaks_[i + 1] - breaks_[i];
        const Poly& p = pieces_[i];
        m = std::max({m, p.eval(0.0), p.eval(len)});
        if (p.c[2] != 0.0) {
            double t = -p.c[1] / (2.0 * p.c[2]);
            if (t > 0.0 && t < len) m = std::max(m, p.eval(t));
        }
    }
    return m;
}

bool PiecewisePoly::is_identically_zero() const {
    double scale = 0.0;
    for (const auto& p : pieces_)
        scale = std::max({scale, std::fabs(p.c[0]), std::fabs(p.c[1]), std::fabs(p.c[2])});
    return scale <= 1e-14;
}

PiecewisePoly PiecewisePoly::refined(std::span<const double> extra) const {
    std::vector<double> grid = breaks_;
    for (double x : extra)
        if (x > 0.0 && x < 1.0) grid.push_back(x);
    std::sort(grid.begin(), grid.end());
    std::vector<double> dedup;
    for (double x : grid) {
        if (dedup.empty() || x - dedup.back() > kGridTol) dedup.push_back(x);
    }
    if (dedup.back() != 1.0) dedup.back() = 1.0;

    std::vector<Poly> pieces;
    pieces.reserve(dedup.size() - 1);
    for (std::size_t i = 0; i + 1 < dedup.size(); ++i) {
        std::size_t j = piece_index(dedup[i]);
        pieces.push_back(pieces_[j].shifted(dedup[i] - breaks_[j]));
    }
    return PiecewisePoly(std::move(dedup), std::move(pieces));
}

PiecewisePoly PiecewisePoly::restricted(const IntervalSet& s) const {
    PiecewisePoly r = refined(s.inner_endpoints());
    for (std::size_t i = 0; i < r.pieces_.size(); ++i) {
        double mid = 0.5 * (r.breaks_[i] + r.breaks_[i + 1]);
        if (!s.contains_point(mid)) r.pieces_[i] = Poly{};
    }
    return r;
}

PiecewisePoly PiecewisePoly::linear_combination(double a, const PiecewisePoly& P,
                                                double b, const PiecewisePoly& Q) {
    std::array<PiecewisePoly, 2> ps{P, Q};
    std::vector<double> grid = merge_breakpoints(ps);
    PiecewisePoly pr = P.refined(grid);
    PiecewisePoly qr = Q.refined(grid);
    std::vector<Poly> pieces(pr.pieces_.size());
    for (std::size_t i = 0; i < pieces.size(); ++i)
        pieces[i] = a * pr.pieces_[i] + b * qr.pieces_[i];
    return PiecewisePoly(pr.breaks_, std::move(pieces));
}

double PiecewisePoly::integrate_product(const PiecewisePoly& P, const PiecewisePoly& Q,
                                        double lo, double hi) {
    if (hi <= lo) return 0.0;
    std::array<PiecewisePoly, 2> ps{P, Q};
    std::vector<double> grid = merge_breakpoints(ps);
    PiecewisePoly pr = P.refined(grid);
    PiecewisePoly qr = Q.refined(grid);
    double acc = 0.0;
    for (std::size_t i = 0; i < pr.pieces_.size(); ++i) {
        double a = std::max(lo, pr.breaks_[i]);
        double b = std::min(hi, pr.breaks_[i + 1]);
        if (b <= a) continue;
        // product coefficients, degree <= 4
        const auto& u = pr.pieces_[i].c;
        const auto& v = qr.pieces_[i].c;
        double m[5] = {u[0] * v[0],
                       u[0] * v[1] + u[1] * v[0],
                       u[0] * v[2] + u[1] * v[1] + u[2] * v[0],
                       u[1] * v[2] + u[2] * v[1],
                       u[2] * v[2]};
        auto anti = [&](double t) {
            return t * (m[0] + t * (m[1] / 2.0 + t * (m[2] / 3.0 + t * (m[3] / 4.0 + t * m[4] / 5.0))));
        };
        acc += anti(b - pr.breaks_[i]) - anti(a - pr.breaks_[i]);
    }
    return acc;
}

void PiecewisePoly::validate_nonnegative(double tol) const {
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        double len = breaks_[i + 1] - breaks_[i];
        const Poly& p = pieces_[i];
        double lo = std::min(p.eval(0.0), p.eval(len));
        if (p.c[2] != 0.0) {
            double t = -p.c[1] / (2.0 * p.c[2]);
            if (t > 0.0 && t < len) lo = std::min(lo, p.eval(t));
        }
        if (lo < -tol)
            throw SchemaError("density piece is negative (min " + std::to_string(lo) + ")");
    }
}

std::vector<double> merge_breakpoints(std::span<const PiecewisePoly> ps,
                                      std::span<const double> extra) {
    std::vector<double> grid;
    for (const auto& p : ps)
        grid.insert(grid.end(), p.breakpoints().begin(), p.breakpoints().end());
    for (double x : extra)
        if (x > 0.0 && x < 1.0) grid.push_back(x);
    std::sort(grid.begin(), grid.end());
    std::vector<double> dedup;
    for (double x : grid)
        if (dedup.empty() || x - dedup.back() > kGridTol) dedup.push_back(x);
    if (dedup.empty() || dedup.front() != 0.0) dedup.insert(dedup.begin(), 0.0);
    if (dedup.back() != 1.0) dedup.push_back(1.0);
    return dedup;
}

} // namespace vmr
