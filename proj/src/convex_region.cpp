#include "vmr/convex_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vmr {

namespace {

constexpr double kTol = 1e-12;
constexpr double kInf = std::numeric_limits<double>::infinity();

bool lex_less(Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

bool near(Vec2 a, Vec2 b) {
    double s = std::max({1.0, std::fabs(a.x), std::fabs(a.y)});
    return std::fabs(a.x - b.x) <= kTol * s && std::fabs(a.y - b.y) <= kTol * s;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 d = b - a;
    double l2 = dot(d, d);
    if (l2 <= 0.0) return norm(p - a);
    double t = std::clamp(dot(p - a, d) / l2, 0.0, 1.0);
    return norm(p - (a + t * d));
}

// Clip a convex cycle (>= 2 vertices) against {x : dot(x - anchor, n) <= 0},
// n need not be unit length. Standard Sutherland-Hodgman step with a small
// slack so tangential contacts survive.
std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& vs, Vec2 anchor, Vec2 n) {
    double nn = norm(n);
    if (nn <= 0.0) return vs;
    Vec2 un = n * (1.0 / nn);
    auto sd = [&](Vec2 v) { return dot(v - anchor, un); };
    auto inside = [&](Vec2 v) { return sd(v) <= kTol * std::max(1.0, norm(v)); };

    if (vs.size() == 1) return inside(vs[0]) ? vs : std::vector<Vec2>{};
    std::vector<Vec2> out;
    out.reserve(vs.size() + 2);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Vec2 a = vs[i];
        Vec2 b = vs[(i + 1) % vs.size()];
        double da = sd(a), db = sd(b);
        bool ia = inside(a), ib = inside(b);
        if (ia) out.push_back(a);
        if (ia != ib && std::fabs(da - db) > 0.0) {
            double t = da / (da - db);
            out.push_back(a + std::clamp(t, 0.0, 1.0) * (b - a));
        }
    }
    return out;
}

Vec2 bottom_most(std::span<const Vec2> vs) {
    Vec2 best = vs[0];
    for (Vec2 v : vs)
        if (v.y < best.y || (v.y == best.y && v.x < best.x)) best = v;
    return best;
}

std::vector<Vec2> edge_vectors(const ConvexRegion& r) {
    auto vs = r.vertices();
    std::vector<Vec2> es;
    if (vs.size() == 2) {
        es.push_back(vs[1] - vs[0]);
        es.push_back(vs[0] - vs[1]);
    } else if (vs.size() >= 3) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            es.push_back(vs[(i + 1) % vs.size()] - vs[i]);
    }
    return es;
}

double edge_angle(Vec2 e) {
    double a = std::atan2(e.y, e.x);
    if (a < 0.0) a += 2.0 * M_PI;
    return a;
}

} // namespace

ConvexRegion ConvexRegion::point(Vec2 p) { return ConvexRegion({p}); }

ConvexRegion ConvexRegion::segment(Vec2 a, Vec2 b) {
    if (near(a, b)) return point(a);
    if (lex_less(b, a)) std::swap(a, b);
    return ConvexRegion({a, b});
}

ConvexRegion ConvexRegion::hull_of(std::vector<Vec2> pts) {
    if (pts.empty()) return {};
    std::sort(pts.begin(), pts.end(), lex_less);
    std::vector<Vec2> uniq;
    for (Vec2 p : pts)
        if (uniq.empty() || !near(uniq.back(), p)) uniq.push_back(p);
    if (uniq.size() == 1) return point(uniq[0]);

    auto turn_tol = [](Vec2 a, Vec2 b, Vec2 c) {
        return kTol * std::max(1.0, norm(b - a) * norm(c - a));
    };
    auto build = [&](auto begin, auto end) {
        std::vector<Vec2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2 &&
                   cross(chain[chain.size() - 1] - chain[chain.size() - 2],
                         *it - chain[chain.size() - 2]) <=
                       turn_tol(chain[chain.size() - 2], chain[chain.size() - 1], *it))
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };
    std::vector<Vec2> lower = build(uniq.begin(), uniq.end());
    std::vector<Vec2> upper = build(uniq.rbegin(), uniq.rend());
    if (lower.size() == 2 && upper.size() == 2) return segment(lower[0], lower[1]);

    std::vector<Vec2> hull(lower.begin(), lower.end() - 1);
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);
    if (hull.size() == 2) return segment(hull[0], hull[1]);
    // monotone chain starts at the lexicographic minimum already
    return ConvexRegion(std::move(hull));
}

ConvexRegion ConvexRegion::translated(Vec2 v) const {
    std::vector<Vec2> out(vs_);
    for (auto& p : out) p = p + v;
    return ConvexRegion(std::move(out));
}

ConvexRegion ConvexRegion::reflected(Vec2 c) const {
    std::vector<Vec2> out;
    out.reserve(vs_.size());
    for (Vec2 v : vs_) out.push_back(2.0 * c - v);
    return hull_of(std::move(out));
}

double ConvexRegion::support(Vec2 dir) const {
    double m = -kInf;
    for (Vec2 v : vs_) m = std::max(m, dot(v, dir));
    return m;
}

double ConvexRegion::distance_to(Vec2 p) const {
    if (vs_.empty()) return kInf;
    if (vs_.size() == 1) return norm(p - vs_[0]);
    if (vs_.size() == 2) return point_segment_distance(p, vs_[0], vs_[1]);
    bool in = true;
    double d = kInf;
    for (std::size_t i = 0; i < vs_.size(); ++i) {
        Vec2 a = vs_[i], b = vs_[(i + 1) % vs_.size()];
        if (cross(b - a, p - a) < 0.0) in = false;
        d = std::min(d, point_segment_distance(p, a, b));
    }
    return in ? 0.0 : d;
}

double ConvexRegion::signed_distance(Vec2 p) const {
    if (vs_.empty()) return kInf;
    if (vs_.size() <= 2) return distance_to(p);
    bool in = true;
    double d = kInf;
    for (std::size_t i = 0; i < vs_.size(); ++i) {
        Vec2 a = vs_[i], b = vs_[(i + 1) % vs_.size()];
        if (cross(b - a, p - a) < 0.0) in = false;
        d = std::min(d, point_segment_distance(p, a, b));
    }
    return in ? -d : d;
}

bool ConvexRegion::contains_region(const ConvexRegion& other, double tol) const {
    for (Vec2 v : other.vs_)
        if (distance_to(v) > tol) return false;
    return true;
}

bool ConvexRegion::centrally_symmetric(Vec2 c, double tol) const {
    return hausdorff(reflected(c), *this) <= tol;
}

ConvexRegion intersect(const ConvexRegion& a, const ConvexRegion& b) {
    if (a.is_empty() || b.is_empty()) return {};
    if (b.is_point()) return a.contains(b.vs_[0], kTol) ? b : ConvexRegion{};
    if (a.is_point()) return b.contains(a.vs_[0], kTol) ? a : ConvexRegion{};

    std::vector<Vec2> subject = a.vs_;
    auto clip_all = [&subject](std::span<const Vec2> clip_pts, bool segment_clip) {
        if (segment_clip) {
            Vec2 u = clip_pts[0], v = clip_pts[1];
            Vec2 d = v - u;
            Vec2 n{d.y, -d.x};
            subject = clip_halfplane(subject, u, n);
            if (!subject.empty()) subject = clip_halfplane(subject, u, -n);
            if (!subject.empty()) subject = clip_halfplane(subject, v, d);
            if (!subject.empty()) subject = clip_halfplane(subject, u, -d);
        } else {
            for (std::size_t i = 0; i < clip_pts.size() && !subject.empty(); ++i) {
                Vec2 p = clip_pts[i];
                Vec2 q = clip_pts[(i + 1) % clip_pts.size()];
                Vec2 n{(q - p).y, -(q - p).x}; // outward for CCW
                subject = clip_halfplane(subject, p, n);
            }
        }
    };
    clip_all(b.vs_, b.is_segment());
    return ConvexRegion::hull_of(std::move(subject));
}

ConvexRegion minkowski_sum(const ConvexRegion& a, const ConvexRegion& b) {
    if (a.is_empty() || b.is_empty()) return {};
    if (a.is_point()) return b.translated(a.vs_[0]);
    if (b.is_point()) return a.translated(b.vs_[0]);

    std::vector<Vec2> ea = edge_vectors(a), eb = edge_vectors(b);
    std::vector<std::pair<double, Vec2>> edges;
    edges.reserve(ea.size() + eb.size());
    for (Vec2 e : ea) edges.push_back({edge_angle(e), e});
    for (Vec2 e : eb) edges.push_back({edge_angle(e), e});
    std::stable_sort(edges.begin(), edges.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });

    Vec2 cur = bottom_most(a.vertices()) + bottom_most(b.vertices());
    std::vector<Vec2> out;
    out.reserve(edges.size());
    for (const auto& [ang, e] : edges) {
        out.push_back(cur);
        cur = cur + e;
    }
    return ConvexRegion::hull_of(std::move(out));
}

ConvexRegion minkowski_sub(const ConvexRegion& a, const ConvexRegion& b) {
    if (a.is_empty() || b.is_empty()) return {};
    if (b.is_point()) return a.translated(-b.vs_[0]);
    if (a.is_point()) return {}; // nondegenerate b cannot fit in a point

    // Erode a along its facet normals: dot(x, n) <= h_a(n) - h_b(n). The
    // result need not sit inside a (only inside its translates), so seed the
    // clipping with a - b0, which always contains the erosion.
    std::vector<Vec2> dirs;
    if (a.is_segment()) {
        Vec2 d = a.vs_[1] - a.vs_[0];
        dirs = {Vec2{d.y, -d.x}, Vec2{-d.y, d.x}, d, -d};
    } else {
        for (std::size_t i = 0; i < a.vs_.size(); ++i) {
            Vec2 d = a.vs_[(i + 1) % a.vs_.size()] - a.vs_[i];
            dirs.push_back({d.y, -d.x});
        }
    }
    std::vector<Vec2> subject = a.translated(-b.vs_[0]).vs_;
    for (Vec2 n : dirs) {
        double nn = norm(n);
        if (nn <= 0.0) continue;
        Vec2 un = n * (1.0 / nn);
        double h = a.support(un) - b.support(un);
        subject = clip_halfplane(subject, un * h, un);
        if (subject.empty()) break;
    }
    return ConvexRegion::hull_of(std::move(subject));
}

double hausdorff(const ConvexRegion& a, const ConvexRegion& b) {
    if (a.is_empty() && b.is_empty()) return 0.0;
    if (a.is_empty() || b.is_empty()) return kInf;
    double h = 0.0;
    for (Vec2 v : a.vertices()) h = std::max(h, b.distance_to(v));
    for (Vec2 v : b.vertices()) h = std::max(h, a.distance_to(v));
    return h;
}

std::vector<Vec2> lower_chain(const ConvexRegion& r) {
    auto vs = r.vertices();
    if (vs.size() <= 2) {
        std::vector<Vec2> out(vs.begin(), vs.end());
        std::sort(out.begin(), out.end(), lex_less);
        return out;
    }
    std::size_t start = 0;
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (lex_less(vs[i], vs[start])) start = i;
    std::vector<Vec2> out{vs[start]};
    for (std::size_t k = 1; k < vs.size(); ++k) {
        Vec2 v = vs[(start + k) % vs.size()];
        if (v.x <= out.back().x) break;
        out.push_back(v);
    }
    return out;
}

std::vector<Vec2> upper_chain(const ConvexRegion& r) {
    std::vector<Vec2> flipped;
    flipped.reserve(r.vertex_count());
    for (Vec2 v : r.vertices()) flipped.push_back(-v);
    std::vector<Vec2> chain = lower_chain(ConvexRegion::hull_of(std::move(flipped)));
    std::vector<Vec2> out;
    out.reserve(chain.size());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.push_back(-*it);
    return out;
}

double chain_value_at(std::span<const Vec2> chain, double x) {
    if (chain.empty()) return 0.0;
    if (x <= chain.front().x) return chain.front().y;
    if (x >= chain.back().x) return chain.back().y;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        if (x <= chain[i + 1].x) {
            double w = chain[i + 1].x - chain[i].x;
            double t = w > 0.0 ? (x - chain[i].x) / w : 0.0;
            return chain[i].y + t * (chain[i + 1].y - chain[i].y);
        }
    }
    return chain.back().y;
}

} // namespace vmr
