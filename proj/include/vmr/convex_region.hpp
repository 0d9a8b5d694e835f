#ifndef VMR_CONVEX_REGION_HPP
#define VMR_CONVEX_REGION_HPP

#include <span>
#include <vector>

#include "vmr/vec2.hpp"

namespace vmr {

/// Convex compact region in R^2: a CCW strictly convex vertex list, with
/// degenerate values (segment, point, empty) as first-class citizens. All
/// operations renormalize, so outputs stay canonical (vertices deduplicated
/// at 1e-12, collinear runs merged, lexicographically smallest vertex
/// first).
class ConvexRegion {
public:
    ConvexRegion() = default; // empty

    static ConvexRegion empty() { return {}; }
    static ConvexRegion point(Vec2 p);
    static ConvexRegion segment(Vec2 a, Vec2 b);
    static ConvexRegion hull_of(std::vector<Vec2> pts);

    bool is_empty() const { return vs_.empty(); }
    bool is_point() const { return vs_.size() == 1; }
    bool is_segment() const { return vs_.size() == 2; }
    bool is_polygon() const { return vs_.size() >= 3; }
    std::size_t vertex_count() const { return vs_.size(); }
    std::span<const Vec2> vertices() const { return vs_; }

    ConvexRegion translated(Vec2 v) const;
    /// Point reflection {2c} - S.
    ConvexRegion reflected(Vec2 c) const;

    /// max over the region of <v, dir>; empty region gives -infinity.
    double support(Vec2 dir) const;
    /// Euclidean distance to the region (0 inside); empty gives +infinity.
    double distance_to(Vec2 p) const;
    /// Distance to the boundary, negative inside; for degenerate regions the
    /// boundary is the region itself.
    double signed_distance(Vec2 p) const;
    bool contains(Vec2 p, double tol) const { return distance_to(p) <= tol; }
    /// other subset of this, up to a tol-dilation of this.
    bool contains_region(const ConvexRegion& other, double tol) const;
    bool centrally_symmetric(Vec2 c, double tol) const;

    friend ConvexRegion intersect(const ConvexRegion& a, const ConvexRegion& b);
    friend ConvexRegion minkowski_sum(const ConvexRegion& a, const ConvexRegion& b);
    /// A (-) B = {x : x + B subset of A}; empty when B does not fit in A.
    friend ConvexRegion minkowski_sub(const ConvexRegion& a, const ConvexRegion& b);

private:
    std::vector<Vec2> vs_;
    explicit ConvexRegion(std::vector<Vec2> vs) : vs_(std::move(vs)) {}
};

double hausdorff(const ConvexRegion& a, const ConvexRegion& b);

/// Bottom boundary of the region as a left-to-right polyline (vertices
/// only); for the top boundary, mirrored accordingly.
std::vector<Vec2> lower_chain(const ConvexRegion& r);
std::vector<Vec2> upper_chain(const ConvexRegion& r);
/// Piecewise-linear interpolation along a chain, clamped at the ends.
double chain_value_at(std::span<const Vec2> chain, double x);

} // namespace vmr

#endif
