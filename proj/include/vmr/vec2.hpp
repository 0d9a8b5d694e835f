#ifndef VMR_VEC2_HPP
#define VMR_VEC2_HPP

#include <cmath>

namespace vmr {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm_inf(Vec2 a) { return std::max(std::fabs(a.x), std::fabs(a.y)); }

} // namespace vmr

#endif
