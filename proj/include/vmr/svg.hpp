#ifndef VMR_SVG_HPP
#define VMR_SVG_HPP

#include <string>

#include "vmr/convex_region.hpp"

namespace vmr {

inline constexpr const char* kVersionString = "vmrange 1.0.0";

/// Range/shift/intersection picture: the range dashed, its parallel shift
/// dotted, and the shift-intersect set shaded. Output is byte-deterministic
/// for a fixed version string.
std::string figure_svg(const ConvexRegion& range, const ConvexRegion& shifted,
                       const ConvexRegion& qset, const std::string& title);

} // namespace vmr

#endif
