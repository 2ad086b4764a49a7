#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "tempoviz/layout.hpp"

namespace tempoviz::geometry {

// Coordinates are snapped to a 2^-30 grid and all predicates run on integers,
// so crossing tests are exact: no epsilon tuning, no inconsistent answers for
// nearly-degenerate inputs.
using Coord = std::int64_t;

struct SnappedPoint {
    Coord x = 0;
    Coord y = 0;

    friend bool operator==(const SnappedPoint&, const SnappedPoint&) = default;
};

constexpr double kSnapScale = 1073741824.0;  // 2^30
// Keeps snapped magnitudes below 2^61 so orientation() cannot overflow.
constexpr double kMaxCoordMagnitude = 2147483648.0;  // 2^31

inline Coord snap(double v) {
    if (!std::isfinite(v))
        throw std::invalid_argument("cannot snap non-finite coordinate");
    if (std::abs(v) > kMaxCoordMagnitude)
        throw std::invalid_argument("coordinate magnitude too large for exact predicates");
    return std::llround(v * kSnapScale);
}

inline SnappedPoint snap(const Vec2& p) { return {snap(p.x), snap(p.y)}; }

// Sign of the cross product (b-a) x (c-a): +1 for a counter-clockwise turn,
// -1 for clockwise, 0 for collinear. Exact in 128-bit arithmetic.
inline int orientation(const SnappedPoint& a, const SnappedPoint& b, const SnappedPoint& c) {
    const __int128 cross = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                           static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    if (cross > 0) return 1;
    if (cross < 0) return -1;
    return 0;
}

namespace detail {

// Open-interval overlap of two collinear segments projected onto the axis
// along which the shared line actually extends.
inline bool collinear_open_overlap(const SnappedPoint& a, const SnappedPoint& b,
                                   const SnappedPoint& c, const SnappedPoint& d) {
    const bool use_x = a.x != b.x;
    const Coord a1 = use_x ? a.x : a.y;
    const Coord b1 = use_x ? b.x : b.y;
    const Coord c1 = use_x ? c.x : c.y;
    const Coord d1 = use_x ? d.x : d.y;
    const Coord lo1 = std::min(a1, b1), hi1 = std::max(a1, b1);
    const Coord lo2 = std::min(c1, d1), hi2 = std::max(c1, d1);
    return std::max(lo1, lo2) < std::min(hi1, hi2);
}

}  // namespace detail

// Whether the open segments (a,b) and (c,d) share at least one point. Open
// means endpoints are excluded: touching at an endpoint or a T-junction does
// not count, while a proper interior crossing or a collinear overlap of
// positive length does. Zero-length segments cross nothing.
inline bool open_segments_intersect(const SnappedPoint& a, const SnappedPoint& b,
                                    const SnappedPoint& c, const SnappedPoint& d) {
    if (a == b || c == d) return false;
    const int d1 = orientation(c, d, a);
    const int d2 = orientation(c, d, b);
    const int d3 = orientation(a, b, c);
    const int d4 = orientation(a, b, d);
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0)
        return detail::collinear_open_overlap(a, b, c, d);
    return false;
}

}  // namespace tempoviz::geometry
