#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace geochrom {

/// Largest admissible coordinate magnitude. Orientation determinants of
/// points within this bound stay far below the int64 range.
inline constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 24;

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Segment {
    Point a;
    Point b;
};

enum class SegmentRelation { Disjoint, SharedEndpoint, Crossing };

/// Sign of the determinant of (q - p, r - p): +1 counterclockwise,
/// -1 clockwise, 0 collinear. Throws InputOutOfRange past kCoordinateBound.
int orient(const Point& p, const Point& q, const Point& r);

/// Relation between two segments whose endpoints contain no collinear
/// triple. Overlapping or touching collinear configurations throw
/// GeneralPositionViolated.
SegmentRelation segments_intersect(const Segment& s, const Segment& t);

inline bool intersects(SegmentRelation r) noexcept { return r != SegmentRelation::Disjoint; }

/// Points labelled 1..n by their position in the list. Construction
/// rejects duplicates, collinear triples and out-of-range coordinates.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points);

    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] std::span<const Point> points() const noexcept { return points_; }
    /// 1-based access.
    [[nodiscard]] const Point& at(int label) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;
};

/// True when no three of the points are collinear and all are distinct.
bool in_general_position(std::span<const Point> points);

bool is_convex_position(const PointSet& s);

/// Labels (1-based) of the convex hull vertices in clockwise order,
/// starting from the lowest-leftmost vertex.
std::vector<int> hull_clockwise(const PointSet& s);

/// Vertices of a regular n-gon of radius 10^6, integer-rounded and
/// labelled clockwise. Throws InvalidOrder for n < 3.
PointSet regular_polygon(int n);

/// Number of points of `s` strictly left of / strictly right of the
/// directed line through labels i and j.
struct SideCounts {
    int left = 0;
    int right = 0;
};
SideCounts side_counts(const PointSet& s, int i, int j);

}  // namespace geochrom
