#include "geochrom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "geochrom/errors.hpp"

namespace geochrom {
namespace {

void check_range(const Point& p) {
    if (p.x > kCoordinateBound || p.x < -kCoordinateBound || p.y > kCoordinateBound ||
        p.y < -kCoordinateBound) {
        throw Error(ErrorCode::InputOutOfRange,
                    "coordinate (" + std::to_string(p.x) + "," + std::to_string(p.y) +
                        ") exceeds 2^24");
    }
}

std::int64_t cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

// r lies on the closed segment pq, given orient(p, q, r) == 0.
bool on_segment(const Point& p, const Point& q, const Point& r) {
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
           r.y <= std::max(p.y, q.y);
}

}  // namespace

int orient(const Point& p, const Point& q, const Point& r) {
    check_range(p);
    check_range(q);
    check_range(r);
    const auto d = cross(p, q, r);
    return (d > 0) - (d < 0);
}

SegmentRelation segments_intersect(const Segment& s, const Segment& t) {
    const bool same_aa = s.a == t.a;
    const bool same_ab = s.a == t.b;
    const bool same_ba = s.b == t.a;
    const bool same_bb = s.b == t.b;
    const int shared = int(same_aa) + int(same_ab) + int(same_ba) + int(same_bb);
    if (shared >= 2) {
        throw Error(ErrorCode::GeneralPositionViolated, "segments coincide");
    }
    if (shared == 1) {
        const Point& common = (same_aa || same_ab) ? s.a : s.b;
        const Point& s_other = (common == s.a) ? s.b : s.a;
        const Point& t_other = (common == t.a) ? t.b : t.a;
        if (orient(common, s_other, t_other) == 0 &&
            (on_segment(common, s_other, t_other) || on_segment(common, t_other, s_other))) {
            throw Error(ErrorCode::GeneralPositionViolated, "collinear overlapping segments");
        }
        return SegmentRelation::SharedEndpoint;
    }

    const int o1 = orient(s.a, s.b, t.a);
    const int o2 = orient(s.a, s.b, t.b);
    const int o3 = orient(t.a, t.b, s.a);
    const int o4 = orient(t.a, t.b, s.b);

    if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
        const bool touch = (o1 == 0 && on_segment(s.a, s.b, t.a)) ||
                           (o2 == 0 && on_segment(s.a, s.b, t.b)) ||
                           (o3 == 0 && on_segment(t.a, t.b, s.a)) ||
                           (o4 == 0 && on_segment(t.a, t.b, s.b));
        if (touch) {
            throw Error(ErrorCode::GeneralPositionViolated, "segment endpoint touches the other");
        }
        return SegmentRelation::Disjoint;
    }
    if (o1 != o2 && o3 != o4) {
        return SegmentRelation::Crossing;
    }
    return SegmentRelation::Disjoint;
}

bool in_general_position(std::span<const Point> points) {
    const auto n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i] == points[j]) return false;
            for (std::size_t k = j + 1; k < n; ++k) {
                if (orient(points[i], points[j], points[k]) == 0) return false;
            }
        }
    }
    return true;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    for (const auto& p : points_) check_range(p);
    if (!in_general_position(points_)) {
        throw Error(ErrorCode::GeneralPositionViolated,
                    "point set has a repeated point or a collinear triple");
    }
}

const Point& PointSet::at(int label) const {
    if (label < 1 || static_cast<std::size_t>(label) > points_.size()) {
        throw Error(ErrorCode::InputOutOfRange, "label " + std::to_string(label) + " out of range");
    }
    return points_[static_cast<std::size_t>(label - 1)];
}

std::vector<int> hull_clockwise(const PointSet& s) {
    const auto pts = s.points();
    const auto n = pts.size();
    std::vector<int> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
    if (n < 3) {
        std::vector<int> labels;
        for (int i : idx) labels.push_back(i + 1);
        return labels;
    }
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        const auto& p = pts[static_cast<std::size_t>(a)];
        const auto& q = pts[static_cast<std::size_t>(b)];
        return p.y != q.y ? p.y < q.y : p.x < q.x;
    });
    // Monotone chain on (y, x); keeping only strict right turns yields the
    // clockwise hull.
    auto at = [&](int i) -> const Point& { return pts[static_cast<std::size_t>(i)]; };
    std::vector<int> hull;
    for (int pass = 0; pass < 2; ++pass) {
        const auto start = hull.size();
        for (std::size_t k = 0; k < n; ++k) {
            const int i = pass == 0 ? idx[k] : idx[n - 1 - k];
            while (hull.size() >= start + 2 &&
                   orient(at(hull[hull.size() - 2]), at(hull.back()), at(i)) >= 0) {
                hull.pop_back();
            }
            hull.push_back(i);
        }
        hull.pop_back();
    }
    std::vector<int> labels;
    labels.reserve(hull.size());
    for (int i : hull) labels.push_back(i + 1);
    return labels;
}

bool is_convex_position(const PointSet& s) { return hull_clockwise(s).size() == s.size(); }

PointSet regular_polygon(int n) {
    if (n < 3) {
        throw Error(ErrorCode::InvalidOrder, "regular polygon needs n >= 3, got " + std::to_string(n));
    }
    constexpr double radius = 1e6;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double offset = std::numbers::pi / 2 + 0.0137 * attempt;
        std::vector<Point> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            // Decreasing angle walks the circle clockwise.
            const double theta = offset - 2.0 * std::numbers::pi * k / n;
            pts.push_back({std::llround(radius * std::cos(theta)),
                           std::llround(radius * std::sin(theta))});
        }
        if (!in_general_position(pts)) continue;
        PointSet s(std::move(pts));
        if (is_convex_position(s)) return s;
    }
    throw Error(ErrorCode::SearchExhausted,
                "no rotation keeps the rounded " + std::to_string(n) + "-gon in convex position");
}

SideCounts side_counts(const PointSet& s, int i, int j) {
    const Point& a = s.at(i);
    const Point& b = s.at(j);
    SideCounts c;
    for (const auto& p : s.points()) {
        const int o = orient(a, b, p);
        if (o > 0) ++c.left;
        if (o < 0) ++c.right;
    }
    return c;
}

}  // namespace geochrom
