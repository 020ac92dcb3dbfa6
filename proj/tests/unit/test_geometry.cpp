#include <gtest/gtest.h>

#include <random>

#include "geochrom/errors.hpp"
#include "geochrom/geometry.hpp"
#include "support/reference.hpp"

using namespace geochrom;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no geochrom::Error thrown";
    return ErrorCode::VerificationFailed;
}

Segment seg(std::int64_t ax, std::int64_t ay, std::int64_t bx, std::int64_t by) { return {{ax, ay}, {bx, by}}; }

}  // namespace

TEST(Orient, Examples) {
    EXPECT_EQ(orient({0, 0}, {1, 0}, {0, 1}), 1);
    EXPECT_EQ(orient({0, 0}, {1, 1}, {2, 2}), 0);
    EXPECT_EQ(orient({0, 0}, {0, 1}, {1, 0}), -1);
}

TEST(Orient, RejectsOutOfRange) {
    const std::int64_t big = kCoordinateBound + 1;
    EXPECT_EQ(code_of([&] { orient({big, 0}, {0, 0}, {1, 1}); }), ErrorCode::InputOutOfRange);
    EXPECT_EQ(code_of([&] { orient({0, 0}, {0, -big}, {1, 1}); }), ErrorCode::InputOutOfRange);
    EXPECT_NO_THROW(orient({kCoordinateBound, -kCoordinateBound}, {-kCoordinateBound, 0}, {0, kCoordinateBound}));
}

TEST(Orient, AntisymmetricAndMatchesReference) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> coord(-kCoordinateBound, kCoordinateBound);
    std::uniform_int_distribution<std::int64_t> small(-4, 4);
    for (int t = 0; t < 20000; ++t) {
        const bool tiny = t % 2 == 0;  // small grids hit collinear triples often
        auto pick = [&] { return tiny ? Point{small(rng), small(rng)} : Point{coord(rng), coord(rng)}; };
        const Point p = pick(), q = pick(), r = pick();
        const int o = orient(p, q, r);
        ASSERT_EQ(o, ref::orient(p, q, r));
        ASSERT_EQ(orient(q, p, r), -o);
        ASSERT_EQ(orient(p, r, q), -o);
        ASSERT_EQ(orient(r, q, p), -o);
        ASSERT_EQ(orient(q, r, p), o);
    }
}

TEST(SegmentsIntersect, Examples) {
    EXPECT_EQ(segments_intersect(seg(0, 0, 2, 2), seg(0, 2, 2, 0)), SegmentRelation::Crossing);
    EXPECT_EQ(segments_intersect(seg(0, 0, 1, 0), seg(1, 0, 2, 1)), SegmentRelation::SharedEndpoint);
    EXPECT_EQ(segments_intersect(seg(0, 0, 1, 0), seg(0, 2, 1, 2)), SegmentRelation::Disjoint);
}

TEST(SegmentsIntersect, RejectsCollinearOverlap) {
    EXPECT_EQ(code_of([] { segments_intersect(seg(0, 0, 2, 0), seg(1, 0, 3, 0)); }),
              ErrorCode::GeneralPositionViolated);
    EXPECT_EQ(code_of([] { segments_intersect(seg(0, 0, 2, 0), seg(0, 0, 1, 0)); }),
              ErrorCode::GeneralPositionViolated);
    EXPECT_EQ(code_of([] { segments_intersect(seg(0, 0, 2, 0), seg(0, 0, 2, 0)); }),
              ErrorCode::GeneralPositionViolated);
    // Collinear but meeting only at the shared endpoint.
    EXPECT_EQ(segments_intersect(seg(0, 0, 2, 0), seg(2, 0, 4, 0)), SegmentRelation::SharedEndpoint);
    // An endpoint in the relative interior of the other segment.
    EXPECT_EQ(code_of([] { segments_intersect(seg(0, 0, 2, 0), seg(1, 0, 1, 5)); }),
              ErrorCode::GeneralPositionViolated);
}

TEST(SegmentsIntersect, SymmetricAndMatchesReference) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        const auto pts = ref::random_points(rng, 4, trial % 2 ? 10 : 1000000);
        const Segment s{pts[0], pts[1]}, t{pts[2], pts[3]};
        const auto rel = segments_intersect(s, t);
        ASSERT_EQ(rel, segments_intersect(t, s));
        ASSERT_EQ(rel, segments_intersect(Segment{pts[1], pts[0]}, Segment{pts[3], pts[2]}));
        ASSERT_EQ(rel == SegmentRelation::Crossing, ref::segments_cross(pts[0], pts[1], pts[2], pts[3]));
        ASSERT_NE(rel, SegmentRelation::SharedEndpoint);
        const Segment u{pts[1], pts[2]};
        ASSERT_EQ(segments_intersect(s, u), SegmentRelation::SharedEndpoint);
        ASSERT_EQ(segments_intersect(u, s), SegmentRelation::SharedEndpoint);
    }
}

TEST(SegmentsIntersect, ConvexQuadHasExactlyOneCrossingMatching) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const auto pts = ref::random_convex_points(rng, 4);
        const int matchings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
        int crossing = 0;
        for (const auto& m : matchings) {
            crossing += segments_intersect({pts[m[0]], pts[m[1]]}, {pts[m[2]], pts[m[3]]}) == SegmentRelation::Crossing;
        }
        ASSERT_EQ(crossing, 1);
    }
}

TEST(PointSet, ValidatesInput) {
    EXPECT_EQ(code_of([] { PointSet({{0, 0}, {1, 1}, {0, 0}}); }), ErrorCode::GeneralPositionViolated);
    EXPECT_EQ(code_of([] { PointSet({{0, 0}, {1, 1}, {2, 2}}); }), ErrorCode::GeneralPositionViolated);
    EXPECT_EQ(code_of([] { PointSet({{0, 0}, {kCoordinateBound + 1, 1}}); }), ErrorCode::InputOutOfRange);
    const PointSet s({{0, 0}, {5, 1}, {2, 7}});
    EXPECT_EQ(s.size(), 3u);
    EXPECT_EQ(s.at(1), (Point{0, 0}));
    EXPECT_EQ(s.at(3), (Point{2, 7}));
    EXPECT_THROW((void)s.at(0), Error);
    EXPECT_THROW((void)s.at(4), Error);
}

TEST(GeneralPosition, DetectsCollinearTriples) {
    const std::vector<Point> ok{{0, 0}, {4, 1}, {1, 3}, {5, 5}};
    const std::vector<Point> bad{{0, 0}, {4, 1}, {1, 3}, {8, 2}};
    EXPECT_TRUE(in_general_position(ok));
    EXPECT_FALSE(in_general_position(bad));
}

TEST(ConvexPosition, Examples) {
    EXPECT_TRUE(is_convex_position(regular_polygon(5)));
    EXPECT_FALSE(is_convex_position(PointSet({{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 4}})));
    EXPECT_TRUE(is_convex_position(PointSet({{0, 0}, {7, 1}, {3, 9}})));
}

TEST(ConvexPosition, AgreesWithTriangleContainmentOnRandomSets) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + trial % 6;
        const auto pts = ref::random_points(rng, n, 50);
        bool expected = true;
        for (int t = 0; t < n; ++t) {
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    for (int c = b + 1; c < n; ++c) {
                        if (t == a || t == b || t == c) continue;
                        const int o1 = ref::orient(pts[a], pts[b], pts[t]);
                        if (o1 == ref::orient(pts[b], pts[c], pts[t]) && o1 == ref::orient(pts[c], pts[a], pts[t])) {
                            expected = false;
                        }
                    }
                }
            }
        }
        ASSERT_EQ(is_convex_position(PointSet(pts)), expected);
    }
}

TEST(HullClockwise, ListsVerticesClockwise) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto pts = ref::random_convex_points(rng, 3 + trial % 9);
        const PointSet s(pts);
        const auto hull = hull_clockwise(s);
        ASSERT_EQ(hull.size(), pts.size());
        for (std::size_t t = 0; t < hull.size(); ++t) {
            const auto& a = s.at(hull[t]);
            const auto& b = s.at(hull[(t + 1) % hull.size()]);
            const auto& c = s.at(hull[(t + 2) % hull.size()]);
            ASSERT_EQ(ref::orient(a, b, c), -1);
        }
    }
}

TEST(RegularPolygon, ConvexClockwiseAndGeneral) {
    for (int n = 3; n <= 120; ++n) {
        const auto s = regular_polygon(n);
        ASSERT_EQ(s.size(), static_cast<std::size_t>(n));
        ASSERT_TRUE(in_general_position(s.points()));
        ASSERT_TRUE(is_convex_position(s));
        for (int l = 1; l <= n; ++l) {
            const int next = l % n + 1, after = next % n + 1;
            ASSERT_EQ(orient(s.at(l), s.at(next), s.at(after)), -1) << "n=" << n << " label " << l;
        }
    }
    EXPECT_EQ(code_of([] { regular_polygon(2); }), ErrorCode::InvalidOrder);
    EXPECT_EQ(code_of([] { regular_polygon(-1); }), ErrorCode::InvalidOrder);
}

TEST(SideCounts, ConvexGapsAndTotals) {
    const auto s = regular_polygon(13);
    const auto c = side_counts(s, 1, 7);
    EXPECT_EQ(c.left + c.right, 11);
    EXPECT_EQ(std::min(c.left, c.right), 5);
    EXPECT_EQ(std::max(c.left, c.right), 6);
    std::mt19937_64 rng(4);
    const PointSet r(ref::random_points(rng, 15));
    for (int i = 1; i <= 15; ++i) {
        for (int j = 1; j <= 15; ++j) {
            if (i == j) continue;
            const auto a = side_counts(r, i, j);
            const auto b = side_counts(r, j, i);
            ASSERT_EQ(a.left + a.right, 13);
            ASSERT_EQ(a.left, b.right);
        }
    }
}
