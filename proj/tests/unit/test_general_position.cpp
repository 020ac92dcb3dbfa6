#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "geochrom/errors.hpp"
#include "geochrom/general_position.hpp"
#include "support/reference.hpp"

using namespace geochrom;
using namespace geochrom::general;

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

int sign_of(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Side of an integer point with respect to a x + b y + c = 0.
int ref_side(const Line& l, const Point& p) { return sign_of(l.a * p.x + l.b * p.y + l.c); }

// Counts points per sign pattern of the three lines, ignoring points on a line.
std::map<std::array<int, 3>, int> pattern_counts(std::span<const Point> pts, const std::array<Line, 3>& lines) {
    std::map<std::array<int, 3>, int> out;
    for (const auto& p : pts) {
        const std::array<int, 3> s{ref_side(lines[0], p), ref_side(lines[1], p), ref_side(lines[2], p)};
        if (s[0] != 0 && s[1] != 0 && s[2] != 0) ++out[s];
    }
    return out;
}

void expect_partition(std::span<const Point> pts, const SixPartition& part, int min) {
    for (const auto& l : part.lines) {
        ASSERT_EQ(sign_of(l.a * part.apex.x + l.b * part.apex.y + l.c * part.apex.w), 0);
    }
    const auto counts = pattern_counts(pts, part.lines);
    // Three concurrent lines leave two of the eight sign patterns empty.
    const auto nonempty = std::count_if(part.regions.begin(), part.regions.end(),
                                        [](const std::vector<int>& r) { return !r.empty(); });
    ASSERT_EQ(counts.size(), static_cast<std::size_t>(nonempty));
    std::set<std::array<int, 3>> listed;
    for (const auto& region : part.regions) {
        ASSERT_GE(static_cast<int>(region.size()), min);
        ASSERT_FALSE(region.empty() && min > 0);
        if (region.empty()) continue;
        const auto& p0 = pts[static_cast<std::size_t>(region[0])];
        const std::array<int, 3> pat{ref_side(part.lines[0], p0), ref_side(part.lines[1], p0),
                                     ref_side(part.lines[2], p0)};
        ASSERT_TRUE(listed.insert(pat).second);
        ASSERT_EQ(counts.at(pat), static_cast<int>(region.size()));
    }
}

// Strict containment of a rational point in a polygon whose vertices are
// visited in angular order around it: all turns have one sign.
bool ref_inside(const RationalPoint& p, const std::vector<Point>& poly) {
    int sign = 0;
    for (std::size_t t = 0; t < poly.size(); ++t) {
        const auto& u = poly[t];
        const auto& v = poly[(t + 1) % poly.size()];
        const BigInt ux = BigInt(u.x) * p.w - p.x, uy = BigInt(u.y) * p.w - p.y;
        const BigInt vx = BigInt(v.x) * p.w - p.x, vy = BigInt(v.y) * p.w - p.y;
        const int s = sign_of(ux * vy - uy * vx);
        if (s == 0 || (sign != 0 && s != sign)) return false;
        sign = s;
    }
    return true;
}

PointSet random_set(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    return PointSet(ref::random_points(rng, n, 1000000));
}

}  // namespace

TEST(SixPartition, PerturbedHexagon) {
    const PointSet s({{1000, 3}, {502, 866}, {-499, 867}, {-1000, -2}, {-503, -866}, {501, -865}});
    const auto part = six_partition(s);
    expect_partition(s.points(), part, 0);
    EXPECT_TRUE(check_six_partition(s.points(), part, 0));
}

TEST(SixPartition, RandomThirtyHoldsFourPerRegion) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto s = random_set(seed, 30);
        const auto part = six_partition(s);
        expect_partition(s.points(), part, 4);
        ASSERT_TRUE(check_six_partition(s.points(), part, 4));
    }
}

TEST(SixPartition, SkewedSetsStillSucceed) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        std::mt19937_64 rng(seed);
        std::exponential_distribution<double> ex(1.0);
        std::vector<Point> pts;
        while (pts.size() < 42) {
            const double r = ex(rng);
            pts.push_back({static_cast<std::int64_t>(r * r * r * 30000), static_cast<std::int64_t>(rng() % 200000)});
            if (!ref::general_position(pts)) pts.pop_back();
        }
        const auto part = six_partition(pts, 6);
        expect_partition(pts, part, 6);
    }
}

TEST(SixPartition, RegionsAreClockwise) {
    const auto s = random_set(3, 36);
    const auto part = six_partition(s);
    // Representatives of consecutive regions turn clockwise around the apex.
    for (std::size_t r = 0; r < 6; ++r) {
        const auto& a = s.points()[static_cast<std::size_t>(part.regions[r].front())];
        const auto& b = s.points()[static_cast<std::size_t>(part.regions[(r + 1) % 6].front())];
        const BigInt ax = BigInt(a.x) * part.apex.w - part.apex.x, ay = BigInt(a.y) * part.apex.w - part.apex.y;
        const BigInt bx = BigInt(b.x) * part.apex.w - part.apex.x, by = BigInt(b.y) * part.apex.w - part.apex.y;
        EXPECT_LT(sign_of(ax * by - ay * bx), 0);
    }
}

TEST(SixPartition, CheckerRejectsTamperedRegions) {
    const auto s = random_set(1, 30);
    auto part = six_partition(s);
    auto moved = part;
    moved.regions[1].push_back(moved.regions[0].back());
    moved.regions[0].pop_back();
    EXPECT_FALSE(check_six_partition(s.points(), moved, 0));
    EXPECT_FALSE(check_six_partition(s.points(), part, 6));
    EXPECT_EQ(code_of([] { six_partition(PointSet({{0, 0}, {5, 1}, {2, 7}})); }), ErrorCode::PreconditionFailed);
}

TEST(BuildConfiguration, Sizes) {
    const struct {
        int n, m, r;
    } cases[] = {{32, 2, 0}, {45, 3, 0}, {19, 1, 0}, {31, 1, 12}, {58, 4, 0}};
    for (const auto& c : cases) {
        const auto cfg = build_configuration(random_set(static_cast<std::uint64_t>(c.n), c.n));
        EXPECT_EQ(cfg.n, c.n);
        EXPECT_EQ(cfg.m, c.m);
        EXPECT_EQ(cfg.r, c.r);
        EXPECT_EQ(cfg.a_prime.size(), static_cast<std::size_t>(12 * c.m + 6));
        EXPECT_EQ(cfg.b_prime.size(), static_cast<std::size_t>(c.m + c.r));
        for (const auto& g : cfg.groups) EXPECT_EQ(g.size(), static_cast<std::size_t>(2 * c.m));
        EXPECT_EQ(cfg.g.size(), static_cast<std::size_t>(c.m));
    }
    EXPECT_EQ(code_of([] { build_configuration(random_set(1, 18)); }), ErrorCode::PreconditionFailed);
}

TEST(BuildConfiguration, Structure) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = random_set(seed, 32);
        const auto cfg = build_configuration(s);
        // A' lies strictly between the first two horizontal lines, B' between the last two.
        for (int l : cfg.a_prime) {
            ASSERT_LT(ref_side(cfg.horizontal[0], s.at(l)) * ref_side(cfg.horizontal[1], s.at(l)), 0);
        }
        for (int l : cfg.b_prime) {
            ASSERT_LT(ref_side(cfg.horizontal[1], s.at(l)) * ref_side(cfg.horizontal[2], s.at(l)), 0);
        }
        std::set<int> seen(cfg.a_prime.begin(), cfg.a_prime.end());
        for (int l : cfg.b_prime) ASSERT_TRUE(seen.insert(l).second);
        ASSERT_EQ(seen.size(), s.size());
        // Every A' point is above every B' point.
        for (int a : cfg.a_prime) {
            for (int b : cfg.b_prime) ASSERT_GE(s.at(a).y, s.at(b).y);
        }
        std::set<int> a_prime(cfg.a_prime.begin(), cfg.a_prime.end());
        std::set<int> b_prime(cfg.b_prime.begin(), cfg.b_prime.end());
        std::set<int> grouped;
        for (const auto& g : cfg.groups) {
            for (int l : g) {
                ASSERT_TRUE(a_prime.count(l));
                ASSERT_TRUE(grouped.insert(l).second);
            }
        }
        for (int l : cfg.g) ASSERT_TRUE(b_prime.count(l));
        // Groups occupy the six regions of the concurrent lines, one each.
        std::set<std::array<int, 3>> patterns;
        for (const auto& g : cfg.groups) {
            std::set<std::array<int, 3>> own;
            for (int l : g) {
                own.insert({ref_side(cfg.concurrent[0], s.at(l)), ref_side(cfg.concurrent[1], s.at(l)),
                            ref_side(cfg.concurrent[2], s.at(l))});
            }
            ASSERT_EQ(own.size(), 1u);
            ASSERT_TRUE(patterns.insert(*own.begin()).second);
        }
    }
}

TEST(BuildConfiguration, HandlesRepeatedYCoordinates) {
    std::mt19937_64 rng(31);
    std::vector<Point> pts;
    // Pairs of points share a y-coordinate.
    while (pts.size() < 40) {
        const std::int64_t y = static_cast<std::int64_t>(pts.size() / 2) * 50;
        pts.push_back({static_cast<std::int64_t>(rng() % 100000), y});
        if (!ref::general_position(pts)) pts.pop_back();
    }
    const PointSet s(pts);
    const auto cfg = build_configuration(s);
    EXPECT_EQ(cfg.m, 2);
    const auto gc = color_general(s);
    EXPECT_EQ(gc.class_count, 48);
}

TEST(BuildConfiguration, Deterministic) {
    const auto s = random_set(42, 45);
    const auto a = build_configuration(s);
    const auto b = build_configuration(s);
    EXPECT_EQ(a.groups, b.groups);
    EXPECT_EQ(a.g, b.g);
    EXPECT_EQ(a.apex.x, b.apex.x);
    EXPECT_EQ(a.apex.w, b.apex.w);
}

TEST(StrictlyInside, Square) {
    const std::vector<Point> sq{{0, 0}, {0, 10}, {10, 10}, {10, 0}};
    EXPECT_TRUE(strictly_inside({5, 5, 1}, sq));
    EXPECT_TRUE(strictly_inside({1, 19, 2}, sq));
    EXPECT_FALSE(strictly_inside({0, 5, 1}, sq));
    EXPECT_FALSE(strictly_inside({10, 10, 1}, sq));
    EXPECT_FALSE(strictly_inside({21, 5, 2}, sq));
}

TEST(EnumerateFamilies, CountsDisjointnessAndApex) {
    for (int n : {19, 32, 45}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto s = random_set(seed * 100 + static_cast<std::uint64_t>(n), n);
            const auto cfg = build_configuration(s);
            const auto quads = enumerate_families(cfg);
            const auto m = static_cast<std::size_t>(cfg.m);
            ASSERT_EQ(quads.size(), 12 * m * m);
            std::set<EdgeId> used;
            std::map<Family, int> per_family;
            for (const auto& q : quads) {
                ++per_family[q.family];
                for (const auto& e : q.quad) ASSERT_TRUE(used.insert(e).second);
                ASSERT_TRUE(used.insert(q.pendant).second);
                std::vector<Point> poly;
                for (int l : q.cycle) poly.push_back(s.at(l));
                ASSERT_TRUE(ref_inside(cfg.apex, poly));
                ASSERT_TRUE(strictly_inside(cfg.apex, poly));
                for (int t = 0; t < 4; ++t) ASSERT_EQ(q.quad[t], make_edge(q.cycle[t], q.cycle[(t + 1) % 4]));
            }
            for (auto f : {Family::X, Family::Y, Family::Z}) ASSERT_EQ(per_family[f], static_cast<int>(4 * m * m));
        }
    }
}

TEST(EnumerateFamilies, VertexPatternsAndPendants) {
    const auto s = random_set(7, 32);
    const auto cfg = build_configuration(s);
    const auto quads = enumerate_families(cfg);
    auto grp = [&](int g, int idx) { return cfg.groups[static_cast<std::size_t>(g)][static_cast<std::size_t>(idx - 1)]; };
    enum { A, B, C, D, E, F };
    const int pattern[3][4] = {{A, B, D, E}, {B, C, E, F}, {C, D, F, A}};
    for (const auto& q : quads) {
        const auto& p = pattern[static_cast<int>(q.family)];
        ASSERT_EQ(q.cycle[0], grp(p[0], q.i));
        ASSERT_EQ(q.cycle[1], grp(p[1], q.j));
        ASSERT_EQ(q.cycle[2], grp(p[2], q.i));
        ASSERT_EQ(q.cycle[3], grp(p[3], q.j));
        const int g = cfg.g[static_cast<std::size_t>((q.j + 1) / 2 - 1)];
        const int from = q.j % 2 == 0 ? q.cycle[0] : q.cycle[2];
        ASSERT_EQ(q.pendant, make_edge(from, g));
    }
    // X_{1,2}: a_1 joined to g_1.
    const auto x12 = std::find_if(quads.begin(), quads.end(),
                                  [](const PendantQuad& q) { return q.family == Family::X && q.i == 1 && q.j == 2; });
    ASSERT_NE(x12, quads.end());
    EXPECT_EQ(x12->pendant, make_edge(grp(A, 1), cfg.g[0]));
}

TEST(ColorGeneral, ClassesPairwiseIntersect) {
    for (int n : {19, 32}) {
        const auto s = random_set(5, n);
        const auto gc = color_general(s);
        const int expected = n == 19 ? 12 : 48;
        EXPECT_EQ(gc.class_count, expected);
        EXPECT_TRUE(gc.coloring.partial);
        EXPECT_TRUE(ref::is_complete(s.points(), gc.coloring));
        const auto report = verify(s, gc.coloring);
        EXPECT_TRUE(report.is_complete);
        EXPECT_EQ(report.k, expected);
        EXPECT_EQ(gc.coloring.edges.size(), static_cast<std::size_t>(5 * expected));
    }
}
