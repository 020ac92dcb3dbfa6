#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "geochrom/bounds.hpp"
#include "geochrom/convex_coloring.hpp"
#include "geochrom/errors.hpp"
#include "support/reference.hpp"

using namespace geochrom;
using namespace geochrom::bounds;

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

GeometricGraph convex_kn(int n) { return complete_geometric(regular_polygon(n)); }

// Largest t with t (t - 1) / 2 <= pairs, by linear search.
std::int64_t ref_psi_upper(std::int64_t pairs) {
    std::int64_t t = 1;
    while ((t + 1) * t / 2 <= pairs) ++t;
    return t;
}

}  // namespace

TEST(Isqrt, ExactFloor) {
    EXPECT_EQ(isqrt(0), 0u);
    EXPECT_EQ(isqrt(1), 1u);
    EXPECT_EQ(isqrt(105), 10u);
    EXPECT_EQ(isqrt(281), 16u);
    EXPECT_EQ(isqrt(~std::uint64_t{0}), 4294967295u);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 100000; ++t) {
        const std::uint64_t x = t < 50000 ? rng() : rng() % 1000000;
        const unsigned __int128 r = isqrt(x);
        ASSERT_LE(r * r, x);
        ASSERT_GT((r + 1) * (r + 1), x);
    }
    for (std::uint64_t r = 1; r < 5000; ++r) {
        ASSERT_EQ(isqrt(r * r), r);
        ASSERT_EQ(isqrt(r * r - 1), r - 1);
    }
}

TEST(CountCrossings, Examples) {
    EXPECT_EQ(count_crossings(convex_kn(4)), 1);
    EXPECT_EQ(count_crossings(convex_kn(6)), 15);
    const PointSet inner({{0, 0}, {100, 0}, {50, 90}, {50, 30}});
    EXPECT_EQ(count_crossings(complete_geometric(inner)), 0);
    for (int n = 3; n <= 12; ++n) ASSERT_EQ(count_crossings(convex_kn(n)), ref::binom(n, 4));
}

TEST(CountCrossings, MatchesReferenceOnRandomSets) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const auto pts = ref::random_points(rng, 5 + trial % 8);
        const auto g = complete_geometric(PointSet(pts));
        std::int64_t expected = 0;
        for (std::size_t a = 0; a < g.edges.size(); ++a) {
            for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
                const auto &e = g.edges[a], &f = g.edges[b];
                expected += ref::segments_cross(pts[e.i - 1], pts[e.j - 1], pts[f.i - 1], pts[f.j - 1]);
            }
        }
        ASSERT_EQ(count_crossings(g), expected);
        ASSERT_EQ(count_crossings(IntersectionRelation(g)), expected);
    }
}

TEST(IncidenceCount, Examples) {
    EXPECT_EQ(incidence_count(convex_kn(4)), 12);
    EXPECT_EQ(incidence_count(convex_kn(5)), 30);
    const GeometricGraph path{regular_polygon(3), {{1, 2}, {2, 3}}};
    EXPECT_EQ(incidence_count(path), 1);
    for (int n = 3; n <= 30; ++n) ASSERT_EQ(incidence_count(convex_kn(n)), n * ref::binom(n - 1, 2));
}

TEST(PsiUpper, FromCrossings) {
    EXPECT_EQ(psi_upper_from_crossings(convex_kn(4)), 5);
    EXPECT_EQ(psi_upper_from_crossings(convex_kn(5)), 8);
    EXPECT_EQ(psi_upper_from_counts(0, 0), 1);
    EXPECT_EQ(psi_upper_from_counts(12, 1), 5);
    for (std::int64_t pairs = 0; pairs < 3000; ++pairs) {
        ASSERT_EQ(psi_upper_from_counts(pairs, 0), ref_psi_upper(pairs));
        ASSERT_EQ(psi_upper_from_counts(pairs / 2, pairs - pairs / 2), ref_psi_upper(pairs));
    }
}

TEST(PsiUpper, ConvexFormula) {
    EXPECT_EQ(psi_upper_convex(4), 5);
    EXPECT_EQ(psi_upper_convex(5), 7);
    EXPECT_EQ(psi_upper_convex(13), 45);
    for (int n = 3; n <= 100; ++n) {
        const auto m = n * ref::binom(n - 1, 2);
        ASSERT_GE(psi_upper_from_counts(m, ref::binom(n, 4)), psi_upper_convex(n)) << n;
    }
}

TEST(LowerConstruction, Values) {
    EXPECT_FALSE(psi_g_lower_construction(18).has_value());
    EXPECT_EQ(psi_g_lower_construction(19), 12);
    EXPECT_EQ(psi_g_lower_construction(32), 48);
    EXPECT_EQ(psi_g_lower_construction(45), 108);
    EXPECT_EQ(psi_g_lower_construction(31), 12);
    for (std::int64_t n = 19; n <= 2000; ++n) {
        const auto v = *psi_g_lower_construction(n);
        ASSERT_GE(169 * v, 12 * n * n - 169 * 12 * n) << n;
    }
}

TEST(AsymptoticReport, Coefficients) {
    const auto r = asymptotic_report(32);
    EXPECT_EQ(r.psi_g_lower_construction, 48);
    EXPECT_LE(r.coef_upper_derived, kUpperCoefficient);
    EXPECT_NEAR(r.coef_upper_derived, std::sqrt(0.380488 / 12.0), 1e-15);
    EXPECT_GE(r.coef_lower_derived, kLowerCoefficient);
    EXPECT_NEAR(r.coef_lower_derived, 12.0 / 169.0, 1e-15);
    EXPECT_EQ(r.cr_drawing, ref::binom(32, 4));
    EXPECT_EQ(r.m_incidences, 32 * ref::binom(31, 2));
    EXPECT_EQ(r.psi_upper_convex, psi_upper_convex(32));
    EXPECT_EQ(code_of([] { asymptotic_report(18); }), ErrorCode::PreconditionFailed);
}

TEST(BoundsReport, ForDrawing) {
    const auto r = bounds_report(convex_kn(5));
    EXPECT_EQ(r.n, 5);
    EXPECT_EQ(r.m_incidences, 30);
    EXPECT_EQ(r.cr_drawing, 5);
    EXPECT_EQ(r.psi_upper_crossing, 8);
    EXPECT_EQ(r.psi_upper_convex, 7);
    EXPECT_FALSE(r.psi_g_lower_construction.has_value());
}
