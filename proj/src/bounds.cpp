#include "geochrom/bounds.hpp"

#include <cmath>
#include <string>

#include "geochrom/errors.hpp"

namespace geochrom::bounds {

std::uint64_t isqrt(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
    // Correct the floating estimate in both directions.
    while (r > 0 && (r > x / r)) --r;
    while ((r + 1) <= x / (r + 1)) ++r;
    return r;
}

std::int64_t count_crossings(const IntersectionRelation& rel) {
    return rel.count(SegmentRelation::Crossing);
}

std::int64_t count_crossings(const GeometricGraph& g) {
    validate_graph(g);
    std::int64_t total = 0;
    for (std::size_t a = 0; a < g.edges.size(); ++a) {
        const Segment sa{g.points.at(g.edges[a].i), g.points.at(g.edges[a].j)};
        for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
            const Segment sb{g.points.at(g.edges[b].i), g.points.at(g.edges[b].j)};
            total += segments_intersect(sa, sb) == SegmentRelation::Crossing;
        }
    }
    return total;
}

std::int64_t incidence_count(const GeometricGraph& g) {
    std::vector<std::int64_t> degree(g.points.size() + 1, 0);
    for (const auto& e : g.edges) {
        ++degree.at(static_cast<std::size_t>(e.i));
        ++degree.at(static_cast<std::size_t>(e.j));
    }
    std::int64_t m = 0;
    for (auto d : degree) m += d * (d - 1) / 2;
    return m;
}

std::int64_t psi_upper_from_counts(std::int64_t incidences, std::int64_t crossings) {
    const auto radicand = static_cast<std::uint64_t>(1 + 8 * (incidences + crossings));
    return static_cast<std::int64_t>((1 + isqrt(radicand)) / 2);
}

std::int64_t psi_upper_from_crossings(const GeometricGraph& g) {
    return psi_upper_from_counts(incidence_count(g), count_crossings(g));
}

std::int64_t psi_upper_convex(std::int64_t n) { return (n * n + n) / 4; }

std::optional<std::int64_t> psi_g_lower_construction(std::int64_t n) {
    if (n <= 18) return std::nullopt;
    const std::int64_t m = (n - 6) / 13;
    return 12 * m * m;
}

namespace {

void fill_coefficients(BoundsReport& r) {
    r.coef_upper_derived = std::sqrt(r.c_rect / 12.0);
    r.coef_lower_derived = 12.0 / 169.0;
}

}  // namespace

BoundsReport bounds_report(const GeometricGraph& g) {
    BoundsReport r;
    r.n = static_cast<std::int64_t>(g.points.size());
    r.m_incidences = incidence_count(g);
    r.cr_drawing = count_crossings(g);
    r.psi_upper_convex = psi_upper_convex(r.n);
    r.psi_upper_crossing = psi_upper_from_counts(r.m_incidences, r.cr_drawing);
    r.psi_g_lower_construction = psi_g_lower_construction(r.n);
    fill_coefficients(r);
    return r;
}

BoundsReport asymptotic_report(std::int64_t n) {
    if (n <= 18) {
        throw Error(ErrorCode::PreconditionFailed,
                    "asymptotic report needs n > 18, got " + std::to_string(n));
    }
    BoundsReport r;
    r.n = n;
    r.m_incidences = n * ((n - 1) * (n - 2) / 2);
    // Convex drawing: one crossing per 4-subset.
    r.cr_drawing = n * (n - 1) * (n - 2) * (n - 3) / 24;
    r.psi_upper_convex = psi_upper_convex(n);
    r.psi_upper_crossing = psi_upper_from_counts(r.m_incidences, r.cr_drawing);
    r.psi_g_lower_construction = psi_g_lower_construction(n);
    fill_coefficients(r);
    if (r.coef_upper_derived > r.coef_upper) {
        throw Error(ErrorCode::VerificationFailed, "sqrt(c/12) exceeds the upper coefficient");
    }
    if (r.coef_lower_derived < r.coef_lower) {
        throw Error(ErrorCode::VerificationFailed, "12/169 is below the lower coefficient");
    }
    return r;
}

}  // namespace geochrom::bounds
