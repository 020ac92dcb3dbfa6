#pragma once

#include <cstdint>
#include <optional>

#include "geochrom/graph.hpp"

namespace geochrom::bounds {

/// Published rectilinear crossing constant for K_n.
inline constexpr double kRectilinearCrossingConstant = 0.380488;
inline constexpr double kUpperCoefficient = 0.1781;
inline constexpr double kLowerCoefficient = 0.0710;

/// floor(sqrt(x)), exact for the whole range.
std::uint64_t isqrt(std::uint64_t x);

std::int64_t count_crossings(const GeometricGraph& g);
std::int64_t count_crossings(const IntersectionRelation& rel);

/// Sum over vertices of C(deg v, 2).
std::int64_t incidence_count(const GeometricGraph& g);

/// floor((1 + sqrt(1 + 8 (incidences + crossings))) / 2).
std::int64_t psi_upper_from_counts(std::int64_t incidences, std::int64_t crossings);
std::int64_t psi_upper_from_crossings(const GeometricGraph& g);

/// floor((n^2 + n) / 4).
std::int64_t psi_upper_convex(std::int64_t n);

/// 12 m^2 for n = 13m + 6 + r, defined for n > 18.
std::optional<std::int64_t> psi_g_lower_construction(std::int64_t n);

struct BoundsReport {
    std::int64_t n = 0;
    std::int64_t m_incidences = 0;
    std::int64_t cr_drawing = 0;
    std::int64_t psi_upper_convex = 0;
    std::int64_t psi_upper_crossing = 0;
    std::optional<std::int64_t> psi_g_lower_construction;
    double c_rect = kRectilinearCrossingConstant;
    double coef_upper = kUpperCoefficient;
    double coef_lower = kLowerCoefficient;
    // Informational: sqrt(c_rect / 12) and 12 / 169.
    double coef_upper_derived = 0.0;
    double coef_lower_derived = 0.0;
};

/// Counted bounds for a given drawing.
BoundsReport bounds_report(const GeometricGraph& g);

/// Report for the convex drawing of K_n (n > 18). Throws PreconditionFailed
/// otherwise, and VerificationFailed if a derived coefficient violates the
/// published constant.
BoundsReport asymptotic_report(std::int64_t n);

}  // namespace geochrom::bounds
