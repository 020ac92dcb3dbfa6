#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "geochrom/graph.hpp"

// Lower-bound construction for arbitrary point sets: three horizontal and
// three concurrent lines split the points into groups A..F and G, and the
// X/Y/Z quadrilateral-plus-pendant subgraphs receive one color each.
namespace geochrom::general {

/// Wide enough for every predicate on a perturbed rational apex.
using BigInt = boost::multiprecision::checked_int512_t;

/// Homogeneous point (x / w, y / w) with w > 0.
struct RationalPoint {
    BigInt x;
    BigInt y;
    BigInt w{1};
};

/// a x + b y + c = 0, coefficients reduced by their gcd.
struct Line {
    BigInt a;
    BigInt b;
    BigInt c;
};

/// Sign of a x + b y + c at an integer point.
int side(const Line& line, const Point& p);
int side(const Line& line, const RationalPoint& p);

/// Three concurrent lines through `apex` and the points (indices into the
/// input) strictly inside each of the six open regions, listed clockwise.
struct SixPartition {
    std::array<Line, 3> lines;
    RationalPoint apex;
    std::array<std::vector<int>, 6> regions;
};

/// Searches for three concurrent lines whose six open regions each hold at
/// least `min_per_region` points, and at least one where possible. Throws
/// SearchExhausted when every apex candidate fails.
SixPartition six_partition(std::span<const Point> points, int min_per_region);

/// Uses the bound floor(|S| / 6) - 1. Needs |S| >= 6.
SixPartition six_partition(const PointSet& s);

/// Recounts the regions of `lines` directly from line sides: every listed
/// point must lie strictly off all three lines, regions must be non-empty,
/// pairwise distinct sign patterns, and each must hold at least
/// `min_per_region`.
bool check_six_partition(std::span<const Point> points, const SixPartition& part, int min_per_region);

struct LineConfiguration {
    PointSet points;
    int n = 0;
    int m = 0;
    int r = 0;
    std::array<Line, 3> horizontal;  // top-down
    std::array<Line, 3> concurrent;
    RationalPoint apex;
    std::vector<int> a_prime;                // labels
    std::vector<int> b_prime;                // labels
    std::array<std::vector<int>, 6> groups;  // A..F, 2m labels each, clockwise
    std::vector<int> g;                      // m labels, lowest first
};

/// n = 13m + 6 + r with n > 18. Throws PreconditionFailed for n <= 18.
LineConfiguration build_configuration(const PointSet& s);

enum class Family { X, Y, Z };
std::string_view to_string(Family f) noexcept;

struct PendantQuad {
    Family family = Family::X;
    int i = 0;
    int j = 0;
    std::array<int, 4> cycle{};     // vertex labels in cycle order
    std::array<EdgeId, 4> quad{};   // cycle edges
    EdgeId pendant;
};

/// Strict interior test by winding number; points on the boundary are out.
bool strictly_inside(const RationalPoint& p, std::span<const Point> polygon);

/// The 12 m^2 subgraphs X_{i,j}, Y_{i,j}, Z_{i,j}. Throws ApexNotInside if
/// some quadrilateral fails to contain the apex.
std::vector<PendantQuad> enumerate_families(const LineConfiguration& cfg);

struct GeneralColoring {
    LineConfiguration config;
    std::vector<PendantQuad> quads;
    Coloring coloring;  // partial: only the family edges, color t + 1 for quads[t]
    int class_count = 0;
};

/// One color per PendantQuad. Throws VerificationFailed if two classes fail
/// to intersect.
GeneralColoring color_general(const PointSet& s);

}  // namespace geochrom::general
