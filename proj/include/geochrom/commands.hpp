#pragma once

#include <cstdint>
#include <optional>

#include "geochrom/bounds.hpp"
#include "geochrom/io.hpp"
#include "geochrom/oracle.hpp"

// Command layer behind the CLI. Every producer re-verifies its output and
// throws VerificationFailed instead of returning something unchecked.
namespace geochrom::commands {

enum class GenerateKind { Convex, Random };

/// Convex: regular polygon. Random: rejection-sampled integer points in
/// [-10^6, 10^6]^2 with no three collinear. Throws InvalidOrder for n < 3.
PointSet generate(GenerateKind kind, int n, std::uint64_t seed);

enum class ColorMode { Convex, General };

struct ColorResult {
    Coloring coloring;
    io::Json aux;  // construction trace (convex) or line configuration (general)
    VerificationReport report;
    std::optional<bounds::BoundsReport> bounds;
};

/// Convex mode needs convex position (NotConvex otherwise) and labels the
/// construction along the clockwise hull; n = 4 yields the proper variant.
ColorResult color(const PointSet& s, ColorMode mode, bool with_bounds);

/// Report for a full or partial coloring of `s`.
VerificationReport verify(const PointSet& s, const Coloring& c);

/// Counted bounds of the complete geometric graph on `s`.
bounds::BoundsReport bounds(const PointSet& s);

struct ExactResult {
    oracle::Index index = oracle::Index::Psi;
    int k = 0;
    Coloring witness;
};

/// Exact index of the complete geometric graph on `s`.
ExactResult exact(const PointSet& s, oracle::Index index, bool warm_start);

io::Json to_json(const ExactResult& r);

}  // namespace geochrom::commands
