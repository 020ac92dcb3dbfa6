#pragma once

#include <cstdint>

#include "geochrom/graph.hpp"

// Exact pseudoachromatic / achromatic index of small geometric graphs by
// branch and bound over set partitions of the edges.
namespace geochrom::oracle {

inline constexpr int kMaxEdges = 15;

enum class Index { Psi, Alpha };

struct Options {
    /// Seed the incumbent with the constructive coloring when the graph is a
    /// complete convex geometric graph.
    bool warm_start = true;
};

struct Result {
    int k = 0;
    Coloring witness;
    std::uint64_t nodes = 0;
};

/// Throws TooLarge beyond kMaxEdges edges.
Result solve(const GeometricGraph& g, Index index, Options options = {});

int psi_exact(const GeometricGraph& g, Options options = {});
int alpha_exact(const GeometricGraph& g, Options options = {});

}  // namespace geochrom::oracle
