#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geochrom/geometry.hpp"

namespace geochrom {

/// Undirected edge between 1-based labels, stored with i < j.
struct EdgeId {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Normalizes the endpoint order. Throws MalformedInput on a loop.
EdgeId make_edge(int a, int b);

inline bool shares_endpoint(const EdgeId& e, const EdgeId& f) noexcept {
    return e.i == f.i || e.i == f.j || e.j == f.i || e.j == f.j;
}

struct GeometricGraph {
    PointSet points;
    std::vector<EdgeId> edges;
};

/// All C(n,2) segments over `s`, ordered lexicographically.
GeometricGraph complete_geometric(const PointSet& s);

/// Throws MalformedInput when an edge leaves the label range or repeats.
void validate_graph(const GeometricGraph& g);

/// Pairwise Disjoint / SharedEndpoint / Crossing relation over the edges of
/// a graph, computed once and immutable afterwards.
class IntersectionRelation {
public:
    explicit IntersectionRelation(const GeometricGraph& g);

    [[nodiscard]] int vertex_count() const noexcept { return n_; }
    [[nodiscard]] int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    [[nodiscard]] std::span<const EdgeId> edges() const noexcept { return edges_; }
    [[nodiscard]] const EdgeId& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }
    [[nodiscard]] std::optional<int> index_of(const EdgeId& e) const;

    [[nodiscard]] SegmentRelation relation(int a, int b) const noexcept {
        return static_cast<SegmentRelation>(table_[static_cast<std::size_t>(a) * edges_.size() +
                                                   static_cast<std::size_t>(b)]);
    }
    [[nodiscard]] bool intersect(int a, int b) const noexcept {
        return relation(a, b) != SegmentRelation::Disjoint;
    }
    [[nodiscard]] SegmentRelation relation(const EdgeId& e, const EdgeId& f) const;

    [[nodiscard]] std::int64_t count(SegmentRelation kind) const;

private:
    int n_ = 0;
    std::vector<EdgeId> edges_;
    std::vector<int> index_;  // (n+1)^2 label table, -1 when absent
    std::vector<std::uint8_t> table_;
};

/// Colors are 1..k; `colors[t]` is the color of `edges[t]`.
struct Coloring {
    int n = 0;
    std::vector<EdgeId> edges;
    std::vector<int> colors;
    int k = 0;
    bool partial = false;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Builds a coloring with k = number of distinct colors, from explicit
/// chromatic classes (class c gets color c + 1).
Coloring coloring_from_classes(int n, const std::vector<std::vector<EdgeId>>& classes);

/// Chromatic classes of a coloring indexed by color - 1. Throws
/// MalformedColoring when colors fall outside 1..k or one is unused.
std::vector<std::vector<EdgeId>> color_classes(const Coloring& c);

struct VerificationReport {
    bool is_proper = false;
    bool is_complete = false;
    int k = 0;
    int singleton_classes = 0;
    std::vector<std::pair<EdgeId, EdgeId>> proper_violations;
    std::vector<std::pair<int, int>> completeness_violations;
};

/// Checks a total, surjective coloring of exactly the relation's edges.
/// Partial or non-surjective colorings throw MalformedColoring.
VerificationReport verify(const IntersectionRelation& rel, const Coloring& c);

/// Convenience overload: the graph is the point set plus the colored edges.
VerificationReport verify(const PointSet& s, const Coloring& c);

/// At most n singleton classes. Throws NotComplete for incomplete colorings.
bool singleton_bound_holds(const IntersectionRelation& rel, const Coloring& c);

/// True when some two of the listed edges (relation indices) are disjoint.
bool has_disjoint_pair(const IntersectionRelation& rel, std::span<const int> edge_indices);

}  // namespace geochrom
