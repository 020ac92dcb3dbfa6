#include "geochrom/graph.hpp"

#include <algorithm>
#include <string>

#include "geochrom/errors.hpp"

namespace geochrom {
namespace {

std::string edge_str(const EdgeId& e) {
    return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

}  // namespace

EdgeId make_edge(int a, int b) {
    if (a == b) throw Error(ErrorCode::MalformedInput, "loop at vertex " + std::to_string(a));
    return a < b ? EdgeId{a, b} : EdgeId{b, a};
}

GeometricGraph complete_geometric(const PointSet& s) {
    GeometricGraph g{s, {}};
    const int n = static_cast<int>(s.size());
    g.edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) g.edges.push_back({i, j});
    }
    return g;
}

void validate_graph(const GeometricGraph& g) {
    const int n = static_cast<int>(g.points.size());
    std::vector<EdgeId> sorted = g.edges;
    for (const auto& e : sorted) {
        if (e.i < 1 || e.i >= e.j || e.j > n) {
            throw Error(ErrorCode::MalformedInput, "edge " + edge_str(e) + " invalid for n=" +
                                                       std::to_string(n));
        }
    }
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorCode::MalformedInput, "duplicate edge");
    }
}

IntersectionRelation::IntersectionRelation(const GeometricGraph& g)
    : n_(static_cast<int>(g.points.size())), edges_(g.edges) {
    validate_graph(g);
    const auto side = static_cast<std::size_t>(n_ + 1);
    index_.assign(side * side, -1);
    for (std::size_t t = 0; t < edges_.size(); ++t) {
        index_[static_cast<std::size_t>(edges_[t].i) * side + static_cast<std::size_t>(edges_[t].j)] =
            static_cast<int>(t);
    }
    const auto m = edges_.size();
    table_.assign(m * m, static_cast<std::uint8_t>(SegmentRelation::Disjoint));
    for (std::size_t a = 0; a < m; ++a) {
        const Segment sa{g.points.at(edges_[a].i), g.points.at(edges_[a].j)};
        for (std::size_t b = a + 1; b < m; ++b) {
            const Segment sb{g.points.at(edges_[b].i), g.points.at(edges_[b].j)};
            const auto r = static_cast<std::uint8_t>(segments_intersect(sa, sb));
            table_[a * m + b] = r;
            table_[b * m + a] = r;
        }
    }
}

std::optional<int> IntersectionRelation::index_of(const EdgeId& e) const {
    if (e.i < 1 || e.j > n_ || e.i >= e.j) return std::nullopt;
    const int t = index_[static_cast<std::size_t>(e.i) * static_cast<std::size_t>(n_ + 1) +
                         static_cast<std::size_t>(e.j)];
    if (t < 0) return std::nullopt;
    return t;
}

SegmentRelation IntersectionRelation::relation(const EdgeId& e, const EdgeId& f) const {
    const auto a = index_of(e);
    const auto b = index_of(f);
    if (!a || !b) throw Error(ErrorCode::MalformedInput, "edge not in graph");
    return relation(*a, *b);
}

std::int64_t IntersectionRelation::count(SegmentRelation kind) const {
    std::int64_t total = 0;
    const int m = edge_count();
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) total += relation(a, b) == kind;
    }
    return total;
}

Coloring coloring_from_classes(int n, const std::vector<std::vector<EdgeId>>& classes) {
    Coloring c;
    c.n = n;
    c.k = static_cast<int>(classes.size());
    for (std::size_t color = 0; color < classes.size(); ++color) {
        for (const auto& e : classes[color]) {
            c.edges.push_back(e);
            c.colors.push_back(static_cast<int>(color) + 1);
        }
    }
    return c;
}

std::vector<std::vector<EdgeId>> color_classes(const Coloring& c) {
    if (c.edges.size() != c.colors.size()) {
        throw Error(ErrorCode::MalformedColoring, "edges and colors differ in length");
    }
    if (c.k < 1) throw Error(ErrorCode::MalformedColoring, "coloring uses no colors");
    std::vector<std::vector<EdgeId>> classes(static_cast<std::size_t>(c.k));
    for (std::size_t t = 0; t < c.edges.size(); ++t) {
        const int color = c.colors[t];
        if (color < 1 || color > c.k) {
            throw Error(ErrorCode::MalformedColoring,
                        "color " + std::to_string(color) + " outside 1.." + std::to_string(c.k));
        }
        classes[static_cast<std::size_t>(color - 1)].push_back(c.edges[t]);
    }
    for (std::size_t color = 0; color < classes.size(); ++color) {
        if (classes[color].empty()) {
            throw Error(ErrorCode::MalformedColoring,
                        "color " + std::to_string(color + 1) + " is unused");
        }
        std::sort(classes[color].begin(), classes[color].end());
    }
    return classes;
}

VerificationReport verify(const IntersectionRelation& rel, const Coloring& c) {
    if (c.n != rel.vertex_count()) {
        throw Error(ErrorCode::MalformedColoring, "coloring order " + std::to_string(c.n) +
                                                      " differs from graph order " +
                                                      std::to_string(rel.vertex_count()));
    }
    const auto classes = color_classes(c);

    // Totality: every graph edge colored exactly once, nothing else colored.
    std::vector<int> seen(static_cast<std::size_t>(rel.edge_count()), 0);
    std::vector<std::vector<int>> members(classes.size());
    for (std::size_t color = 0; color < classes.size(); ++color) {
        for (const auto& e : classes[color]) {
            const auto t = rel.index_of(e);
            if (!t) throw Error(ErrorCode::MalformedColoring, "edge " + edge_str(e) + " not in graph");
            if (seen[static_cast<std::size_t>(*t)]++) {
                throw Error(ErrorCode::MalformedColoring, "edge " + edge_str(e) + " colored twice");
            }
            members[color].push_back(*t);
        }
    }
    for (std::size_t t = 0; t < seen.size(); ++t) {
        if (!seen[t]) {
            throw Error(ErrorCode::MalformedColoring,
                        "edge " + edge_str(rel.edge(static_cast<int>(t))) + " is uncolored");
        }
    }

    VerificationReport report;
    report.k = c.k;
    for (std::size_t color = 0; color < members.size(); ++color) {
        const auto& cls = members[color];
        if (cls.size() == 1) ++report.singleton_classes;
        for (std::size_t x = 0; x < cls.size(); ++x) {
            for (std::size_t y = x + 1; y < cls.size(); ++y) {
                if (rel.intersect(cls[x], cls[y])) {
                    report.proper_violations.emplace_back(classes[color][x], classes[color][y]);
                }
            }
        }
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            bool met = false;
            for (int ea : members[a]) {
                for (int eb : members[b]) {
                    if (rel.intersect(ea, eb)) {
                        met = true;
                        break;
                    }
                }
                if (met) break;
            }
            if (!met) {
                report.completeness_violations.emplace_back(static_cast<int>(a) + 1,
                                                            static_cast<int>(b) + 1);
            }
        }
    }
    std::sort(report.proper_violations.begin(), report.proper_violations.end());
    report.is_proper = report.proper_violations.empty();
    report.is_complete = report.completeness_violations.empty();
    return report;
}

VerificationReport verify(const PointSet& s, const Coloring& c) {
    try {
        const IntersectionRelation rel(GeometricGraph{s, c.edges});
        return verify(rel, c);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::MalformedInput) throw Error(ErrorCode::MalformedColoring, e.what());
        throw;
    }
}

bool singleton_bound_holds(const IntersectionRelation& rel, const Coloring& c) {
    const auto report = verify(rel, c);
    if (!report.is_complete) {
        throw Error(ErrorCode::NotComplete, "singleton bound applies to complete colorings only");
    }
    return report.singleton_classes <= rel.vertex_count();
}

bool has_disjoint_pair(const IntersectionRelation& rel, std::span<const int> edge_indices) {
    for (std::size_t x = 0; x < edge_indices.size(); ++x) {
        for (std::size_t y = x + 1; y < edge_indices.size(); ++y) {
            if (!rel.intersect(edge_indices[x], edge_indices[y])) return true;
        }
    }
    return false;
}

}  // namespace geochrom
