#include "geochrom/oracle.hpp"

#include <string>

#include "geochrom/convex_coloring.hpp"
#include "geochrom/errors.hpp"

namespace geochrom::oracle {
namespace {

using Mask = std::uint32_t;

class Search {
public:
    Search(const IntersectionRelation& rel, Index index) : rel_(rel), alpha_(index == Index::Alpha) {
        edges_ = rel.edge_count();
        meets_.assign(static_cast<std::size_t>(edges_), 0);
        for (int a = 0; a < edges_; ++a) {
            for (int b = 0; b < edges_; ++b) {
                if (a != b && rel.intersect(a, b)) meets_[static_cast<std::size_t>(a)] |= Mask{1} << b;
            }
        }
    }

    void seed(int k, std::vector<Mask> classes) {
        best_ = k;
        best_classes_ = std::move(classes);
    }

    void run() { descend(0); }

    [[nodiscard]] int best() const noexcept { return best_; }
    [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

    [[nodiscard]] Coloring witness() const {
        std::vector<std::vector<EdgeId>> classes;
        for (Mask m : best_classes_) {
            std::vector<EdgeId> cls;
            for (int e = 0; e < edges_; ++e) {
                if (m & (Mask{1} << e)) cls.push_back(rel_.edge(e));
            }
            classes.push_back(std::move(cls));
        }
        return coloring_from_classes(rel_.vertex_count(), classes);
    }

private:
    // Edges of class c together with every edge meeting one of them.
    [[nodiscard]] Mask reach(std::size_t c) const noexcept { return reach_[c]; }

    [[nodiscard]] bool pair_met(std::size_t c, std::size_t d) const noexcept {
        return (reach_[c] & members_[d]) != 0;
    }

    // Some completion could still make classes c and d intersect.
    [[nodiscard]] bool pair_satisfiable(std::size_t c, std::size_t d, Mask pending) const noexcept {
        if (pair_met(c, d)) return true;
        Mask joiners = (reach_[c] | reach_[d]) & pending;
        if (alpha_) {
            joiners = ((reach_[c] & ~reach_[d]) | (reach_[d] & ~reach_[c])) & pending;
        }
        if (joiners) return true;
        for (int e = 0; e < edges_; ++e) {
            if ((pending & (Mask{1} << e)) && (meets_[static_cast<std::size_t>(e)] & pending)) return true;
        }
        return false;
    }

    void descend(int pos) {
        ++nodes_;
        const int open = static_cast<int>(members_.size());
        if (open + (edges_ - pos) <= best_) return;
        const Mask pending = pos >= edges_ ? 0 : (~Mask{0} << pos) & ((Mask{1} << edges_) - 1);
        for (std::size_t c = 0; c < members_.size(); ++c) {
            for (std::size_t d = c + 1; d < members_.size(); ++d) {
                if (!pair_satisfiable(c, d, pending)) return;
            }
        }
        if (pos == edges_) {
            best_ = open;
            best_classes_ = members_;
            return;
        }
        const Mask bit = Mask{1} << pos;
        const Mask meets = meets_[static_cast<std::size_t>(pos)];
        // Opening a new class first reaches large k sooner.
        members_.push_back(bit);
        reach_.push_back(bit | meets);
        descend(pos + 1);
        members_.pop_back();
        reach_.pop_back();
        for (std::size_t c = 0; c < members_.size(); ++c) {
            if (alpha_ && (members_[c] & meets)) continue;
            const Mask saved_members = members_[c];
            const Mask saved_reach = reach_[c];
            members_[c] |= bit;
            reach_[c] |= bit | meets;
            descend(pos + 1);
            members_[c] = saved_members;
            reach_[c] = saved_reach;
        }
    }

    const IntersectionRelation& rel_;
    bool alpha_;
    int edges_ = 0;
    std::vector<Mask> meets_;
    std::vector<Mask> members_;
    std::vector<Mask> reach_;
    int best_ = 0;
    std::vector<Mask> best_classes_;
    std::uint64_t nodes_ = 0;
};

bool is_complete_graph(const GeometricGraph& g) {
    const auto n = g.points.size();
    return g.edges.size() == n * (n - 1) / 2;
}

// Constructive coloring relabelled onto the hull order of a convex set.
std::optional<Coloring> construction_for(const GeometricGraph& g, Index index) {
    const int n = static_cast<int>(g.points.size());
    if (n < 3 || !is_complete_graph(g) || !is_convex_position(g.points)) return std::nullopt;
    Coloring base;
    if (n == 4) {
        const auto k4 = convex::color_k4();
        base = index == Index::Psi ? k4.psi_variant : k4.alpha_variant;
    } else {
        base = convex::color_convex(n).coloring;
    }
    const auto hull = hull_clockwise(g.points);
    for (auto& e : base.edges) {
        e = make_edge(hull[static_cast<std::size_t>(e.i - 1)], hull[static_cast<std::size_t>(e.j - 1)]);
    }
    return base;
}

}  // namespace

Result solve(const GeometricGraph& g, Index index, Options options) {
    if (g.edges.size() > static_cast<std::size_t>(kMaxEdges)) {
        throw Error(ErrorCode::TooLarge, "exact search is limited to " + std::to_string(kMaxEdges) +
                                             " edges, got " + std::to_string(g.edges.size()));
    }
    const IntersectionRelation rel(g);
    Search search(rel, index);
    if (options.warm_start && rel.edge_count() > 0) {
        if (auto warm = construction_for(g, index)) {
            const auto report = verify(rel, *warm);
            if (report.is_complete && (index == Index::Psi || report.is_proper)) {
                const auto classes = color_classes(*warm);
                std::vector<Mask> masks;
                for (const auto& cls : classes) {
                    Mask m = 0;
                    for (const auto& e : cls) m |= Mask{1} << *rel.index_of(e);
                    masks.push_back(m);
                }
                search.seed(warm->k, std::move(masks));
            }
        }
    }
    search.run();
    Result out;
    out.k = search.best();
    out.nodes = search.nodes();
    if (out.k > 0) out.witness = search.witness();
    return out;
}

int psi_exact(const GeometricGraph& g, Options options) { return solve(g, Index::Psi, options).k; }

int alpha_exact(const GeometricGraph& g, Options options) { return solve(g, Index::Alpha, options).k; }

}  // namespace geochrom::oracle
