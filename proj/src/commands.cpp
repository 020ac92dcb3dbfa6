#include "geochrom/commands.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "geochrom/convex_coloring.hpp"
#include "geochrom/errors.hpp"
#include "geochrom/general_position.hpp"

namespace geochrom::commands {
namespace {

constexpr std::int64_t kSampleRange = 1'000'000;
constexpr int kMaxRejections = 100'000;

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::VerificationFailed, what);
}

convex::ConvexColoring k4_alpha() {
    convex::ConvexColoring out;
    out.coloring = convex::color_k4().alpha_variant;
    auto& trace = out.trace;
    trace.n = 4;
    trace.case_tag = convex::ConstructionCase::Small;
    trace.partition = convex::circulant_partition(4);
    const auto classes = color_classes(out.coloring);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        convex::ChromaticClass cls;
        cls.color = static_cast<int>(c) + 1;
        cls.edges = classes[c];
        if (cls.edges.size() == 2) {
            const auto pair = convex::as_halving_pair(4, cls.edges[0], cls.edges[1]);
            require(pair.has_value(), "K4 doubleton is not a halving pair");
            cls.kind = convex::ClassKind::Pair;
            cls.witness = pair->witness;
        } else {
            require(convex::is_halving_edge(4, cls.edges[0]), "K4 singleton is not halving");
            cls.kind = convex::ClassKind::Halving;
        }
        trace.classes.push_back(std::move(cls));
    }
    trace.N3 = static_cast<int>(classes.size());
    return out;
}

// Construction labels 1..n become hull labels in clockwise order.
void relabel(convex::ConvexColoring& cc, const std::vector<int>& hull) {
    auto map = [&](EdgeId& e) {
        e = make_edge(hull[static_cast<std::size_t>(e.i - 1)], hull[static_cast<std::size_t>(e.j - 1)]);
    };
    for (auto& e : cc.coloring.edges) map(e);
    for (auto& cls : cc.trace.classes) {
        for (auto& e : cls.edges) map(e);
        if (cls.witness) map(*cls.witness);
    }
}

}  // namespace

PointSet generate(GenerateKind kind, int n, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::InvalidOrder, "need n >= 3, got " + std::to_string(n));
    if (kind == GenerateKind::Convex) return regular_polygon(n);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-kSampleRange, kSampleRange);
    std::vector<Point> pts;
    int rejections = 0;
    while (static_cast<int>(pts.size()) < n) {
        const Point p{coord(rng), coord(rng)};
        bool ok = true;
        for (std::size_t a = 0; a < pts.size() && ok; ++a) {
            if (pts[a] == p) ok = false;
            for (std::size_t b = a + 1; b < pts.size() && ok; ++b) {
                if (orient(pts[a], pts[b], p) == 0) ok = false;
            }
        }
        if (ok) {
            pts.push_back(p);
            rejections = 0;
        } else if (++rejections > kMaxRejections) {
            throw Error(ErrorCode::SearchExhausted, "could not sample a point in general position");
        }
    }
    return PointSet(std::move(pts));
}

ColorResult color(const PointSet& s, ColorMode mode, bool with_bounds) {
    ColorResult out;
    const int n = static_cast<int>(s.size());
    if (mode == ColorMode::Convex) {
        if (n < 3) throw Error(ErrorCode::InvalidOrder, "need n >= 3, got " + std::to_string(n));
        if (!is_convex_position(s)) throw Error(ErrorCode::NotConvex, "points are not in convex position");
        auto cc = n == 4 ? k4_alpha() : convex::color_convex(n);
        auto hull = hull_clockwise(s);
        // Start at the smallest label so clockwise-labelled input keeps its labels.
        std::rotate(hull.begin(), std::min_element(hull.begin(), hull.end()), hull.end());
        relabel(cc, hull);
        out.coloring = cc.coloring;
        out.aux = io::to_json(cc.trace);
        const IntersectionRelation rel(complete_geometric(s));
        out.report = geochrom::verify(rel, out.coloring);
        require(out.report.is_proper, "convex coloring is not proper");
        require(out.report.is_complete, "convex coloring is not complete");
        require(out.report.k == (n == 4 ? 4 : convex::tight_color_count(n)), "convex coloring misses the tight count");
        require(singleton_bound_holds(rel, out.coloring), "more than n singleton classes");
    } else {
        const auto gc = general::color_general(s);
        out.coloring = gc.coloring;
        out.aux = io::to_json(gc.config);
        out.report = geochrom::verify(s, out.coloring);
        require(out.report.is_complete, "general coloring is not complete");
        require(out.report.k == 12 * gc.config.m * gc.config.m, "general coloring misses 12 m^2 classes");
    }
    if (with_bounds) out.bounds = bounds(s);
    return out;
}

VerificationReport verify(const PointSet& s, const Coloring& c) { return geochrom::verify(s, c); }

bounds::BoundsReport bounds(const PointSet& s) { return bounds::bounds_report(complete_geometric(s)); }

ExactResult exact(const PointSet& s, oracle::Index index, bool warm_start) {
    const auto g = complete_geometric(s);
    const auto res = oracle::solve(g, index, {.warm_start = warm_start});
    ExactResult out{index, res.k, res.witness};
    if (res.k > 0) {
        const IntersectionRelation rel(g);
        const auto report = geochrom::verify(rel, out.witness);
        require(report.is_complete && report.k == res.k, "oracle witness is not a complete coloring");
        require(index == oracle::Index::Psi || report.is_proper, "oracle witness is not proper");
        require(singleton_bound_holds(rel, out.witness), "oracle witness has more than n singleton classes");
    }
    return out;
}

io::Json to_json(const ExactResult& r) {
    return io::Json{{"index", r.index == oracle::Index::Psi ? "psi" : "alpha"},
                    {"k", r.k},
                    {"witness", r.k > 0 ? io::to_json(r.witness) : io::Json(nullptr)}};
}

}  // namespace geochrom::commands
