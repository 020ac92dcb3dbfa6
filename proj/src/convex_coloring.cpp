#include "geochrom/convex_coloring.hpp"

#include <algorithm>
#include <string>

#include "geochrom/errors.hpp"

namespace geochrom::convex {
namespace {

std::string edge_str(const EdgeId& e) {
    return "e_{" + std::to_string(e.i) + "," + std::to_string(e.j) + "}";
}

[[noreturn]] void construction_bug(int n, const std::string& what) {
    throw Error(ErrorCode::VerificationFailed,
                "convex construction n=" + std::to_string(n) + ": " + what);
}

// Accumulates chromatic classes by color and checks coverage at the end.
class ClassBuilder {
public:
    ClassBuilder(int n, int colors) : n_(n), classes_(static_cast<std::size_t>(colors)) {}

    void single(int color, const EdgeId& e, ClassKind kind) {
        auto& cls = slot(color);
        cls.edges = {e};
        cls.kind = kind;
    }

    // first = e_{a,b}, second = e_{b+1,c}
    void pair(int color, long long a, long long b, long long c, const EdgeId& witness) {
        const auto hp = make_halving_pair(n_, a, b, c, witness);
        auto& cls = slot(color);
        cls.edges = {hp.first, hp.second};
        cls.kind = ClassKind::Pair;
        cls.witness = hp.witness;
    }

    void repair(int color, const EdgeId& leftover, std::vector<Repair>& log) {
        auto& cls = classes_.at(static_cast<std::size_t>(color - 1));
        if (cls.edges.size() != 1 || !is_halving_edge(n_, cls.edges.front())) {
            construction_bug(n_, "repair target " + std::to_string(color) +
                                     " is not a single halving edge");
        }
        if (chords_intersect(n_, cls.edges.front(), leftover)) {
            construction_bug(n_, "leftover " + edge_str(leftover) + " meets " +
                                     edge_str(cls.edges.front()));
        }
        cls.witness = cls.edges.front();
        cls.edges.push_back(leftover);
        cls.kind = ClassKind::Repair;
        log.push_back({leftover, color});
    }

    std::vector<ChromaticClass> finish() {
        std::vector<int> seen(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 1), 0);
        std::size_t total = 0;
        for (const auto& cls : classes_) {
            if (cls.color == 0) construction_bug(n_, "a color was never assigned");
            for (const auto& e : cls.edges) {
                if (seen[static_cast<std::size_t>(e.i * (n_ + 1) + e.j)]++) {
                    construction_bug(n_, edge_str(e) + " colored twice");
                }
                ++total;
            }
        }
        if (total != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2) {
            construction_bug(n_, "coloring is not total");
        }
        return std::move(classes_);
    }

private:
    ChromaticClass& slot(int color) {
        if (color < 1 || static_cast<std::size_t>(color) > classes_.size()) {
            construction_bug(n_, "color " + std::to_string(color) + " out of range");
        }
        auto& cls = classes_[static_cast<std::size_t>(color - 1)];
        if (cls.color != 0) construction_bug(n_, "color " + std::to_string(color) + " reused");
        cls.color = color;
        return cls;
    }

    int n_;
    std::vector<ChromaticClass> classes_;
};

Coloring to_coloring(int n, const std::vector<ChromaticClass>& classes) {
    std::vector<std::vector<EdgeId>> edges;
    edges.reserve(classes.size());
    for (const auto& cls : classes) edges.push_back(cls.edges);
    return coloring_from_classes(n, edges);
}

ChromaticClass classify_small(int n, int color, const std::vector<EdgeId>& edges) {
    ChromaticClass cls{color, edges, ClassKind::Halving, std::nullopt};
    if (edges.size() == 2) {
        const auto hp = as_halving_pair(n, edges[0], edges[1]);
        if (!hp) construction_bug(n, "class " + std::to_string(color) + " is not a halving pair");
        cls.kind = ClassKind::Pair;
        cls.witness = hp->witness;
    } else if (!is_halving_edge(n, edges.front())) {
        construction_bug(n, "class " + std::to_string(color) + " is not a halving edge");
    }
    return cls;
}

ConvexColoring small_coloring(int n) {
    std::vector<std::vector<EdgeId>> classes;
    if (n == 5) {
        // Colors 1..7 of the explicit K5 coloring.
        classes = {{{1, 3}}, {{3, 5}}, {{1, 4}}, {{2, 5}},
                   {{1, 2}, {3, 4}}, {{2, 3}, {4, 5}}, {{2, 4}, {1, 5}}};
    } else {
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) classes.push_back({{i, j}});
        }
    }
    ConvexColoring out;
    out.trace.n = n;
    out.trace.case_tag = ConstructionCase::Small;
    out.trace.partition = circulant_partition(n);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        out.trace.classes.push_back(classify_small(n, static_cast<int>(c) + 1, classes[c]));
    }
    out.trace.N3 = static_cast<int>(classes.size());
    out.coloring = coloring_from_classes(n, classes);
    return out;
}

}  // namespace

int wrap_label(int n, long long x) {
    const long long r = ((x - 1) % n + n) % n;
    return static_cast<int>(r) + 1;
}

EdgeId chord(int n, long long a, long long b) { return make_edge(wrap_label(n, a), wrap_label(n, b)); }

int residue(int n, const EdgeId& e) {
    const int d = e.j - e.i;
    return std::min(d, n - d);
}

bool chords_intersect(int n, const EdgeId& e, const EdgeId& f) {
    (void)n;
    if (shares_endpoint(e, f)) return true;
    const bool fi_inside = e.i < f.i && f.i < e.j;
    const bool fj_inside = e.i < f.j && f.j < e.j;
    return fi_inside != fj_inside;
}

int tight_color_count(int n) { return (n * n + n) / 4; }

CirculantClass circulant_class(int n, std::vector<int> residues) {
    CirculantClass cls{n, std::move(residues), {}};
    for (int k : cls.residues) {
        if (k < 1 || k > n / 2) {
            throw Error(ErrorCode::InvalidOrder,
                        "residue " + std::to_string(k) + " outside 1..floor(n/2)");
        }
        for (int j = 1; j <= n; ++j) cls.edges.push_back(chord(n, j, j + k));
    }
    std::sort(cls.edges.begin(), cls.edges.end());
    cls.edges.erase(std::unique(cls.edges.begin(), cls.edges.end()), cls.edges.end());
    return cls;
}

std::vector<CirculantClass> circulant_partition(int n) {
    if (n < 3) throw Error(ErrorCode::InvalidOrder, "partition needs n >= 3");
    const int h = n / 2;
    std::vector<CirculantClass> parts;
    parts.push_back(circulant_class(n, {h}));
    if (h - 1 >= 1) parts.push_back(circulant_class(n, {h - 1}));
    const int top = (h - 1) / 2;
    for (int i = 1; i <= top; ++i) {
        const int ip = h - 1 - i;
        parts.push_back(circulant_class(n, i == ip ? std::vector<int>{i} : std::vector<int>{i, ip}));
    }
    return parts;
}

bool is_halving_edge(int n, const EdgeId& e) {
    const int d = e.j - e.i;
    const int need = (n - 2) / 2;
    return d - 1 >= need && n - d - 1 >= need;
}

bool is_halving_edge(const PointSet& s, const EdgeId& e) {
    const int need = (static_cast<int>(s.size()) - 2) / 2;
    const auto sides = side_counts(s, e.i, e.j);
    return sides.left >= need && sides.right >= need;
}

bool is_almost_halving_edge(int n, const EdgeId& e) {
    if (n % 2 != 0) {
        throw Error(ErrorCode::EvenOrderRequired,
                    "almost-halving edges are defined for even n, got " + std::to_string(n));
    }
    const auto shifted = [&](int from, int to) {
        const int next = wrap_label(n, to + 1);
        return next != from && is_halving_edge(n, make_edge(from, next));
    };
    return shifted(e.i, e.j) || shifted(e.j, e.i);
}

std::vector<EdgeId> halving_edges(int n) {
    std::vector<EdgeId> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (is_halving_edge(n, {i, j})) out.push_back({i, j});
        }
    }
    return out;
}

std::vector<EdgeId> almost_halving_edges(int n) {
    std::vector<EdgeId> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (is_almost_halving_edge(n, {i, j})) out.push_back({i, j});
        }
    }
    return out;
}

HalvingPair make_halving_pair(int n, long long a, long long b, long long c,
                              std::optional<EdgeId> witness) {
    const EdgeId first = chord(n, a, b);
    const EdgeId second = chord(n, b + 1, c);
    if (chords_intersect(n, first, second)) {
        throw Error(ErrorCode::VerificationFailed,
                    edge_str(first) + " and " + edge_str(second) + " intersect");
    }
    const EdgeId candidates[] = {chord(n, a, b + 1), chord(n, a, c), chord(n, b, c)};
    if (witness) {
        if (std::find(std::begin(candidates), std::end(candidates), *witness) ==
                std::end(candidates) ||
            !is_halving_edge(n, *witness)) {
            throw Error(ErrorCode::VerificationFailed,
                        edge_str(*witness) + " does not witness (" + edge_str(first) + ", " +
                            edge_str(second) + ")");
        }
        return {first, second, *witness};
    }
    for (const auto& w : candidates) {
        if (is_halving_edge(n, w)) return {first, second, w};
    }
    throw Error(ErrorCode::VerificationFailed,
                "(" + edge_str(first) + ", " + edge_str(second) + ") has no halving witness");
}

std::optional<HalvingPair> as_halving_pair(int n, const EdgeId& e, const EdgeId& f) {
    if (chords_intersect(n, e, f)) return std::nullopt;
    // Try each orientation (a, b) of one edge with the other starting at b + 1.
    for (const auto& [x, y] : {std::pair{e, f}, std::pair{f, e}}) {
        for (const auto& [a, b] : {std::pair{x.i, x.j}, std::pair{x.j, x.i}}) {
            const int start = wrap_label(n, b + 1);
            int c = 0;
            if (y.i == start) c = y.j;
            else if (y.j == start) c = y.i;
            else continue;
            try {
                return make_halving_pair(n, a, b, c);
            } catch (const Error&) {
            }
        }
    }
    return std::nullopt;
}

std::string_view to_string(ClassKind kind) noexcept {
    switch (kind) {
        case ClassKind::Halving: return "halving";
        case ClassKind::Pair: return "pair";
        case ClassKind::Almost: return "almost";
        case ClassKind::Repair: return "repair";
    }
    return "halving";
}

std::string_view to_string(ConstructionCase c) noexcept {
    switch (c) {
        case ConstructionCase::Small: return "small";
        case ConstructionCase::OddA: return "odd-a";
        case ConstructionCase::OddB: return "odd-b";
        case ConstructionCase::EvenA: return "even-a";
        case ConstructionCase::EvenB: return "even-b";
    }
    return "small";
}

ConvexColoring color_convex(int n) {
    if (n < 3) throw Error(ErrorCode::InvalidOrder, "convex coloring needs n >= 3");
    if (n == 4) throw Error(ErrorCode::UseK4Variant, "n = 4 has separate psi/alpha colorings");
    if (n <= 5) return small_coloring(n);

    const int h = n / 2;
    const int top = (h - 1) / 2;  // largest i in I
    const int total = tight_color_count(n);

    ConvexColoring out;
    auto& trace = out.trace;
    trace.n = n;
    trace.partition = circulant_partition(n);
    ClassBuilder build(n, total);

    // Doubleton circulants except the last: color (i-1)n + j on the halving
    // pair (e_{j,j+i}, e_{j+i+1,j+i+1+i'}), witness e_{j,j+h}.
    for (int i = 1; i < top; ++i) {
        const int ip = h - 1 - i;
        for (int j = 1; j <= n; ++j) {
            build.pair((i - 1) * n + j, j, j + i, j + i + 1 + ip, chord(n, j, j + h));
        }
    }
    trace.N1 = n * (top - 1);
    const int N1 = trace.N1;

    const int i = top;
    const int ip = h - 1 - i;
    const int ipp = h - 1;

    if (n % 2 == 1) {
        for (int j = 1; j <= n; ++j) build.single(N1 + j, chord(n, j, j + h), ClassKind::Halving);
        trace.N2 = N1 + n;
        const int N2 = trace.N2;

        if (i == ip) {
            trace.case_tag = ConstructionCase::OddA;
            for (int j = 1; j <= n; ++j) {
                build.pair(N2 + j, j, j + i, j + i + 1 + ipp, chord(n, j + i, j + i + 1 + ipp));
            }
            trace.N3 = N2 + n;
        } else {
            trace.case_tag = ConstructionCase::OddB;
            for (int j = 1; j <= n; ++j) {
                build.pair(N2 + j, j, j + i, j + i + 1 + ip, chord(n, j, j + h));
            }
            for (int j = 1; j <= h; ++j) {
                build.pair(N2 + n + j, j, j + ipp, j + ipp + 1 + ipp, chord(n, j, j + ipp + 1));
            }
            trace.N3 = N2 + n + h;
            build.repair(N1 + h, chord(n, n, h - 1), trace.repairs);
        }
    } else {
        for (int j = 1; j <= h; ++j) {
            build.single(N1 + j, chord(n, j, j + h), ClassKind::Halving);
            build.single(N1 + h + j, chord(n, j, j + h - 1), ClassKind::Almost);
        }
        trace.N2 = N1 + n;
        const int N2 = trace.N2;

        if (i == ip) {
            trace.case_tag = ConstructionCase::EvenA;
            for (int j = 1; j <= h; ++j) {
                build.pair(N2 + j, h + j, h + j + ipp, h + j + ipp + 1 + i, chord(n, h + j, h + j + h));
            }
            for (int j = 1; j <= n / 4; ++j) {
                build.pair(N2 + h + j, h + j, h + j + i, h + j + i + 1 + i, chord(n, h + j, h + j + h));
            }
            trace.N3 = N2 + h + n / 4;
            build.repair(N1 + 1, chord(n, h + n / 4 + 1, n), trace.repairs);
        } else {
            trace.case_tag = ConstructionCase::EvenB;
            const int q = n / 4;
            for (int j = 1; j <= q; ++j) {
                build.pair(N2 + j, h + j, h + j + ipp, h + j + ipp + 1 + i, chord(n, h + j, h + j + h));
            }
            for (int j = 1; j <= q; ++j) {
                build.pair(N2 + q + j, 3 * q + j, 3 * q + j + ipp, 3 * q + j + ipp + 1 + ip,
                           chord(n, 3 * q + j, 3 * q + j + h));
            }
            for (int j = 1; j <= 3 * q; ++j) {
                build.pair(N2 + h + j, q + j, q + j + i, q + j + i + 1 + ip, chord(n, q + j, q + j + h));
            }
            trace.N3 = N2 + h + 3 * q;
        }
    }

    if (trace.N3 != total) {
        construction_bug(n, "used " + std::to_string(trace.N3) + " colors, expected " +
                                std::to_string(total));
    }
    trace.classes = build.finish();
    out.coloring = to_coloring(n, trace.classes);
    return out;
}

K4Colorings color_k4() {
    K4Colorings out;
    out.psi_variant = coloring_from_classes(4, {{{3, 4}, {1, 4}}, {{1, 2}}, {{2, 3}}, {{1, 3}}, {{2, 4}}});
    out.alpha_variant = coloring_from_classes(4, {{{1, 2}, {3, 4}}, {{2, 3}, {1, 4}}, {{1, 3}}, {{2, 4}}});
    return out;
}

bool max_thrackle_check(const GeometricGraph& g, std::span<const EdgeId> edges) {
    for (const auto& e : edges) {
        if (std::find(g.edges.begin(), g.edges.end(), e) == g.edges.end()) {
            throw Error(ErrorCode::MalformedInput, edge_str(e) + " is not an edge of the graph");
        }
    }
    for (std::size_t a = 0; a < edges.size(); ++a) {
        const Segment sa{g.points.at(edges[a].i), g.points.at(edges[a].j)};
        for (std::size_t b = a + 1; b < edges.size(); ++b) {
            const Segment sb{g.points.at(edges[b].i), g.points.at(edges[b].j)};
            if (!intersects(segments_intersect(sa, sb))) return false;
        }
    }
    return true;
}

}  // namespace geochrom::convex
