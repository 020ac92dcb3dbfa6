#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "geochrom/graph.hpp"

// Constructive proper and complete colorings of the complete convex
// geometric graph with floor((n^2 + n) / 4) colors. Vertices are the labels
// 1..n in clockwise order; all label arithmetic is modulo n.
namespace geochrom::convex {

/// Maps any integer onto the label range 1..n.
int wrap_label(int n, long long x);

/// The edge between labels a and b after wrapping both into 1..n.
EdgeId chord(int n, long long a, long long b);

/// min(j - i, n - (j - i)): the circulant residue of an edge.
int residue(int n, const EdgeId& e);

/// Label-only intersection test for chords of a convex polygon.
bool chords_intersect(int n, const EdgeId& e, const EdgeId& f);

/// Number of labels floor((n^2 + n) / 4).
int tight_color_count(int n);

struct CirculantClass {
    int n = 0;
    std::vector<int> residues;
    std::vector<EdgeId> edges;
};

/// All e_{i,j} with j - i = +-k (mod n) for some k in `residues`.
CirculantClass circulant_class(int n, std::vector<int> residues);

/// Partition of E(K_n) into C_n({floor(n/2)}), C_n({floor(n/2) - 1}) and the
/// doubletons C_n({i, floor(n/2) - 1 - i}).
std::vector<CirculantClass> circulant_partition(int n);

/// Both gaps of the chord hold at least floor((n - 2) / 2) labels.
bool is_halving_edge(int n, const EdgeId& e);

/// Same predicate from half-plane point counts on an actual point set.
bool is_halving_edge(const PointSet& s, const EdgeId& e);

/// e_{i,j} is almost-halving when e_{i,j+1} is halving (either endpoint may
/// play i). Throws EvenOrderRequired for odd n.
bool is_almost_halving_edge(int n, const EdgeId& e);

std::vector<EdgeId> halving_edges(int n);
std::vector<EdgeId> almost_halving_edges(int n);

/// (e_{a,b}, e_{b+1,c}) with a halving witness among e_{a,b+1}, e_{a,c}, e_{b,c}.
struct HalvingPair {
    EdgeId first;
    EdgeId second;
    EdgeId witness;
};

/// Builds the pair for corner labels a, b, c and checks it: the two edges
/// must be disjoint and `witness` one of the three candidates and halving.
/// Without an explicit witness the first halving candidate is taken.
HalvingPair make_halving_pair(int n, long long a, long long b, long long c,
                              std::optional<EdgeId> witness = std::nullopt);

/// Recognizes two edges as a halving pair in any orientation.
std::optional<HalvingPair> as_halving_pair(int n, const EdgeId& e, const EdgeId& f);

enum class ClassKind { Halving, Pair, Almost, Repair };
enum class ConstructionCase { Small, OddA, OddB, EvenA, EvenB };

std::string_view to_string(ClassKind kind) noexcept;
std::string_view to_string(ConstructionCase c) noexcept;

struct ChromaticClass {
    int color = 0;
    std::vector<EdgeId> edges;
    ClassKind kind = ClassKind::Halving;
    std::optional<EdgeId> witness;
};

/// A leftover edge attached to an existing single-edge class.
struct Repair {
    EdgeId edge;
    int color = 0;
};

struct ConstructionTrace {
    int n = 0;
    ConstructionCase case_tag = ConstructionCase::Small;
    std::vector<CirculantClass> partition;
    int N1 = 0;
    int N2 = 0;
    int N3 = 0;
    std::vector<ChromaticClass> classes;  // indexed by color - 1
    std::vector<Repair> repairs;
};

struct ConvexColoring {
    Coloring coloring;
    ConstructionTrace trace;
};

/// Proper and complete coloring with tight_color_count(n) colors.
/// n < 3 throws InvalidOrder; n == 4 throws UseK4Variant.
ConvexColoring color_convex(int n);

struct K4Colorings {
    Coloring psi_variant;    // complete, not proper, 5 colors
    Coloring alpha_variant;  // proper and complete, 4 colors
};

K4Colorings color_k4();

/// Every two listed edges intersect (share an endpoint or cross) in `g`.
bool max_thrackle_check(const GeometricGraph& g, std::span<const EdgeId> edges);

}  // namespace geochrom::convex
