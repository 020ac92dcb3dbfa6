#include "geochrom/general_position.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "geochrom/errors.hpp"

namespace geochrom::general {
namespace {

struct Vec {
    BigInt x;
    BigInt y;
};

BigInt cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }

// q - p scaled by the apex denominator.
Vec relative(const Point& q, const RationalPoint& p) {
    return {BigInt(q.x) * p.w - p.x, BigInt(q.y) * p.w - p.y};
}

BigInt to_big(__int128 v) {
    const bool negative = v < 0;
    auto magnitude = negative ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    BigInt out = BigInt(static_cast<std::uint64_t>(magnitude >> 64));
    out <<= 64;
    out += BigInt(static_cast<std::uint64_t>(magnitude));
    return negative ? BigInt(-out) : out;
}

bool upper_half(const Vec& v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

BigInt gcd_abs(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Line reduce(Line l) {
    const BigInt g = gcd_abs(gcd_abs(l.a, l.b), l.c);
    if (g > 1) {
        l.a /= g;
        l.b /= g;
        l.c /= g;
    }
    return l;
}

// Line through `p` with direction `w` (any positive scaling).
Line line_through(const RationalPoint& p, const Vec& w) {
    return reduce({-w.y * p.w, w.x * p.w, w.y * p.x - w.x * p.y});
}

// Angular sweep around a fixed apex. Point directions modulo pi are
// grouped; a line direction is encoded as 2g (exactly through group g) or
// 2g + 1 (strictly between group g and the next one).
std::optional<SixPartition> try_apex(std::span<const Point> points, const RationalPoint& p,
                                     int min_per_region) {
    const int n = static_cast<int>(points.size());
    std::vector<Vec> rel(static_cast<std::size_t>(n));
    std::vector<Vec> dir(static_cast<std::size_t>(n));
    std::vector<char> up(static_cast<std::size_t>(n), 0);
    std::vector<int> active;
    for (int k = 0; k < n; ++k) {
        auto& v = rel[static_cast<std::size_t>(k)];
        v = relative(points[static_cast<std::size_t>(k)], p);
        if (v.x == 0 && v.y == 0) continue;
        const bool u = upper_half(v);
        up[static_cast<std::size_t>(k)] = u;
        dir[static_cast<std::size_t>(k)] = u ? v : Vec{-v.x, -v.y};
        active.push_back(k);
    }
    if (active.empty()) return std::nullopt;
    std::stable_sort(active.begin(), active.end(), [&](int a, int b) {
        return cross(dir[static_cast<std::size_t>(a)], dir[static_cast<std::size_t>(b)]) > 0;
    });

    std::vector<int> group_of(static_cast<std::size_t>(n), -1);
    std::vector<int> group_rep;
    for (std::size_t t = 0; t < active.size(); ++t) {
        const int k = active[t];
        if (t == 0 || cross(dir[static_cast<std::size_t>(active[t - 1])], dir[static_cast<std::size_t>(k)]) != 0) {
            group_rep.push_back(k);
        }
        group_of[static_cast<std::size_t>(k)] = static_cast<int>(group_rep.size()) - 1;
    }
    const int groups = static_cast<int>(group_rep.size());
    const int codes = 2 * groups;

    std::vector<int> pu(static_cast<std::size_t>(codes) + 1, 0);
    std::vector<int> pl(static_cast<std::size_t>(codes) + 1, 0);
    for (int k : active) {
        const int code = 2 * group_of[static_cast<std::size_t>(k)];
        auto& prefix = up[static_cast<std::size_t>(k)] ? pu : pl;
        for (int x = code + 1; x <= codes; ++x) ++prefix[static_cast<std::size_t>(x)];
    }
    const int total_u = pu.back();
    const int total_l = pl.back();
    // Points with code strictly between a and b.
    auto open = [](const std::vector<int>& pre, int a, int b) {
        return pre[static_cast<std::size_t>(b)] - pre[static_cast<std::size_t>(a) + 1];
    };

    for (int al = 0; al < codes; ++al) {
        for (int be = al + 1; be < codes; ++be) {
            if (open(pu, al, be) < min_per_region || open(pl, al, be) < min_per_region) continue;
            for (int ga = be + 1; ga < codes; ++ga) {
                const int s2 = open(pu, be, ga);
                const int s5 = open(pl, be, ga);
                const int s3 = total_u - pu[static_cast<std::size_t>(ga) + 1] + pl[static_cast<std::size_t>(al)];
                const int s6 = total_l - pl[static_cast<std::size_t>(ga) + 1] + pu[static_cast<std::size_t>(al)];
                if (s2 < min_per_region || s5 < min_per_region || s3 < min_per_region ||
                    s6 < min_per_region) {
                    continue;
                }

                auto direction = [&](int code) -> Vec {
                    const int g = code / 2;
                    const Vec& d = dir[static_cast<std::size_t>(group_rep[static_cast<std::size_t>(g)])];
                    if (code % 2 == 0) return d;
                    if (g + 1 < groups) {
                        const Vec& e = dir[static_cast<std::size_t>(group_rep[static_cast<std::size_t>(g + 1)])];
                        return {d.x + e.x, d.y + e.y};
                    }
                    if (groups == 1) return {-d.y, d.x};
                    const Vec& first = dir[static_cast<std::size_t>(group_rep.front())];
                    return {d.x - first.x, d.y - first.y};
                };

                SixPartition part;
                part.apex = p;
                part.lines = {line_through(p, direction(al)), line_through(p, direction(be)),
                              line_through(p, direction(ga))};
                // Counterclockwise sectors s1..s6 listed clockwise: s1, s6, s5, s4, s3, s2.
                constexpr std::array<int, 6> slot_of_sector = {0, 5, 4, 3, 2, 1};
                for (int k : active) {
                    const int code = 2 * group_of[static_cast<std::size_t>(k)];
                    if (code == al || code == be || code == ga) continue;
                    int sector = 0;
                    if (code < al) sector = 5;
                    else if (code < be) sector = 0;
                    else if (code < ga) sector = 1;
                    else sector = 2;
                    if (!up[static_cast<std::size_t>(k)]) sector = (sector + 3) % 6;
                    part.regions[static_cast<std::size_t>(slot_of_sector[static_cast<std::size_t>(sector)])]
                        .push_back(k);
                }
                for (auto& region : part.regions) {
                    std::stable_sort(region.begin(), region.end(), [&](int a, int b) {
                        return cross(rel[static_cast<std::size_t>(a)], rel[static_cast<std::size_t>(b)]) < 0;
                    });
                }
                return part;
            }
        }
    }
    return std::nullopt;
}

struct Vertex {
    long double key;
    int first;
    int second;
};

RationalPoint centroid(std::span<const Point> points) {
    RationalPoint c{0, 0, static_cast<long long>(points.size())};
    for (const auto& q : points) {
        c.x += q.x;
        c.y += q.y;
    }
    return c;
}

// Coordinate-wise median, exact as a half-integer point.
RationalPoint median(std::span<const Point> points) {
    std::vector<std::int64_t> xs, ys;
    for (const auto& q : points) {
        xs.push_back(q.x);
        ys.push_back(q.y);
    }
    const std::size_t lo = (xs.size() - 1) / 2, hi = xs.size() / 2;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    return {BigInt(xs[lo]) + xs[hi], BigInt(ys[lo]) + ys[hi], 2};
}

}  // namespace

int side(const Line& line, const Point& p) {
    const BigInt v = line.a * p.x + line.b * p.y + line.c;
    return v.sign();
}

int side(const Line& line, const RationalPoint& p) {
    const BigInt v = line.a * p.x + line.b * p.y + line.c * p.w;
    return v.sign();
}

SixPartition six_partition(std::span<const Point> points, int min_per_region) {
    const auto n = points.size();
    if (n < 6) throw Error(ErrorCode::PreconditionFailed, "six_partition needs at least 6 points");
    // Non-empty regions are preferred so that the result stays checkable.
    if (min_per_region < 1) {
        try {
            return six_partition(points, 1);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::SearchExhausted) throw;
        }
    }

    if (auto part = try_apex(points, centroid(points), min_per_region)) return *part;
    const RationalPoint center = median(points);
    if (auto part = try_apex(points, center, min_per_region)) return *part;

    // Lines through pairs of the points nearest the median; their
    // intersections, nearest first, each probed in the four cells around it.
    const std::size_t nearest = std::min<std::size_t>(n, 40);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto cx2 = center.x.convert_to<std::int64_t>();
    const auto cy2 = center.y.convert_to<std::int64_t>();
    auto dist2 = [&](int k) {
        const auto dx = 2 * static_cast<__int128>(points[static_cast<std::size_t>(k)].x) - cx2;
        const auto dy = 2 * static_cast<__int128>(points[static_cast<std::size_t>(k)].y) - cy2;
        return dx * dx + dy * dy;
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dist2(a) < dist2(b); });
    order.resize(nearest);

    std::vector<std::pair<int, int>> lines;
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) lines.emplace_back(order[a], order[b]);
    }
    const long double cx = static_cast<long double>(cx2) / 2;
    const long double cy = static_cast<long double>(cy2) / 2;

    struct Exact {
        __int128 x, y, w;
    };
    auto intersect = [&](int l1, int l2) -> std::optional<Exact> {
        const auto [a, b] = lines[static_cast<std::size_t>(l1)];
        const auto [c, d] = lines[static_cast<std::size_t>(l2)];
        if (a == c || a == d || b == c || b == d) return std::nullopt;
        const Point& pa = points[static_cast<std::size_t>(a)];
        const Point& pb = points[static_cast<std::size_t>(b)];
        const Point& pc = points[static_cast<std::size_t>(c)];
        const Point& pd = points[static_cast<std::size_t>(d)];
        const __int128 d1x = pb.x - pa.x, d1y = pb.y - pa.y;
        const __int128 d2x = pd.x - pc.x, d2y = pd.y - pc.y;
        __int128 w = d1x * d2y - d1y * d2x;
        if (w == 0) return std::nullopt;
        __int128 t = (pc.x - pa.x) * d2y - (pc.y - pa.y) * d2x;
        __int128 x = pa.x * w + t * d1x;
        __int128 y = pa.y * w + t * d1y;
        if (w < 0) {
            w = -w;
            x = -x;
            y = -y;
        }
        return Exact{x, y, w};
    };

    std::vector<Vertex> vertices;
    for (std::size_t l1 = 0; l1 < lines.size(); ++l1) {
        for (std::size_t l2 = l1 + 1; l2 < lines.size(); ++l2) {
            const auto v = intersect(static_cast<int>(l1), static_cast<int>(l2));
            if (!v) continue;
            const long double px = static_cast<long double>(v->x) / static_cast<long double>(v->w);
            const long double py = static_cast<long double>(v->y) / static_cast<long double>(v->w);
            vertices.push_back({(px - cx) * (px - cx) + (py - cy) * (py - cy), static_cast<int>(l1),
                                static_cast<int>(l2)});
        }
    }
    std::stable_sort(vertices.begin(), vertices.end(),
                     [](const Vertex& u, const Vertex& v) { return u.key < v.key; });

    // Offsets of size below 2^-80 never cross a line through two input
    // points, so each perturbed apex lies in a cell adjacent to the vertex.
    const BigInt scale = BigInt(1) << 110;
    for (const auto& vert : vertices) {
        const auto exact = *intersect(vert.first, vert.second);
        const auto [a, b] = lines[static_cast<std::size_t>(vert.first)];
        const auto [c, d] = lines[static_cast<std::size_t>(vert.second)];
        const Point& pa = points[static_cast<std::size_t>(a)];
        const Point& pb = points[static_cast<std::size_t>(b)];
        const Point& pc = points[static_cast<std::size_t>(c)];
        const Point& pd = points[static_cast<std::size_t>(d)];
        const BigInt ux = pb.x - pa.x, uy = pb.y - pa.y;
        const BigInt vx = pd.x - pc.x, vy = pd.y - pc.y;
        const BigInt X = to_big(exact.x);
        const BigInt Y = to_big(exact.y);
        const BigInt W = to_big(exact.w);
        for (const auto& [su, sv] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, 1}, std::pair{-1, -1}}) {
            const BigInt dx = su * ux + sv * vx;
            const BigInt dy = su * uy + sv * vy;
            const RationalPoint apex{X * scale + dx * W, Y * scale + dy * W, W * scale};
            if (auto part = try_apex(points, apex, min_per_region)) return *part;
        }
    }
    throw Error(ErrorCode::SearchExhausted, "no apex candidate yields six regions of size " +
                                                std::to_string(min_per_region));
}

SixPartition six_partition(const PointSet& s) {
    const int n = static_cast<int>(s.size());
    if (n < 6) throw Error(ErrorCode::PreconditionFailed, "six_partition needs at least 6 points");
    return six_partition(s.points(), n / 6 - 1);
}

bool check_six_partition(std::span<const Point> points, const SixPartition& part, int min_per_region) {
    for (const auto& line : part.lines) {
        if (side(line, part.apex) != 0) return false;
    }
    auto pattern = [&](int k) {
        std::array<int, 3> s{};
        for (std::size_t t = 0; t < 3; ++t) s[t] = side(part.lines[t], points[static_cast<std::size_t>(k)]);
        return s;
    };
    std::vector<int> owner(points.size(), -1);
    std::array<std::array<int, 3>, 6> patterns{};
    for (std::size_t r = 0; r < 6; ++r) {
        const auto& region = part.regions[r];
        if (static_cast<int>(region.size()) < min_per_region || region.empty()) return false;
        patterns[r] = pattern(region.front());
        for (int k : region) {
            if (k < 0 || static_cast<std::size_t>(k) >= points.size()) return false;
            if (owner[static_cast<std::size_t>(k)] != -1) return false;
            owner[static_cast<std::size_t>(k)] = static_cast<int>(r);
            const auto s = pattern(k);
            if (s != patterns[r] || s[0] == 0 || s[1] == 0 || s[2] == 0) return false;
        }
    }
    // Every point strictly off the lines must be listed.
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto s = pattern(static_cast<int>(k));
        if (s[0] != 0 && s[1] != 0 && s[2] != 0 && owner[k] == -1) return false;
    }
    for (std::size_t r = 0; r < 6; ++r) {
        const auto& next = patterns[(r + 1) % 6];
        const auto& opposite = patterns[(r + 3) % 6];
        int flips = 0;
        for (std::size_t t = 0; t < 3; ++t) {
            flips += patterns[r][t] != next[t];
            if (opposite[t] != -patterns[r][t]) return false;
        }
        if (flips != 1) return false;
        // Adjacent regions must follow each other clockwise around the apex.
        const Vec u = relative(points[static_cast<std::size_t>(part.regions[r].front())], part.apex);
        const Vec v = relative(points[static_cast<std::size_t>(part.regions[(r + 1) % 6].front())], part.apex);
        if (cross(u, v) >= 0) return false;
    }
    return true;
}

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::X: return "X";
        case Family::Y: return "Y";
        case Family::Z: return "Z";
    }
    return "X";
}

LineConfiguration build_configuration(const PointSet& s) {
    const int n = static_cast<int>(s.size());
    if (n <= 18) {
        throw Error(ErrorCode::PreconditionFailed,
                    "configuration needs more than 18 points, got " + std::to_string(n));
    }
    LineConfiguration cfg;
    cfg.points = s;
    cfg.n = n;
    cfg.m = (n - 6) / 13;
    cfg.r = (n - 6) % 13;

    // Shear y' = K y + x with K above the x-range: equal heights are broken
    // by x while every orientation is preserved.
    const std::int64_t shear = 2 * kCoordinateBound + 1;
    auto height = [&](int label) { return shear * s.at(label).y + s.at(label).x; };
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::sort(labels.begin(), labels.end(), [&](int a, int b) { return height(a) > height(b); });
    for (std::size_t t = 1; t < labels.size(); ++t) {
        if (height(labels[t - 1]) == height(labels[t])) {
            throw Error(ErrorCode::DuplicateYCoordinate, "sheared heights coincide");
        }
    }

    const auto a_size = static_cast<std::size_t>(12 * cfg.m + 6);
    cfg.a_prime.assign(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(a_size));
    cfg.b_prime.assign(labels.begin() + static_cast<std::ptrdiff_t>(a_size), labels.end());

    const std::int64_t top = height(labels.front());
    const std::int64_t split = height(cfg.a_prime.back()) + height(cfg.b_prime.front());
    const std::int64_t bottom = height(labels.back());
    cfg.horizontal = {reduce({1, shear, -(top + 1)}), reduce({2, 2 * shear, -split}),
                      reduce({1, shear, -(bottom - 1)})};

    std::vector<Point> upper;
    for (int label : cfg.a_prime) upper.push_back(s.at(label));
    const auto part = six_partition(upper, 2 * cfg.m);
    if (!check_six_partition(upper, part, 2 * cfg.m)) {
        throw Error(ErrorCode::VerificationFailed, "six-partition failed independent recount");
    }
    cfg.concurrent = part.lines;
    cfg.apex = part.apex;

    // Keep the 2m points of middle clockwise rank in each region.
    const auto keep = static_cast<std::size_t>(2 * cfg.m);
    for (std::size_t r = 0; r < 6; ++r) {
        const auto& region = part.regions[r];
        const std::size_t drop_front = (region.size() - keep) / 2;
        for (std::size_t t = drop_front; t < drop_front + keep; ++t) {
            cfg.groups[r].push_back(cfg.a_prime[static_cast<std::size_t>(region[t])]);
        }
    }

    for (int t = 0; t < cfg.m; ++t) {
        cfg.g.push_back(cfg.b_prime[cfg.b_prime.size() - 1 - static_cast<std::size_t>(t)]);
    }
    return cfg;
}

bool strictly_inside(const RationalPoint& p, std::span<const Point> polygon) {
    int winding = 0;
    const auto k = polygon.size();
    for (std::size_t t = 0; t < k; ++t) {
        const Vec a = relative(polygon[t], p);
        const Vec b = relative(polygon[(t + 1) % k], p);
        const BigInt c = cross(a, b);
        if (c == 0 && a.x * b.x + a.y * b.y <= 0) return false;  // on the boundary
        if (a.y <= 0) {
            if (b.y > 0 && c > 0) ++winding;
        } else if (b.y <= 0 && c < 0) {
            --winding;
        }
    }
    return winding != 0;
}

std::vector<PendantQuad> enumerate_families(const LineConfiguration& cfg) {
    const int size = 2 * cfg.m;
    for (const auto& grp : cfg.groups) {
        if (static_cast<int>(grp.size()) != size) {
            throw Error(ErrorCode::MalformedInput, "group size differs from 2m");
        }
    }
    if (static_cast<int>(cfg.g.size()) != cfg.m) throw Error(ErrorCode::MalformedInput, "|G| != m");

    auto member = [&](int group, int index) {
        return cfg.groups[static_cast<std::size_t>(group)][static_cast<std::size_t>(index - 1)];
    };
    auto g_at = [&](int index) { return cfg.g[static_cast<std::size_t>(index - 1)]; };

    // Cycle groups (first, second, third, fourth) for X, Y, Z; the pendant
    // leaves the first vertex for even j and the third for odd j.
    constexpr std::array<std::array<int, 4>, 3> pattern = {{{0, 1, 3, 4}, {1, 2, 4, 5}, {2, 3, 5, 0}}};
    constexpr std::array<Family, 3> families = {Family::X, Family::Y, Family::Z};

    std::vector<PendantQuad> out;
    out.reserve(static_cast<std::size_t>(3 * size * size));
    std::set<EdgeId> used;
    for (std::size_t f = 0; f < 3; ++f) {
        const auto& pat = pattern[f];
        for (int i = 1; i <= size; ++i) {
            for (int j = 1; j <= size; ++j) {
                PendantQuad q;
                q.family = families[f];
                q.i = i;
                q.j = j;
                q.cycle = {member(pat[0], i), member(pat[1], j), member(pat[2], i), member(pat[3], j)};
                for (std::size_t t = 0; t < 4; ++t) q.quad[t] = make_edge(q.cycle[t], q.cycle[(t + 1) % 4]);
                q.pendant = j % 2 == 0 ? make_edge(q.cycle[0], g_at(j / 2))
                                       : make_edge(q.cycle[2], g_at((j + 1) / 2));

                std::array<Point, 4> polygon;
                for (std::size_t t = 0; t < 4; ++t) polygon[t] = cfg.points.at(q.cycle[t]);
                if (!strictly_inside(cfg.apex, polygon)) {
                    throw Error(ErrorCode::ApexNotInside,
                                std::string(to_string(q.family)) + "_{" + std::to_string(i) + "," +
                                    std::to_string(j) + "} does not contain the apex");
                }
                for (const auto& e : q.quad) {
                    if (!used.insert(e).second) throw Error(ErrorCode::VerificationFailed, "families share an edge");
                }
                if (!used.insert(q.pendant).second) {
                    throw Error(ErrorCode::VerificationFailed, "families share an edge");
                }
                out.push_back(q);
            }
        }
    }
    return out;
}

GeneralColoring color_general(const PointSet& s) {
    GeneralColoring out;
    out.config = build_configuration(s);
    out.quads = enumerate_families(out.config);
    std::vector<std::vector<EdgeId>> classes;
    classes.reserve(out.quads.size());
    for (const auto& q : out.quads) {
        std::vector<EdgeId> cls(q.quad.begin(), q.quad.end());
        cls.push_back(q.pendant);
        classes.push_back(std::move(cls));
    }
    out.coloring = coloring_from_classes(out.config.n, classes);
    out.coloring.partial = true;
    out.class_count = static_cast<int>(classes.size());
    const auto report = verify(s, out.coloring);
    if (!report.is_complete) {
        throw Error(ErrorCode::VerificationFailed,
                    std::to_string(report.completeness_violations.size()) +
                        " class pairs do not intersect");
    }
    return out;
}

}  // namespace geochrom::general
