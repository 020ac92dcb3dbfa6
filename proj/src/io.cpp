#include "geochrom/io.hpp"

#include <boost/version.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "geochrom/errors.hpp"

namespace geochrom::io {
namespace {

Json edge_json(const EdgeId& e) { return Json::array({e.i, e.j}); }

EdgeId edge_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw Error(ErrorCode::MalformedColoring, "edge must be [i, j]");
    }
    return make_edge(j[0].get<int>(), j[1].get<int>());
}

template <typename T>
T field(const Json& j, const char* key, ErrorCode code) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(code, std::string("missing field \"") + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(code, std::string("field \"") + key + "\": " + e.what());
    }
}

Json labels_json(const std::vector<int>& labels) { return Json(labels); }

}  // namespace

Json to_json(const PointSet& s) {
    Json pts = Json::array();
    for (const auto& p : s.points()) pts.push_back(Json::array({p.x, p.y}));
    return Json{{"points", pts}};
}

PointSet point_set_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
        throw Error(ErrorCode::MalformedInput, "expected {\"points\": [[x, y], ...]}");
    }
    std::vector<Point> pts;
    for (const auto& p : j["points"]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
            throw Error(ErrorCode::MalformedInput, "point must be [x, y] with integer coordinates");
        }
        pts.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
    }
    return PointSet(std::move(pts));
}

Json to_json(const Coloring& c) {
    Json edges = Json::array();
    for (const auto& e : c.edges) edges.push_back(edge_json(e));
    Json out{{"n", c.n}, {"edges", edges}, {"colors", c.colors}};
    if (c.partial) out["partial"] = true;
    return out;
}

Coloring coloring_from_json(const Json& j) {
    Coloring c;
    c.n = field<int>(j, "n", ErrorCode::MalformedColoring);
    const auto edges = field<Json>(j, "edges", ErrorCode::MalformedColoring);
    if (!edges.is_array()) throw Error(ErrorCode::MalformedColoring, "\"edges\" must be an array");
    for (const auto& e : edges) c.edges.push_back(edge_from_json(e));
    c.colors = field<std::vector<int>>(j, "colors", ErrorCode::MalformedColoring);
    if (j.contains("partial")) c.partial = field<bool>(j, "partial", ErrorCode::MalformedColoring);
    if (c.colors.size() != c.edges.size()) {
        throw Error(ErrorCode::MalformedColoring, "\"edges\" and \"colors\" differ in length");
    }
    c.k = 0;
    for (int col : c.colors) c.k = std::max(c.k, col);
    // Range and consecutiveness checks.
    (void)color_classes(c);
    return c;
}

Json to_json(const convex::ConstructionTrace& t) {
    Json classes = Json::array();
    for (const auto& cls : t.classes) {
        Json edges = Json::array();
        for (const auto& e : cls.edges) edges.push_back(edge_json(e));
        classes.push_back(Json{{"edges", edges},
                               {"kind", std::string(convex::to_string(cls.kind))},
                               {"witness", cls.witness ? edge_json(*cls.witness) : Json(nullptr)}});
    }
    return Json{{"case", std::string(convex::to_string(t.case_tag))},
                {"N1", t.N1},
                {"N2", t.N2},
                {"N3", t.N3},
                {"classes", classes}};
}

Json to_json(const general::Line& line) {
    return Json::array({line.a.str(), line.b.str(), line.c.str()});
}

Json to_json(const general::RationalPoint& p) {
    return Json{{"x", p.x.str()}, {"y", p.y.str()}, {"w", p.w.str()}};
}

Json to_json(const general::LineConfiguration& cfg) {
    Json horizontal = Json::array();
    for (const auto& l : cfg.horizontal) horizontal.push_back(to_json(l));
    Json concurrent = Json::array();
    for (const auto& l : cfg.concurrent) concurrent.push_back(to_json(l));
    static constexpr const char* kNames[6] = {"A", "B", "C", "D", "E", "F"};
    Json groups = Json::object();
    for (std::size_t g = 0; g < 6; ++g) groups[kNames[g]] = labels_json(cfg.groups[g]);
    groups["G"] = labels_json(cfg.g);
    return Json{{"n", cfg.n},
                {"m", cfg.m},
                {"r", cfg.r},
                {"horizontal", horizontal},
                {"concurrent", concurrent},
                {"apex", to_json(cfg.apex)},
                {"a_prime", labels_json(cfg.a_prime)},
                {"b_prime", labels_json(cfg.b_prime)},
                {"groups", groups}};
}

Json to_json(const bounds::BoundsReport& r) {
    return Json{{"n", r.n},
                {"m_incidences", r.m_incidences},
                {"cr_drawing", r.cr_drawing},
                {"psi_upper_convex", r.psi_upper_convex},
                {"psi_upper_crossing", r.psi_upper_crossing},
                {"psi_g_lower_construction",
                 r.psi_g_lower_construction ? Json(*r.psi_g_lower_construction) : Json(nullptr)},
                {"c_rect", r.c_rect},
                {"coef_upper", r.coef_upper},
                {"coef_lower", r.coef_lower},
                {"coef_upper_derived", r.coef_upper_derived},
                {"coef_lower_derived", r.coef_lower_derived}};
}

bounds::BoundsReport bounds_report_from_json(const Json& j) {
    constexpr auto bad = ErrorCode::MalformedInput;
    bounds::BoundsReport r;
    r.n = field<std::int64_t>(j, "n", bad);
    r.m_incidences = field<std::int64_t>(j, "m_incidences", bad);
    r.cr_drawing = field<std::int64_t>(j, "cr_drawing", bad);
    r.psi_upper_convex = field<std::int64_t>(j, "psi_upper_convex", bad);
    r.psi_upper_crossing = field<std::int64_t>(j, "psi_upper_crossing", bad);
    const auto lower = field<Json>(j, "psi_g_lower_construction", bad);
    if (!lower.is_null()) r.psi_g_lower_construction = lower.get<std::int64_t>();
    r.c_rect = field<double>(j, "c_rect", bad);
    r.coef_upper = field<double>(j, "coef_upper", bad);
    r.coef_lower = field<double>(j, "coef_lower", bad);
    r.coef_upper_derived = field<double>(j, "coef_upper_derived", bad);
    r.coef_lower_derived = field<double>(j, "coef_lower_derived", bad);
    return r;
}

Json to_json(const VerificationReport& r) {
    Json proper = Json::array();
    for (const auto& [e, f] : r.proper_violations) proper.push_back(Json::array({edge_json(e), edge_json(f)}));
    Json complete = Json::array();
    for (const auto& [a, b] : r.completeness_violations) complete.push_back(Json::array({a, b}));
    return Json{{"is_proper", r.is_proper},
                {"is_complete", r.is_complete},
                {"k", r.k},
                {"singleton_classes", r.singleton_classes},
                {"proper_violations", proper},
                {"completeness_violations", complete}};
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json to_json(const RunManifest& m) {
    std::ostringstream boost_version;
    boost_version << BOOST_VERSION / 100000 << '.' << BOOST_VERSION / 100 % 1000 << '.' << BOOST_VERSION % 100;
    std::ostringstream json_version;
    json_version << NLOHMANN_JSON_VERSION_MAJOR << '.' << NLOHMANN_JSON_VERSION_MINOR << '.'
                 << NLOHMANN_JSON_VERSION_PATCH;
    return Json{{"command", m.command},
                {"input_digest", m.input_digest},
                {"parameters", m.parameters},
                {"outputs", m.outputs},
                {"versions",
                 {{"geochrom", std::string(kVersion)},
                  {"boost", boost_version.str()},
                  {"nlohmann_json", json_version.str()}}}};
}

Json parse(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedInput, e.what());
    }
}

std::string dump(const Json& j) {
    if (!j.is_object() || j.empty()) return j.dump() + "\n";
    std::string out = "{\n";
    std::size_t left = j.size();
    for (const auto& [key, value] : j.items()) {
        out += "  " + Json(key).dump() + ": " + value.dump() + (--left ? ",\n" : "\n");
    }
    return out + "}\n";
}

std::string read_text(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, std::string_view text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::MalformedInput, "cannot write " + path);
    out << text;
}

}  // namespace geochrom::io
