#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "geochrom/bounds.hpp"
#include "geochrom/convex_coloring.hpp"
#include "geochrom/general_position.hpp"
#include "geochrom/graph.hpp"

namespace geochrom::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "1.0.0";

/// {"points": [[x, y], ...]}
Json to_json(const PointSet& s);
PointSet point_set_from_json(const Json& j);

/// {"n", "edges", "colors"} plus "partial": true for partial colorings.
Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

/// {"case", "N1", "N2", "N3", "classes": [{"edges", "kind", "witness"}]}
Json to_json(const convex::ConstructionTrace& t);

/// Line coefficients as decimal strings, groups as label lists.
Json to_json(const general::LineConfiguration& cfg);
Json to_json(const general::Line& line);
Json to_json(const general::RationalPoint& p);

Json to_json(const bounds::BoundsReport& r);
bounds::BoundsReport bounds_report_from_json(const Json& j);

Json to_json(const VerificationReport& r);

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

struct RunManifest {
    std::string command;
    std::string input_digest;
    Json parameters = Json::object();
    std::vector<std::string> outputs;
};

Json to_json(const RunManifest& m);

/// Parses text, mapping syntax errors to MalformedInput.
Json parse(std::string_view text);

/// Canonical text: one top-level member per line, compact values.
std::string dump(const Json& j);

/// "-" means stdin / stdout.
std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

}  // namespace geochrom::io
