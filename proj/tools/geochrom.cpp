#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "geochrom/commands.hpp"
#include "geochrom/errors.hpp"
#include "geochrom/io.hpp"
#include "geochrom/render.hpp"

namespace {

using geochrom::io::Json;

struct Manifest {
    std::string path;
    geochrom::io::RunManifest run;

    void output(const std::string& p) {
        if (!p.empty()) run.outputs.push_back(p == "-" ? "<stdout>" : p);
    }

    void write() const {
        if (!path.empty()) geochrom::io::write_text(path, geochrom::io::dump(geochrom::io::to_json(run)));
    }
};

std::string load(const std::string& path, std::string& digest_input) {
    auto text = geochrom::io::read_text(path);
    digest_input += text;
    return text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complete edge colorings of geometric graphs"};
    app.require_subcommand(1);
    Manifest manifest;
    app.add_option("--manifest", manifest.path, "Write a run manifest JSON to this path");

    std::string input = "-";
    std::string output = "-";

    auto* gen = app.add_subcommand("generate", "Generate a point set");
    std::string kind = "convex";
    int n = 0;
    std::uint64_t seed = 0;
    gen->add_option("kind", kind, "convex or random")->required()->check(CLI::IsMember({"convex", "random"}));
    gen->add_option("n", n, "Number of points")->required();
    gen->add_option("--seed", seed, "Seed for random point sets");
    gen->add_option("-o,--output", output, "PointSet JSON output");

    auto* col = app.add_subcommand("color", "Construct a complete coloring");
    std::string mode = "convex";
    std::string aux_output;
    bool with_bounds = false;
    std::string bounds_output = "-";
    col->add_option("-i,--input", input, "PointSet JSON input");
    col->add_option("--mode", mode, "convex or general")->check(CLI::IsMember({"convex", "general"}));
    col->add_option("-o,--output", output, "Coloring JSON output");
    col->add_option("--aux-output", aux_output, "Trace (convex) or configuration (general) JSON output");
    col->add_flag("--bounds", with_bounds, "Also emit the bounds report");
    col->add_option("--bounds-output", bounds_output, "Bounds report output");

    auto* ver = app.add_subcommand("verify", "Verify a coloring against a point set");
    std::string coloring_path;
    bool need_proper = false;
    ver->add_option("-p,--points", input, "PointSet JSON input")->required();
    ver->add_option("-c,--coloring", coloring_path, "Coloring JSON input")->required();
    ver->add_option("-o,--output", output, "Report JSON output");
    ver->add_flag("--proper", need_proper, "Also require a proper coloring");

    auto* bnd = app.add_subcommand("bounds", "Bounds for the complete graph on a point set");
    std::int64_t asymptotic = 0;
    bnd->add_option("-i,--input", input, "PointSet JSON input");
    bnd->add_option("--asymptotic", asymptotic, "Report for the convex drawing of K_n instead");
    bnd->add_option("-o,--output", output, "Bounds report output");

    auto* ex = app.add_subcommand("exact", "Exact index by exhaustive search");
    std::string index = "psi";
    bool no_warm = false;
    ex->add_option("index", index, "psi or alpha")->required()->check(CLI::IsMember({"psi", "alpha"}));
    ex->add_option("-i,--input", input, "PointSet JSON input");
    ex->add_option("-o,--output", output, "Count and witness JSON output");
    ex->add_flag("--no-warm-start", no_warm, "Start the search without the constructive coloring");

    auto* ren = app.add_subcommand("render", "Render a coloring as SVG");
    ren->add_option("-p,--points", input, "PointSet JSON input")->required();
    ren->add_option("-c,--coloring", coloring_path, "Coloring JSON input")->required();
    ren->add_option("-o,--output", output, "SVG output");

    CLI11_PARSE(app, argc, argv);

    namespace io = geochrom::io;
    namespace cmd = geochrom::commands;
    auto& run = manifest.run;
    std::string digest_input;
    int code = 0;
    try {
        if (*gen) {
            run.command = "generate";
            run.parameters = Json{{"kind", kind}, {"n", n}, {"seed", seed}};
            const auto s = cmd::generate(kind == "convex" ? cmd::GenerateKind::Convex : cmd::GenerateKind::Random,
                                         n, seed);
            io::write_text(output, io::dump(io::to_json(s)));
            manifest.output(output);
        } else if (*col) {
            run.command = "color";
            run.parameters = Json{{"mode", mode}, {"bounds", with_bounds}};
            const auto s = io::point_set_from_json(io::parse(load(input, digest_input)));
            const auto res =
                cmd::color(s, mode == "convex" ? cmd::ColorMode::Convex : cmd::ColorMode::General, with_bounds);
            io::write_text(output, io::dump(io::to_json(res.coloring)));
            manifest.output(output);
            if (!aux_output.empty()) {
                io::write_text(aux_output, io::dump(res.aux));
                manifest.output(aux_output);
            }
            if (res.bounds) {
                io::write_text(bounds_output, io::dump(io::to_json(*res.bounds)));
                manifest.output(bounds_output);
            }
        } else if (*ver) {
            run.command = "verify";
            run.parameters = Json{{"proper", need_proper}};
            const auto s = io::point_set_from_json(io::parse(load(input, digest_input)));
            const auto c = io::coloring_from_json(io::parse(load(coloring_path, digest_input)));
            const auto report = cmd::verify(s, c);
            io::write_text(output, io::dump(io::to_json(report)));
            manifest.output(output);
            if (!report.is_complete || (need_proper && !report.is_proper)) code = 2;
        } else if (*bnd) {
            run.command = "bounds";
            run.parameters = Json{{"asymptotic", asymptotic}};
            geochrom::bounds::BoundsReport report;
            if (asymptotic > 0) {
                report = geochrom::bounds::asymptotic_report(asymptotic);
            } else {
                report = cmd::bounds(io::point_set_from_json(io::parse(load(input, digest_input))));
            }
            io::write_text(output, io::dump(io::to_json(report)));
            manifest.output(output);
        } else if (*ex) {
            run.command = "exact";
            run.parameters = Json{{"index", index}, {"warm_start", !no_warm}};
            const auto s = io::point_set_from_json(io::parse(load(input, digest_input)));
            const auto res = cmd::exact(s, index == "psi" ? geochrom::oracle::Index::Psi
                                                           : geochrom::oracle::Index::Alpha,
                                        !no_warm);
            io::write_text(output, io::dump(cmd::to_json(res)));
            manifest.output(output);
        } else if (*ren) {
            run.command = "render";
            const auto s = io::point_set_from_json(io::parse(load(input, digest_input)));
            const auto c = io::coloring_from_json(io::parse(load(coloring_path, digest_input)));
            io::write_text(output, geochrom::render::render_svg(s, c));
            manifest.output(output);
        }
        run.input_digest = io::fnv1a_hex(digest_input);
        manifest.write();
    } catch (const geochrom::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return code;
}
