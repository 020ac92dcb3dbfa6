#include "geochrom/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "geochrom/errors.hpp"

namespace geochrom::render {
namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 40.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string palette(int color) {
    const double hue = std::fmod((color - 1) * 137.50776405003785, 360.0);
    const double s = 0.70;
    const double l = 0.42;
    const double chroma = (1.0 - std::fabs(2.0 * l - 1.0)) * s;
    const double hp = hue / 60.0;
    const double x = chroma * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hp)) {
        case 0: r = chroma, g = x; break;
        case 1: r = x, g = chroma; break;
        case 2: g = chroma, b = x; break;
        case 3: g = x, b = chroma; break;
        case 4: r = x, b = chroma; break;
        default: r = chroma, b = x; break;
    }
    const double m = l - chroma / 2.0;
    auto channel = [m](double v) { return static_cast<int>(std::lround((v + m) * 255.0)); };
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", channel(r), channel(g), channel(b));
    return buf;
}

std::string render_svg(const PointSet& s, const Coloring& c) {
    if (c.edges.empty()) throw Error(ErrorCode::MalformedColoring, "nothing to render: empty edge list");
    if (c.n != static_cast<int>(s.size())) {
        throw Error(ErrorCode::MalformedColoring, "coloring order differs from the point set");
    }
    for (const auto& e : c.edges) {
        if (e.i < 1 || e.j > c.n) throw Error(ErrorCode::MalformedColoring, "edge label out of range");
    }
    (void)color_classes(c);

    const auto pts = s.points();
    auto [min_x, max_x] = std::minmax_element(pts.begin(), pts.end(),
                                              [](const Point& a, const Point& b) { return a.x < b.x; });
    auto [min_y, max_y] = std::minmax_element(pts.begin(), pts.end(),
                                              [](const Point& a, const Point& b) { return a.y < b.y; });
    const double span = std::max<double>({static_cast<double>(max_x->x - min_x->x),
                                          static_cast<double>(max_y->y - min_y->y), 1.0});
    const double scale = (kCanvas - 2.0 * kMargin) / span;
    // y grows downward in SVG.
    auto sx = [&](const Point& p) { return kMargin + static_cast<double>(p.x - min_x->x) * scale; };
    auto sy = [&](const Point& p) { return kCanvas - kMargin - static_cast<double>(p.y - min_y->y) * scale; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas << "\" height=\""
        << kCanvas << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n"
        << "<g stroke-width=\"2\" stroke-linecap=\"round\">\n";
    for (std::size_t t = 0; t < c.edges.size(); ++t) {
        const auto& p = s.at(c.edges[t].i);
        const auto& q = s.at(c.edges[t].j);
        out << "<line x1=\"" << fmt(sx(p)) << "\" y1=\"" << fmt(sy(p)) << "\" x2=\"" << fmt(sx(q)) << "\" y2=\""
            << fmt(sy(q)) << "\" stroke=\"" << palette(c.colors[t]) << "\" data-color=\"" << c.colors[t]
            << "\"/>\n";
    }
    out << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (int label = 1; label <= c.n; ++label) {
        const auto& p = s.at(label);
        out << "<circle cx=\"" << fmt(sx(p)) << "\" cy=\"" << fmt(sy(p))
            << "\" r=\"9\" fill=\"#ffffff\" stroke=\"#000000\"/>\n"
            << "<text x=\"" << fmt(sx(p)) << "\" y=\"" << fmt(sy(p) + 4.0) << "\">" << label << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace geochrom::render
