#pragma once

// A small SVG emitter for path configurations: grid, anchors, paths, and an
// optional barrier line.  Display-only; not a stability contract.

#include <sstream>

#include "ppbij/paths.hpp"

namespace ppbij {

struct SvgOptions {
    int cell = 24;
    bool barrier = false;
    int barrier_offset = 0;  // draw x - y = barrier_offset
};

inline std::string render_svg(const LgvConfig& cfg, const SvgOptions& opt = {}) {
    static const char* palette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                                    "#d35400", "#16a085", "#7f8c8d", "#2c3e50"};
    int minx = 1 << 30, maxx = -(1 << 30), miny = 1 << 30, maxy = -(1 << 30);
    std::vector<std::vector<Pt>> polys;
    for (size_t k = 0; k < cfg.words.size(); ++k) {
        polys.push_back(vertices(cfg.starts[k], cfg.words[k], cfg.geom));
        for (const Pt& p : polys.back()) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
            maxy = std::max(maxy, p.y);
        }
    }
    minx -= 1, maxx += 1, miny -= 1, maxy += 1;
    int c = opt.cell;
    auto X = [&](int x) { return (x - minx) * c; };
    auto Y = [&](int y) { return (maxy - y) * c; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << X(maxx) + c
        << "\" height=\"" << Y(miny) + c << "\">\n";
    for (int x = minx; x <= maxx; ++x)
        svg << "<line x1=\"" << X(x) << "\" y1=\"" << Y(maxy) << "\" x2=\"" << X(x)
            << "\" y2=\"" << Y(miny) << "\" stroke=\"#eee\"/>\n";
    for (int y = miny; y <= maxy; ++y)
        svg << "<line x1=\"" << X(minx) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(maxx)
            << "\" y2=\"" << Y(y) << "\" stroke=\"#eee\"/>\n";
    if (opt.barrier) {
        // the line x - y = offset through the viewport
        int o = opt.barrier_offset;
        svg << "<line x1=\"" << X(miny + o) << "\" y1=\"" << Y(miny) << "\" x2=\""
            << X(maxy + o) << "\" y2=\"" << Y(maxy)
            << "\" stroke=\"#e67e22\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
    }
    for (size_t k = 0; k < polys.size(); ++k) {
        svg << "<polyline fill=\"none\" stroke=\"" << palette[k % 8]
            << "\" stroke-width=\"3\" points=\"";
        for (const Pt& p : polys[k]) svg << X(p.x) << "," << Y(p.y) << " ";
        svg << "\"/>\n";
        const Pt &s = polys[k].front(), &e = polys[k].back();
        svg << "<circle cx=\"" << X(s.x) << "\" cy=\"" << Y(s.y)
            << "\" r=\"5\" fill=\"" << palette[k % 8] << "\"/>\n";
        svg << "<circle cx=\"" << X(e.x) << "\" cy=\"" << Y(e.y)
            << "\" r=\"5\" fill=\"none\" stroke=\"" << palette[k % 8]
            << "\" stroke-width=\"2\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ppbij
