#include "tconvex/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

namespace tconvex {

namespace {

// Fixed-point, locale-independent formatting; the whole determinism
// contract of the renderer rests on this.
std::string fmt6(double x) {
    if (x == 0.0) x = 0.0; // collapse -0
    char buf[64];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed, 6);
    return std::string(buf, res.ptr);
}

struct Window {
    double xmin, xmax, ymin, ymax;
};

struct Mapper {
    Window w;
    double sx(double x) const {
        return (x - w.xmin) / (w.xmax - w.xmin) * 800.0;
    }
    double sy(double y) const {
        return 600.0 - (y - w.ymin) / (w.ymax - w.ymin) * 600.0;
    }
};

void append_polyline(std::string& out, const Mapper& m,
                     const std::vector<LVec>& pts, const char* style) {
    out += "<polyline points=\"";
    bool first = true;
    for (const LVec& p : pts) {
        if (!first) out += ' ';
        first = false;
        out += fmt6(m.sx(p.x1));
        out += ',';
        out += fmt6(m.sy(p.x2));
    }
    out += "\" ";
    out += style;
    out += "/>\n";
}

} // namespace

std::string render_svg(const PolygonSpec& spec, int periods) {
    if (!is_t_convex(spec).t_convex)
        throw NotTConvex("render_svg: spec has non-positive edge lengths");

    const std::vector<LVec> chain = boundary_chain(spec, periods);

    Window w{-2.0, 2.0, 0.0, 2.0}; // fallback for periods = 0
    if (!chain.empty()) {
        w = Window{chain[0].x1, chain[0].x1, chain[0].x2, chain[0].x2};
        for (const LVec& p : chain) {
            w.xmin = std::min(w.xmin, p.x1);
            w.xmax = std::max(w.xmax, p.x1);
            w.ymin = std::min(w.ymin, p.x2);
            w.ymax = std::max(w.ymax, p.x2);
        }
        const double mx = std::max(0.1 * (w.xmax - w.xmin), 1e-3);
        const double my = std::max(0.1 * (w.ymax - w.ymin), 1e-3);
        w.xmin -= mx;
        w.xmax += mx;
        w.ymin -= my;
        w.ymax += my;
    }
    const Mapper m{w};

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
           "height=\"600\" viewBox=\"0 0 800 600\">\n";
    out += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";

    // Light cone: dashed rays from the origin along (1,1) and (-1,1),
    // long enough to leave any fitted window.
    const double reach =
        1.5 * std::max({std::abs(w.xmin), std::abs(w.xmax), std::abs(w.ymax), 1.0});
    const char* cone_style =
        "fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" "
        "stroke-dasharray=\"6 6\"";
    append_polyline(out, m, {LVec{0.0, 0.0}, LVec{reach, reach}}, cone_style);
    append_polyline(out, m, {LVec{0.0, 0.0}, LVec{-reach, reach}}, cone_style);

    // Unit hyperbola over the visible x-range, 256 samples.
    std::vector<LVec> hyp;
    hyp.reserve(256);
    const double lo = std::asinh(w.xmin);
    const double hi = std::asinh(w.xmax);
    for (int i = 0; i < 256; ++i) {
        const double psi = lo + (hi - lo) * i / 255.0;
        hyp.push_back(LVec{std::sinh(psi), std::cosh(psi)});
    }
    append_polyline(out, m, hyp,
                    "fill=\"none\" stroke=\"#4682b4\" stroke-width=\"1\"");

    if (!chain.empty())
        append_polyline(out, m, chain,
                        "fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"");

    out += "</svg>\n";
    return out;
}

void emit_svg(const PolygonSpec& spec, int periods, const std::string& path) {
    const std::string body = render_svg(spec, periods);
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("emit_svg: cannot open " + path);
    f.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!f)
        throw IoError("emit_svg: write failed for " + path);
}

} // namespace tconvex
