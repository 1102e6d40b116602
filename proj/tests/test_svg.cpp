#include "doctest.h"

#include "tconvex/svg.hpp"

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using namespace tconvex;

namespace {

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos;
         pos = hay.find(needle, pos + needle.size()))
        ++count;
    return count;
}

// Number of coordinate pairs in the first polyline after `from`.
std::size_t polyline_points(const std::string& svg, std::size_t from) {
    const std::size_t start = svg.find("points=\"", from);
    REQUIRE(start != std::string::npos);
    const std::size_t open = start + 8;
    const std::size_t close = svg.find('"', open);
    const std::string pts = svg.substr(open, close - open);
    return count_occurrences(pts, ",");
}

} // namespace

TEST_CASE("render_svg is deterministic and structurally fixed") {
    const PolygonSpec spec({std::asinh(1.0)}, {1.0});
    const std::string a = render_svg(spec, 3);
    const std::string b = render_svg(spec, 3);
    CHECK(a == b);

    CHECK(a.find("width=\"800\"") != std::string::npos);
    CHECK(a.find("height=\"600\"") != std::string::npos);
    CHECK(a.find("<rect width=\"800\" height=\"600\" fill=\"white\"/>") !=
          std::string::npos);
    CHECK(count_occurrences(a, "stroke-dasharray") == 2); // the two cone rays
    CHECK(count_occurrences(a, "<polyline") == 4); // rays + hyperbola + boundary

    // Hyperbola polyline carries 256 samples; the 3-period one-edge boundary
    // has 4 points.
    const std::size_t hyp_at = a.find("#4682b4");
    REQUIRE(hyp_at != std::string::npos);
    const std::size_t hyp_line = a.rfind("<polyline", hyp_at);
    CHECK(polyline_points(a, hyp_line) == 256);
    const std::size_t boundary_at = a.find("#000000");
    REQUIRE(boundary_at != std::string::npos);
    const std::size_t boundary_line = a.rfind("<polyline", boundary_at);
    CHECK(polyline_points(a, boundary_line) == 4);
}

TEST_CASE("render_svg with periods = 0 draws only cone and hyperbola") {
    const PolygonSpec spec({std::asinh(1.0)}, {1.0});
    const std::string svg = render_svg(spec, 0);
    CHECK(count_occurrences(svg, "<polyline") == 3);
    CHECK(svg.find("#000000") == std::string::npos);
}

TEST_CASE("every number in the SVG has exactly six fractional digits") {
    const PolygonSpec spec({0.3, 0.4, 0.5}, {1.0, 1.03, 1.01});
    const std::string svg = render_svg(spec, 3);
    std::size_t checked = 0;
    for (std::size_t pos = svg.find("points=\""); pos != std::string::npos;
         pos = svg.find("points=\"", pos + 1)) {
        const std::size_t open = pos + 8;
        const std::size_t close = svg.find('"', open);
        std::istringstream pts(svg.substr(open, close - open));
        std::string pair;
        while (pts >> pair) {
            const std::size_t comma = pair.find(',');
            REQUIRE(comma != std::string::npos);
            for (const std::string& num :
                 {pair.substr(0, comma), pair.substr(comma + 1)}) {
                const std::size_t dot = num.find('.');
                REQUIRE(dot != std::string::npos);
                CHECK(num.size() - dot - 1 == 6);
                ++checked;
            }
        }
    }
    CHECK(checked > 500); // cone rays + 256 hyperbola samples + boundary
}

TEST_CASE("render_svg rejects non-t-convex specs") {
    CHECK_THROWS_AS(render_svg(PolygonSpec({0.5, 0.5}, {1.0, 10.0}), 3),
                    NotTConvex);
}

TEST_CASE("emit_svg writes the rendered bytes") {
    const PolygonSpec spec({0.7}, {1.2});
    const std::string path = "test_emit_tmp.svg";
    emit_svg(spec, 2, path);
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == render_svg(spec, 2));
    f.close();
    std::remove(path.c_str());

    CHECK_THROWS_AS(emit_svg(spec, 2, "no-such-dir/file.svg"), IoError);
}
