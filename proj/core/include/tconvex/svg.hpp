#pragma once

#include "tconvex/polygon.hpp"

#include <string>

namespace tconvex {

// Deterministic SVG of a t-convex polygon boundary: fixed 800x600 canvas,
// world window fitted to the plotted boundary vertices plus a 10% margin,
// the light cone as two dashed rays, the unit hyperbola sampled at 256
// points, and the boundary polyline over `periods` fundamental periods
// centered on period 0 (none for periods = 0, which falls back to a fixed
// window). All numbers are printed with 6 fractional digits via to_chars,
// so identical inputs produce byte-identical output.
std::string render_svg(const PolygonSpec& spec, int periods);

// render_svg written to a file (binary, no newline translation).
void emit_svg(const PolygonSpec& spec, int periods, const std::string& path);

} // namespace tconvex
