#pragma once

// SVG and JSON output for drawings, and reading a JSON drawing back.

#include <string>
#include <string_view>

#include "lombardi/drawing.hpp"

namespace lombardi {

struct SvgStyle {
  /// Vertex marker radius as a fraction of the larger side of the box.
  double vertex_radius = 0.01;
  /// Stroke width as a fraction of the larger side of the box.
  double stroke_width = 0.004;
};

/// One path per edge (L for segments, A for arcs) and one filled circle per
/// vertex, y axis pointing up, numbers with 9 decimals, viewBox padded 5%.
/// Throws DegenerateInput when some geometry passes through infinity.
std::string emit_svg(const LombardiDrawing& d, const SvgStyle& style = {});

/// JSON dump with stable key order:
///   vertices: [{id, name, x, y, rotation: [dart...]}]
///   edges: [{id, tail, head, support: {kind: "circle", center: [x, y],
///            radius} | {kind: "line", normal: [x, y], offset},
///            p: [x, y], q: [x, y], witness: [x, y]}]
///   outer_face: index into faces(d.graph) of the face left of
///               graph.outer_dart, or null
/// Dart 2e runs from tail to head of edge e, dart 2e+1 back.
std::string emit_json(const LombardiDrawing& d);

/// Inverse of emit_json. Throws ParseError on malformed documents.
LombardiDrawing read_json(std::string_view text);

/// Fixed 9-decimal rendering used in SVG output, never "-0".
std::string format_number(double x);

}  // namespace lombardi
