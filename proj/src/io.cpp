#include "lombardi/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace lombardi {

using Json = nlohmann::ordered_json;

std::string format_number(double x) {
  if (!std::isfinite(x)) throw DegenerateInput("non-finite coordinate in output");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos) return "0.000000000";
  return s;
}

namespace {

// SVG's y axis points down; the drawing's points up.
Complex screen(Complex z) { return std::conj(z); }

std::string pt(Complex z) { return format_number(z.real()) + " " + format_number(z.imag()); }

std::string path_data(const CircularArc& a) {
  if (a.p.is_infinite() || a.q.is_infinite() || a.witness.is_infinite())
    throw DegenerateInput("arc through infinity cannot be drawn");
  const Complex p = screen(a.p.z()), q = screen(a.q.z()), w = screen(a.witness.z());
  std::string out = "M " + pt(p) + " ";
  if (a.support.is_line()) {
    if (dot(w - p, w - q) > 0.0) throw DegenerateInput("line arc through infinity cannot be drawn");
    return out + "L " + pt(q);
  }
  const double r = a.support.as_circle().radius;
  const int large = subtended_angle(a) > kPi ? 1 : 0;
  // On screen, sweep 1 runs in the direction of increasing angle, which
  // passes p, w, q in counterclockwise coordinate order.
  const int sweep = cross(w - p, q - p) > 0.0 ? 1 : 0;
  return out + "A " + format_number(r) + " " + format_number(r) + " 0 " + std::to_string(large) + " " +
         std::to_string(sweep) + " " + pt(q);
}

Json xy(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex read_xy(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected an [x, y] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string emit_svg(const LombardiDrawing& d, const SvgStyle& style) {
  Complex lo(-1, -1), hi(1, 1);
  if (d.graph.num_vertices() > 0) {
    const auto [a, b] = bounding_box(d);
    lo = screen(Complex(a.real(), b.imag()));
    hi = screen(Complex(b.real(), a.imag()));
  }
  double side = std::max(hi.real() - lo.real(), hi.imag() - lo.imag());
  if (side <= 0.0) side = 1.0;
  const double w = hi.real() - lo.real(), h = hi.imag() - lo.imag();
  const double padx = 0.05 * (w > 0.0 ? w : side), pady = 0.05 * (h > 0.0 ? h : side);
  const double big = std::max(w + 2 * padx, h + 2 * pady);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_number(lo.real() - padx) << " "
     << format_number(lo.imag() - pady) << " " << format_number(w + 2 * padx) << " " << format_number(h + 2 * pady)
     << "\">\n";
  os << "<g id=\"edges\" fill=\"none\" stroke=\"black\" stroke-width=\"" << format_number(style.stroke_width * big)
     << "\">\n";
  for (int e = 0; e < d.graph.num_edges(); ++e)
    os << "<path id=\"e" << e << "\" d=\"" << path_data(d.arc[e]) << "\"/>\n";
  os << "</g>\n";
  os << "<g id=\"vertices\" fill=\"black\">\n";
  for (int v = 0; v < d.graph.num_vertices(); ++v) {
    const Complex z = screen(d.position[v].z());
    os << "<circle id=\"v" << v << "\" cx=\"" << format_number(z.real()) << "\" cy=\"" << format_number(z.imag())
       << "\" r=\"" << format_number(style.vertex_radius * big) << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string emit_json(const LombardiDrawing& d) {
  const PlanarEmbeddedGraph& g = d.graph;
  Json root;
  Json vs = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    Json jv;
    jv["id"] = v;
    jv["name"] = g.name(v);
    const Complex z = d.position[v].z();
    jv["x"] = z.real();
    jv["y"] = z.imag();
    jv["rotation"] = g.rotation(v);
    vs.push_back(std::move(jv));
  }
  Json es = Json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    const CircularArc& a = d.arc[e];
    Json je;
    je["id"] = e;
    je["tail"] = g.tail(2 * e);
    je["head"] = g.head(2 * e);
    Json s;
    if (a.support.is_circle()) {
      s["kind"] = "circle";
      s["center"] = xy(a.support.as_circle().center);
      s["radius"] = a.support.as_circle().radius;
    } else {
      s["kind"] = "line";
      s["normal"] = xy(a.support.as_line().normal);
      s["offset"] = a.support.as_line().offset;
    }
    je["support"] = std::move(s);
    je["p"] = xy(a.p.z());
    je["q"] = xy(a.q.z());
    je["witness"] = xy(a.witness.z());
    es.push_back(std::move(je));
  }
  root["vertices"] = std::move(vs);
  root["edges"] = std::move(es);
  if (g.outer_dart && g.num_edges() > 0)
    root["outer_face"] = faces(g).face_of[*g.outer_dart];
  else
    root["outer_face"] = nullptr;
  return root.dump(2) + "\n";
}

LombardiDrawing read_json(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("drawing JSON: ") + ex.what());
  }
  try {
    LombardiDrawing d;
    const Json& vs = root.at("vertices");
    const Json& es = root.at("edges");
    for (const Json& jv : vs) {
      if (jv.at("id").get<int>() != d.graph.num_vertices()) throw ParseError("vertex ids must be 0, 1, 2, ...");
      d.add_vertex(jv.at("name").get<std::string>(), Complex(jv.at("x").get<double>(), jv.at("y").get<double>()),
                   d.graph.num_vertices());
    }
    for (const Json& je : es) {
      if (je.at("id").get<int>() != d.graph.num_edges()) throw ParseError("edge ids must be 0, 1, 2, ...");
      const int u = je.at("tail").get<int>(), v = je.at("head").get<int>();
      if (u < 0 || v < 0 || u >= d.graph.num_vertices() || v >= d.graph.num_vertices())
        throw ParseError("edge endpoint out of range");
      const Json& s = je.at("support");
      CircularArc a;
      const std::string kind = s.at("kind").get<std::string>();
      if (kind == "circle") {
        a.support = Circle{read_xy(s.at("center")), s.at("radius").get<double>()};
      } else if (kind == "line") {
        a.support = Line{read_xy(s.at("normal")), s.at("offset").get<double>()};
      } else {
        throw ParseError("unknown support kind '" + kind + "'");
      }
      a.p = read_xy(je.at("p"));
      a.q = read_xy(je.at("q"));
      a.witness = read_xy(je.at("witness"));
      d.add_arc(u, v, a, d.graph.num_edges());
    }
    for (int v = 0; v < d.graph.num_vertices(); ++v) {
      std::vector<int> rot = vs[v].at("rotation").get<std::vector<int>>();
      std::vector<int> have = d.graph.rotation(v), want = rot;
      std::sort(have.begin(), have.end());
      std::sort(want.begin(), want.end());
      if (have != want) throw ParseError("rotation of vertex " + std::to_string(v) + " does not match its edges");
      d.graph.set_rotation(v, std::move(rot));
    }
    const Json& of = root.at("outer_face");
    if (!of.is_null()) {
      const FaceSet fs = faces(d.graph);
      const int f = of.get<int>();
      if (f < 0 || f >= fs.size()) throw ParseError("outer_face out of range");
      d.graph.outer_dart = fs.walks[f].front();
    }
    return d;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("drawing JSON: ") + ex.what());
  }
}

}  // namespace lombardi
