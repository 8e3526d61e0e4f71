#include "lombardi/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lombardi {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

int LombardiDrawing::add_vertex(const std::string& name, ExtendedPoint at, int tag) {
  const int v = graph.add_vertex(name);
  position.push_back(at);
  vertex_tag.push_back(tag);
  return v;
}

int LombardiDrawing::add_arc(int u, int v, const CircularArc& a, int tag, bool tangency) {
  const int e = graph.add_edge(u, v);
  arc.push_back(a);
  edge_tag.push_back(tag);
  tangency_witness.push_back(tangency ? 1 : 0);
  return e;
}

int LombardiDrawing::find_vertex_tag(int tag) const {
  const auto it = std::find(vertex_tag.begin(), vertex_tag.end(), tag);
  return it == vertex_tag.end() ? -1 : static_cast<int>(it - vertex_tag.begin());
}

int LombardiDrawing::find_edge_tag(int tag) const {
  const auto it = std::find(edge_tag.begin(), edge_tag.end(), tag);
  return it == edge_tag.end() ? -1 : static_cast<int>(it - edge_tag.begin());
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << "endpoints " << (endpoints_ok ? "ok" : "FAIL") << " (max " << max_endpoint_residual << "), angles "
     << (angles_ok ? "ok" : "FAIL") << " (max " << max_angle_residual << " rad), crossings " << crossings.size()
     << ", coincident vertices " << coincident.size() << ", overall " << (pass ? "PASS" : "FAIL");
  return os.str();
}

namespace {

double point_gap(const ExtendedPoint& a, const ExtendedPoint& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite() ? 0.0 : kInf;
  return std::abs(a.z() - b.z()) / std::max({1.0, std::abs(a.z()), std::abs(b.z())});
}

double chord(const CircularArc& a) {
  if (a.p.is_infinite() || a.q.is_infinite()) return kInf;
  return std::abs(a.p.z() - a.q.z());
}

// Tangent direction of the arc-end of dart d at its tail.
double dart_direction(const LombardiDrawing& d, int dart) {
  const CircularArc& a = d.arc[PlanarEmbeddedGraph::edge_of(dart)];
  return tangent_direction(a, dart % 2 == 0 ? ArcEnd::Start : ArcEnd::End);
}

}  // namespace

std::vector<int> geometric_rotation(const LombardiDrawing& d, int v) {
  std::vector<int> darts = d.graph.rotation(v);
  std::vector<std::pair<double, int>> keyed;
  for (int dart : darts) keyed.push_back({-dart_direction(d, dart), dart});
  std::sort(keyed.begin(), keyed.end());
  darts.clear();
  for (const auto& [key, dart] : keyed) darts.push_back(dart);
  return darts;
}

void adopt_geometric_rotation(LombardiDrawing& d) {
  for (int v = 0; v < d.graph.num_vertices(); ++v) d.graph.set_rotation(v, geometric_rotation(d, v));
}

VerificationReport verify(const LombardiDrawing& d, const PlanarEmbeddedGraph& g, double tol_angle, double tol_geom) {
  if (g.num_vertices() != d.graph.num_vertices() || g.num_edges() != d.graph.num_edges() ||
      static_cast<int>(d.position.size()) != g.num_vertices() || static_cast<int>(d.arc.size()) != g.num_edges())
    throw DegenerateInput("drawing and graph sizes differ");
  VerificationReport r;
  // (a) endpoints
  for (int e = 0; e < g.num_edges(); ++e) {
    const CircularArc& a = d.arc[e];
    r.max_endpoint_residual = std::max({r.max_endpoint_residual, point_gap(a.p, d.position[g.tail(2 * e)]),
                                        point_gap(a.q, d.position[g.head(2 * e)])});
  }
  r.endpoints_ok = r.max_endpoint_residual <= tol_geom;
  // (b) angles
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int deg = g.degree(v);
    if (deg < 2) continue;
    std::vector<double> dir;
    for (int dart : g.rotation(v)) dir.push_back(dart_direction(d, dart));
    std::sort(dir.begin(), dir.end());
    const double want = kTwoPi / deg;
    for (int i = 0; i < deg; ++i) {
      const double gap = i + 1 < deg ? dir[i + 1] - dir[i] : dir[0] + kTwoPi - dir[i];
      r.max_angle_residual = std::max(r.max_angle_residual, std::abs(gap - want));
    }
    if (deg >= 3) {
      const auto geo = geometric_rotation(d, v);
      const auto& rot = g.rotation(v);
      const auto at = std::find(rot.begin(), rot.end(), geo[0]);
      bool same = at != rot.end();
      for (int i = 0; same && i < deg; ++i) same = rot[((at - rot.begin()) + i) % deg] == geo[i];
      r.rotation_mismatches += same ? 0 : 1;
    }
  }
  r.angles_ok = r.max_angle_residual <= tol_angle;
  // (c) crossings
  for (int e = 0; e < g.num_edges(); ++e) {
    for (int f = e + 1; f < g.num_edges(); ++f) {
      const ArcIntersection x = arc_intersections(d.arc[e], d.arc[f]);
      bool bad = x.overlap;
      const double tol = 1e-7 * std::max(chord(d.arc[e]) == kInf ? 1.0 : chord(d.arc[e]),
                                         chord(d.arc[f]) == kInf ? 1.0 : chord(d.arc[f])) +
                         1e-12;
      // Arcs leaving a shared vertex at least 45 degrees apart cannot meet
      // again close to it, so roots there are rounding. Tangent supports
      // (arcs continuing each other at 180 degrees) split their double root
      // far beyond `tol`.
      auto near_radius = [&](int s) {
        if (d.position[s].is_infinite() || chord(d.arc[e]) == kInf || chord(d.arc[f]) == kInf) return tol;
        const Complex te = tangent_vector(d.arc[e], g.tail(2 * e) == s ? ArcEnd::Start : ArcEnd::End);
        const Complex tf = tangent_vector(d.arc[f], g.tail(2 * f) == s ? ArcEnd::Start : ArcEnd::End);
        if (std::abs(std::arg(te / tf)) < kPi / 4) return tol;
        return std::max(tol, 1e-4 * std::min(chord(d.arc[e]), chord(d.arc[f])));
      };
      for (const ExtendedPoint& p : x.points) {
        bool shared = false;
        for (int s : {g.tail(2 * e), g.head(2 * e)}) {
          if (s != g.tail(2 * f) && s != g.head(2 * f)) continue;
          const ExtendedPoint& at = d.position[s];
          if (at.is_infinite() ? p.is_infinite() : p.is_finite() && std::abs(p.z() - at.z()) <= near_radius(s))
            shared = true;
        }
        bad = bad || !shared;
      }
      if (bad) r.crossings.push_back({e, f});
    }
  }
  r.planar_ok = r.crossings.empty();
  // (d) distinct vertices
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int v = u + 1; v < g.num_vertices(); ++v) {
      if (point_gap(d.position[u], d.position[v]) <= tol_geom) r.coincident.push_back({u, v});
    }
  }
  r.distinct_ok = r.coincident.empty();
  r.pass = r.endpoints_ok && r.angles_ok && r.planar_ok && r.distinct_ok;
  return r;
}

VerificationReport verify(const LombardiDrawing& d, double tol_angle, double tol_geom) {
  return verify(d, d.graph, tol_angle, tol_geom);
}

void require_verified(const LombardiDrawing& d, const std::string& what, double tol_angle) {
  VerificationReport r = verify(d, tol_angle);
  if (!r.pass) throw VerificationError(what, std::move(r));
}

LombardiDrawing transformed(const LombardiDrawing& d, const MobiusMap& m) {
  LombardiDrawing out = d;
  for (auto& p : out.position) p = mobius_apply(m, p);
  for (auto& a : out.arc) a = mobius_apply(m, a);
  if (m.conjugate) {
    for (int v = 0; v < out.graph.num_vertices(); ++v) {
      std::vector<int> rot = out.graph.rotation(v);
      std::reverse(rot.begin(), rot.end());
      out.graph.set_rotation(v, rot);
    }
    if (out.graph.outer_dart) out.graph.outer_dart = PlanarEmbeddedGraph::twin(*out.graph.outer_dart);
  }
  return out;
}

std::pair<Complex, Complex> bounding_box(const LombardiDrawing& d) {
  double x0 = kInf, y0 = kInf, x1 = -kInf, y1 = -kInf;
  auto take = [&](const ExtendedPoint& p) {
    if (p.is_infinite()) throw DegenerateInput("bounding box of a drawing through infinity");
    x0 = std::min(x0, p.x());
    x1 = std::max(x1, p.x());
    y0 = std::min(y0, p.y());
    y1 = std::max(y1, p.y());
  };
  for (const auto& p : d.position) take(p);
  for (const auto& a : d.arc) {
    take(a.p);
    take(a.q);
    if (!a.support.is_circle()) continue;
    const Circle& c = a.support.as_circle();
    for (Complex u : {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)}) {
      const Complex z = c.center + c.radius * u;
      if (on_arc(a, z)) take(z);
    }
  }
  if (x0 > x1) return {0.0, 0.0};
  return {Complex(x0, y0), Complex(x1, y1)};
}

namespace {

// Whether z lies within tol of arc a.
bool near_arc(const CircularArc& a, Complex z, double tol) {
  double dist;
  if (a.support.is_line()) {
    const Line& l = a.support.as_line();
    dist = std::abs(std::real(std::conj(l.normal) * z) - l.offset);
  } else {
    const Circle& c = a.support.as_circle();
    dist = std::abs(std::abs(z - c.center) - c.radius);
  }
  return dist <= tol && on_arc(a, z, tol);
}

}  // namespace

MobiusMap expansion_map(const LombardiDrawing& d, int e, double eps, int side_dart) {
  if (!(eps > 0.0)) throw DegenerateInput("expansion parameter must be positive");
  if (PlanarEmbeddedGraph::edge_of(side_dart) != e) throw DegenerateInput("side dart is not a dart of the edge");
  const CircularArc a = side_dart % 2 == 0 ? d.arc[e] : reversed(d.arc[e]);
  if (a.p.is_infinite() || a.q.is_infinite()) throw DegenerateInput("cannot expand an edge through infinity");
  const Complex mid = arc_point(a, 0.5);
  const double h = 1e-4;
  const Complex t = arc_point(a, 0.5 + h) - arc_point(a, 0.5 - h);
  const Complex left = Complex(0, 1) * t / std::abs(t);
  const double len = std::abs(a.p.z() - a.q.z());
  // The design offset eps * |e| can leave the image short of 2pi (1 - eps)
  // on flat or convex-side arcs, so the offset halves until it is not.
  for (double delta = eps * len; delta > 1e-12 * len; delta *= 0.5) {
    const Complex x = mid + delta * left;
    bool on_some_arc = false;
    for (const auto& other : d.arc) on_some_arc = on_some_arc || near_arc(other, x, 1e-9 * len);
    for (const auto& p : d.position) on_some_arc = on_some_arc || (p.is_finite() && std::abs(p.z() - x) < 1e-9 * len);
    if (on_some_arc) continue;
    // z -> x + R^2 / (z - x): inversion in the circle (x, R) then a
    // reflection through x, which keeps orientation
    const double r2 = len * len;
    const MobiusMap m = MobiusMap::make(x, r2 - x * x, 1.0, -x);
    const CircularArc img = mobius_apply(m, a);
    if (img.support.is_circle() && subtended_angle(img) >= kTwoPi * (1.0 - eps)) return m;
  }
  throw InternalError("no expansion center found for the edge");
}

LombardiDrawing expand_virtual_edge(const LombardiDrawing& d, int e, double eps, std::optional<int> side_dart) {
  const int side = side_dart.value_or(2 * e);
  LombardiDrawing out = transformed(d, expansion_map(d, e, eps, side));
  out.graph.outer_dart = side;
  return out;
}

LombardiDrawing p_node_drawing() {
  LombardiDrawing d;
  const Complex a(-1, 0), b(1, 0);
  d.add_vertex("a", a, 0);
  d.add_vertex("b", b, 1);
  d.add_arc(0, 1, arc_through(a, b, Complex(0, 0)), 0);
  d.add_arc(0, 1, arc_from_tangent(a, std::polar(1.0, 2 * kPi / 3), b), 1);
  d.add_arc(0, 1, arc_from_tangent(a, std::polar(1.0, -2 * kPi / 3), b), 2);
  adopt_geometric_rotation(d);
  return d;
}

LombardiDrawing claw_drawing() {
  LombardiDrawing d;
  d.add_vertex("c", Complex(0, 0), 0);
  for (int i = 0; i < 3; ++i) {
    const Complex leaf = std::polar(1.0, kPi / 2 + i * 2 * kPi / 3);
    const int v = d.add_vertex("l" + std::to_string(i), leaf, i + 1);
    d.add_arc(0, v, arc_through(Complex(0, 0), leaf, leaf / 2.0), i);
  }
  adopt_geometric_rotation(d);
  return d;
}

LombardiDrawing subdivide_arc(const LombardiDrawing& d, int e, const std::vector<std::string>& names,
                              const std::vector<int>& vertex_tags, const std::vector<int>& edge_tags) {
  const int k = static_cast<int>(names.size());
  if (k == 0) return d;
  const CircularArc& a = d.arc[e];
  LombardiDrawing out;
  for (int v = 0; v < d.graph.num_vertices(); ++v) out.add_vertex(d.graph.name(v), d.position[v], d.vertex_tag[v]);
  std::vector<int> chain{d.graph.tail(2 * e)};
  std::vector<Complex> at{a.p.z()};
  for (int j = 0; j < k; ++j) {
    const Complex z = arc_point(a, static_cast<double>(j + 1) / (k + 1));
    at.push_back(z);
    const int tag = j < static_cast<int>(vertex_tags.size()) ? vertex_tags[j] : out.graph.num_vertices();
    chain.push_back(out.add_vertex(names[j], z, tag));
  }
  chain.push_back(d.graph.head(2 * e));
  at.push_back(a.q.z());
  auto piece = [&](int j) {
    const Complex via = arc_point(a, (j + 0.5) / (k + 1));
    CircularArc s = arc_through(at[j], at[j + 1], via);
    s.support = a.support;  // keep the exact support
    return s;
  };
  for (int f = 0; f < d.graph.num_edges(); ++f) {
    if (f == e) {
      out.add_arc(chain[0], chain[1], piece(0), d.edge_tag[e], d.tangency_witness[e]);
    } else {
      out.add_arc(d.graph.tail(2 * f), d.graph.head(2 * f), d.arc[f], d.edge_tag[f], d.tangency_witness[f]);
    }
  }
  for (int j = 1; j <= k; ++j) {
    const int tag = j - 1 < static_cast<int>(edge_tags.size()) ? edge_tags[j - 1] : out.graph.num_edges();
    out.add_arc(chain[j], chain[j + 1], piece(j), tag);
  }
  adopt_geometric_rotation(out);
  out.graph.outer_dart = d.graph.outer_dart;
  return out;
}

}  // namespace lombardi
