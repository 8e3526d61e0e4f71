#include <cmath>

#include "lombardi/drawing.hpp"

namespace lombardi {

namespace {

// Common point of two tangent generalized circles.
ExtendedPoint tangency_point(const GeneralizedCircle& a, const GeneralizedCircle& b) {
  if (a.is_line() && b.is_line()) return ExtendedPoint::infinity();
  if (a.is_line()) return tangency_point(b, a);
  const Circle& c1 = a.as_circle();
  if (b.is_line()) {
    const Line& l = b.as_line();
    return c1.center - (std::real(std::conj(l.normal) * c1.center) - l.offset) * l.normal;
  }
  const Circle& c2 = b.as_circle();
  const Complex dir = c2.center - c1.center;
  const double d = std::abs(dir);
  if (d == 0.0) throw DegenerateInput("concentric circles are not tangent");
  const double external = std::abs(d - (c1.radius + c2.radius));
  const double internal = std::abs(d - std::abs(c1.radius - c2.radius));
  const double sign = external <= internal || c1.radius >= c2.radius ? 1.0 : -1.0;
  return c1.center + sign * c1.radius * dir / d;
}

// Sign of the side of K a point is on; infinity is outside a circle.
double side_of(const GeneralizedCircle& k, const ExtendedPoint& p) {
  if (p.is_infinite()) return k.is_circle() ? 1.0 : 0.0;
  return k.side_value(p.z());
}

}  // namespace

LombardiDrawing drawing_from_face_circles(const PlanarEmbeddedGraph& g, const FaceSet& f,
                                          const std::vector<GeneralizedCircle>& face_circle) {
  std::vector<ExtendedPoint> touch(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e)
    touch[e] = tangency_point(face_circle[f.face_of[2 * e]], face_circle[f.face_of[2 * e + 1]]);

  LombardiDrawing d;
  d.graph = g;
  d.position.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& rot = g.rotation(v);
    if (rot.size() != 3) throw UnsupportedInput("vertex " + g.name(v) + " is not of degree 3");
    std::array<Complex, 3> t;
    for (int i = 0; i < 3; ++i) {
      const ExtendedPoint& p = touch[PlanarEmbeddedGraph::edge_of(rot[i])];
      if (p.is_infinite()) throw DegenerateInput("tangency point at infinity next to vertex " + g.name(v));
      t[i] = p.z();
    }
    const auto [iso1, iso2] = isodynamic_points(Triangle::make(t[0], t[1], t[2]));
    const GeneralizedCircle k = circle_through(t[0], t[1], t[2]);
    // Reference: a tangency on the face left of rot[0] away from v. It lies
    // on the far side of K from the cusp at v.
    ExtendedPoint ref;
    bool found = false;
    for (int dart : f.walks[f.face_of[rot[0]]]) {
      if (g.tail(dart) != v && g.head(dart) != v) {
        ref = touch[PlanarEmbeddedGraph::edge_of(dart)];
        found = true;
        break;
      }
    }
    if (!found) throw DegenerateInput("face next to vertex " + g.name(v) + " has no far edge");
    const double ref_side = side_of(k, ref);
    const double s1 = side_of(k, iso1), s2 = side_of(k, iso2);
    if (ref_side == 0.0 || s1 * s2 >= 0.0) throw DegenerateInput("cusp at vertex " + g.name(v) + " is degenerate");
    const ExtendedPoint& pick = s1 * ref_side < 0.0 ? iso1 : iso2;
    if (pick.is_infinite()) throw DegenerateInput("vertex " + g.name(v) + " lands at infinity");
    d.position[v] = pick;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    d.arc.push_back(arc_through(d.position[g.tail(2 * e)], d.position[g.head(2 * e)], touch[e]));
    d.tangency_witness.push_back(1);
    d.edge_tag.push_back(e);
  }
  for (int v = 0; v < g.num_vertices(); ++v) d.vertex_tag.push_back(v);
  return d;
}

FacePacking pack_faces(const PlanarEmbeddedGraph& g, const DrawOptions& opt) {
  FacePacking fp;
  fp.faces = faces(g);
  fp.outer = opt.outer_face.value_or(outer_face(g, fp.faces));
  if (fp.outer < 0 || fp.outer >= fp.faces.size()) throw DegenerateInput("outer face index out of range");
  const PlanarEmbeddedGraph t = dual(g, fp.faces);
  // boundary: the dual triangle of a vertex on the outer face
  const FaceSet tf = faces(t);
  int tri = -1;
  for (int i = 0; i < tf.size() && tri < 0; ++i) {
    for (int dart : tf.walks[i]) {
      if (t.tail(dart) == fp.outer) tri = i;
    }
  }
  std::map<int, double> boundary;
  for (int dart : tf.walks[tri]) boundary[t.tail(dart)] = 1.0;
  fp.radii = pack_triangulation(t, boundary, opt.pack);
  const CirclePacking cp = layout_centers(t, fp.radii.radius, tf.walks[tri].front(), tri, opt.pack.tol);
  const NormalizedPacking np = normalize_outer(cp.circles, fp.outer).first;
  fp.optimization = optimize_min_radius(np, opt.opt);
  for (int i = 0; i < static_cast<int>(np.circles.size()); ++i) {
    fp.circle.push_back(i == fp.outer ? GeneralizedCircle(Circle{0.0, 1.0})
                                      : mobius_apply(fp.optimization.map, GeneralizedCircle(np.circles[i])));
  }
  return fp;
}

LombardiDrawing draw_3connected(const PlanarEmbeddedGraph& g, const DrawOptions& opt) {
  const FacePacking fp = pack_faces(g, opt);
  LombardiDrawing d = drawing_from_face_circles(g, fp.faces, fp.circle);
  d.graph.outer_dart = fp.faces.walks[fp.outer].front();
  require_verified(d, "3-connected drawing", opt.angle_tol);
  return d;
}

}  // namespace lombardi
