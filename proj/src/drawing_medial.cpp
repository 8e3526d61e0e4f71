#include <algorithm>
#include <cmath>

#include "lombardi/drawing.hpp"

namespace lombardi {

LombardiDrawing draw_medial(const PlanarEmbeddedGraph& g, const DrawOptions& opt) {
  if (g.num_vertices() < 4 || !is_triconnected(g))
    throw UnsupportedInput("medial drawings need a 3-connected (polyhedral) source graph");
  const FaceSet fs = faces(g);
  const int outer = opt.outer_face.value_or(outer_face(g, fs));
  if (outer < 0 || outer >= fs.size()) throw DegenerateInput("outer face index out of range");
  // Orthogonality residuals run a few hundred times the angle-sum tolerance,
  // and the lune bisectors need them below 1e-8.
  PackingOptions po = opt.pack;
  po.tol = std::min(po.tol, 1e-12);
  const PrimalDualPacking p = primal_dual_pack(g, outer, po);

  LombardiDrawing d;
  for (int e = 0; e < g.num_edges(); ++e) {
    std::string name = g.name(g.tail(2 * e)) + "-" + g.name(g.head(2 * e));
    if (d.graph.find(name)) name += "#" + std::to_string(e);
    d.add_vertex(name, p.crossing[e], e);
  }
  for (int f = 0; f < fs.size(); ++f) {
    for (int dart : fs.walks[f]) {
      const int e1 = PlanarEmbeddedGraph::edge_of(dart);
      const int e2 = PlanarEmbeddedGraph::edge_of(g.face_next(dart));
      const int v = g.head(dart);
      const Circle cv = p.vertex_circle[v].as_circle();
      const Circle cf = p.face_circle[f].as_circle();
      // The lens shared by the vertex disk and the face region meets the
      // line of centers in the segment between these two points. The outer
      // face's region is the outside of its circle.
      const Complex u = (cf.center - cv.center) / std::abs(cf.center - cv.center);
      const Complex mv = cv.center + (f == outer ? -1.0 : 1.0) * cv.radius * u;
      const Complex mf = cf.center - cf.radius * u;
      const CircularArc a = lune_bisector(p.vertex_circle[v], p.face_circle[f], p.crossing[e1], p.crossing[e2],
                                          (mv + mf) / 2.0);
      d.add_arc(e1, e2, a, d.graph.num_edges());
    }
  }
  adopt_geometric_rotation(d);
  require_verified(d, "medial drawing", opt.angle_tol);
  return d;
}

}  // namespace lombardi
