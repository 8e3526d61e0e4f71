#include <algorithm>
#include <cmath>
#include <limits>

#include "lombardi/drawing.hpp"

namespace lombardi {

namespace {

constexpr double kThirty = kPi / 6;

// Copies vertices and all edges except those in `skip`, remembering the
// new index of every kept vertex.
struct Copy {
  std::vector<int> vertex;  // old -> new, -1 when dropped
};
Copy copy_into(LombardiDrawing& out, const LombardiDrawing& d, const std::vector<int>& skip_vertices,
               const std::vector<int>& skip_edges) {
  Copy c;
  c.vertex.assign(d.graph.num_vertices(), -1);
  for (int v = 0; v < d.graph.num_vertices(); ++v) {
    if (std::find(skip_vertices.begin(), skip_vertices.end(), v) != skip_vertices.end()) continue;
    c.vertex[v] = out.add_vertex(d.graph.name(v), d.position[v], d.vertex_tag[v]);
  }
  for (int e = 0; e < d.graph.num_edges(); ++e) {
    if (std::find(skip_edges.begin(), skip_edges.end(), e) != skip_edges.end()) continue;
    out.add_arc(c.vertex[d.graph.tail(2 * e)], c.vertex[d.graph.head(2 * e)], d.arc[e], d.edge_tag[e],
                d.tangency_witness[e]);
  }
  return c;
}

// Whether the segment from a to b meets any arc of d other than `ignore`
// edges, away from a.
bool segment_hits(const LombardiDrawing& d, Complex a, Complex b, const std::vector<int>& ignore) {
  const CircularArc s = arc_through(a, b, (a + b) / 2.0);
  const double tol = 1e-9 * std::abs(b - a);
  for (int e = 0; e < d.graph.num_edges(); ++e) {
    if (std::find(ignore.begin(), ignore.end(), e) != ignore.end()) continue;
    const ArcIntersection x = arc_intersections(s, d.arc[e]);
    if (x.overlap) return true;
    for (const auto& p : x.points) {
      if (p.is_infinite() || std::abs(p.z() - a) > tol) return true;
    }
  }
  for (const auto& p : d.position) {
    if (p.is_finite() && std::abs(p.z() - a) > tol && on_arc(s, p, tol)) return true;
  }
  return false;
}

}  // namespace

LombardiDrawing attach_bridge_stubs(const LombardiDrawing& d, const StubRequest& req) {
  const int k = static_cast<int>(req.stubs.size());
  if (k == 0) return d;
  const int e = req.edge;
  if (PlanarEmbeddedGraph::edge_of(req.side_dart) != e) throw DegenerateInput("side dart is not a dart of the edge");
  const bool forward = req.side_dart % 2 == 0;
  const CircularArc a = forward ? d.arc[e] : reversed(d.arc[e]);
  const Complex p = a.p.z(), q = a.q.z();
  // inset arc: turned 30 degrees toward the left face at p
  const CircularArc inset = arc_from_tangent(p, tangent_vector(a, ArcEnd::Start) * std::polar(1.0, kThirty), q);
  std::vector<Complex> at{p};
  for (int j = 1; j <= k; ++j) at.push_back(arc_point(inset, static_cast<double>(j) / (k + 1)));
  at.push_back(q);
  // chain pieces leave the inset 30 degrees to the right, which makes the
  // first one leave p exactly as e did
  std::vector<CircularArc> chain;
  std::vector<Complex> inset_tangent;
  for (int j = 0; j <= k; ++j) {
    const CircularArc piece =
        arc_through(at[j], at[j + 1], arc_point(inset, (j + 0.5) / (k + 1)));
    const Complex tau = tangent_vector(piece, ArcEnd::Start);
    inset_tangent.push_back(tau);
    chain.push_back(arc_from_tangent(at[j], tau * std::polar(1.0, -kThirty), at[j + 1]));
  }

  LombardiDrawing out;
  for (int v = 0; v < d.graph.num_vertices(); ++v) out.add_vertex(d.graph.name(v), d.position[v], d.vertex_tag[v]);
  std::vector<int> node{forward ? d.graph.tail(2 * e) : d.graph.head(2 * e)};
  for (int j = 0; j < k; ++j) node.push_back(out.add_vertex(req.stubs[j].junction, at[j + 1], req.stubs[j].junction_tag));
  node.push_back(forward ? d.graph.head(2 * e) : d.graph.tail(2 * e));
  auto chain_tag = [&](int j) { return j < static_cast<int>(req.chain_tags.size()) ? req.chain_tags[j] : -1; };
  int first = -1;
  for (int f = 0; f < d.graph.num_edges(); ++f) {
    if (f == e) {
      first = out.add_arc(node[0], node[1], chain[0], chain_tag(0));
    } else {
      out.add_arc(d.graph.tail(2 * f), d.graph.head(2 * f), d.arc[f], d.edge_tag[f], d.tangency_witness[f]);
    }
  }
  for (int j = 1; j <= k; ++j) out.add_arc(node[j], node[j + 1], chain[j], chain_tag(j));

  // stubs along the left normal of the inset, shortened on collision
  for (int j = 1; j <= k; ++j) {
    const Complex dir = inset_tangent[j] * Complex(0, 1);
    double len = 0.3 * std::min(std::abs(at[j] - at[j - 1]), std::abs(at[j + 1] - at[j]));
    int tries = 0;
    while (segment_hits(out, at[j], at[j] + len * dir, {}) && ++tries < 30) len *= 0.5;
    if (tries >= 30) throw InternalError("bridge stub collides at every length");
    const Complex leaf = at[j] + len * dir;
    const auto& s = req.stubs[j - 1];
    const int lv = out.add_vertex(s.leaf, leaf, s.leaf_tag);
    out.add_arc(node[j], lv, arc_through(at[j], leaf, (at[j] + leaf) / 2.0), s.stub_tag);
  }
  adopt_geometric_rotation(out);
  if (d.graph.outer_dart) {
    const int od = *d.graph.outer_dart;
    if (PlanarEmbeddedGraph::edge_of(od) != e) {
      out.graph.outer_dart = od;
    } else {
      out.graph.outer_dart = od == req.side_dart ? 2 * first : 2 * first + 1;
    }
  }
  return out;
}

LombardiDrawing attach_bridge_stubs(const LombardiDrawing& d, int e, int side_dart, int k) {
  StubRequest req;
  req.edge = e;
  req.side_dart = side_dart;
  const int nv = d.graph.num_vertices(), ne = d.graph.num_edges();
  for (int j = 0; j < k; ++j) {
    req.stubs.push_back({"j" + std::to_string(nv + j), nv + j, "s" + std::to_string(nv + j), nv + k + j, ne + k + j});
  }
  req.chain_tags.push_back(d.edge_tag[e]);
  for (int j = 1; j <= k; ++j) req.chain_tags.push_back(ne + j - 1);
  return attach_bridge_stubs(d, req);
}

LombardiDrawing glue_s_node(const std::vector<GlueComponent>& components, const SpqrNode& cycle, double eps) {
  const PlanarEmbeddedGraph& sk = cycle.skeleton;
  // walk the cycle starting on a virtual edge
  int start = -1;
  for (int se = 0; se < sk.num_edges() && start < 0; ++se) {
    if (cycle.edges[se].is_virtual) start = se;
  }
  if (start < 0) throw DegenerateInput("S node without virtual edges");
  struct Step {
    int edge;
    int from, to;  // skeleton vertices
  };
  std::vector<Step> steps;
  int dart = 2 * start;
  do {
    steps.push_back({PlanarEmbeddedGraph::edge_of(dart), sk.tail(dart), sk.head(dart)});
    const int v = sk.head(dart);
    if (sk.degree(v) != 2) throw DegenerateInput("S skeleton is not a cycle");
    const auto& rot = sk.rotation(v);
    dart = rot[0] == PlanarEmbeddedGraph::twin(dart) ? rot[1] : rot[0];
  } while (dart != 2 * start);
  if (static_cast<int>(steps.size()) != sk.num_edges()) throw DegenerateInput("S skeleton is not a single cycle");
  for (size_t i = 0; i < steps.size(); ++i) {
    if (cycle.edges[steps[i].edge].is_virtual == cycle.edges[steps[(i + 1) % steps.size()].edge].is_virtual)
      throw DegenerateInput("S cycle does not alternate virtual and real edges");
  }
  const int k = static_cast<int>(steps.size()) / 2;
  if (k < 2 || static_cast<int>(components.size()) != k)
    throw DegenerateInput("an S node glues at least two components, one per virtual edge");

  // match components to virtual steps; record the dart x -> y in each
  struct Placed {
    const GlueComponent* comp;
    int x, y;     // drawing vertices
    int dart;     // virtual dart from x to y
    int real;     // skeleton edge following y
  };
  std::vector<Placed> placed;
  for (size_t i = 0; i < steps.size(); i += 2) {
    const int link = cycle.edges[steps[i].edge].id;
    const GlueComponent* found = nullptr;
    for (const auto& c : components) {
      if (c.drawing.edge_tag[c.virtual_edge] == -1 - link) found = &c;
    }
    if (!found) throw DegenerateInput("no component for a virtual edge of the S node");
    const LombardiDrawing& dr = found->drawing;
    const int x = dr.find_vertex_tag(cycle.vertex_map[steps[i].from]);
    const int y = dr.find_vertex_tag(cycle.vertex_map[steps[i].to]);
    const int ve = found->virtual_edge;
    int dx;
    if (dr.graph.tail(2 * ve) == x && dr.graph.head(2 * ve) == y) {
      dx = 2 * ve;
    } else if (dr.graph.tail(2 * ve) == y && dr.graph.head(2 * ve) == x) {
      dx = 2 * ve + 1;
    } else {
      throw DegenerateInput("virtual arc endpoints do not match the S skeleton");
    }
    placed.push_back({found, x, y, dx, steps[i + 1].edge});
  }

  // sectors proportional to edge counts, 10% of the circle left for gaps
  std::vector<double> weight;
  double total = 0.0;
  for (const auto& p : placed) {
    weight.push_back(std::max(1, p.comp->drawing.graph.num_edges() - 1));
    total += weight.back();
  }
  const double gap = 0.1 * kTwoPi / k;
  std::vector<double> alpha(k), beta(k);
  double angle = 0.0;
  for (int i = 0; i < k; ++i) {
    alpha[i] = angle;
    beta[i] = angle + 0.9 * kTwoPi * weight[i] / total;
    angle = beta[i] + gap;
  }

  for (double eps_try = eps; eps_try > eps * 1e-3; eps_try *= 0.5) {
    std::vector<LombardiDrawing> moved;
    bool fits = true;
    for (int i = 0; i < k && fits; ++i) {
      const Placed& pl = placed[i];
      const int ve = PlanarEmbeddedGraph::edge_of(pl.dart);
      LombardiDrawing ex = transformed(pl.comp->drawing, expansion_map(pl.comp->drawing, ve, eps_try, pl.dart));
      const Circle s = ex.arc[ve].support.as_circle();
      const double tx = std::arg(ex.position[pl.x].z() - s.center);
      double span = std::arg(ex.position[pl.y].z() - s.center) - tx;
      while (span < 0) span += kTwoPi;  // gap runs counter-clockwise from x to y
      const double mid = (alpha[i] + beta[i]) / 2;
      const Complex rot = std::polar(1.0, mid - (tx + span / 2));
      ex = transformed(ex, similarity(rot / s.radius, -rot * s.center / s.radius));
      // everything but the virtual arc must stay inside the sector's wedge
      auto inside = [&](Complex z) {
        double t = std::arg(z) - alpha[i];
        while (t < 0) t += kTwoPi;
        return std::abs(z) > 1e-12 && t < beta[i] - alpha[i];
      };
      for (int v = 0; v < ex.graph.num_vertices() && fits; ++v) fits = ex.position[v].is_finite() && inside(ex.position[v].z());
      for (int e = 0; e < ex.graph.num_edges() && fits; ++e) {
        if (e == ve) continue;
        if (ex.arc[e].p.is_infinite() || ex.arc[e].q.is_infinite()) fits = false;
        for (int j = 1; j < 16 && fits; ++j) fits = inside(arc_point(ex.arc[e], j / 16.0));
      }
      moved.push_back(std::move(ex));
    }
    if (!fits) continue;

    LombardiDrawing out;
    std::vector<Copy> copies;
    for (int i = 0; i < k; ++i) copies.push_back(copy_into(out, moved[i], {}, {PlanarEmbeddedGraph::edge_of(placed[i].dart)}));
    int outer = -1;
    for (int i = 0; i < k; ++i) {
      const int j = (i + 1) % k;
      const Complex from = moved[i].position[placed[i].y].z();
      const Complex to = moved[j].position[placed[j].x].z();
      double t0 = std::arg(from), t1 = std::arg(to);
      while (t1 < t0) t1 += kTwoPi;
      const Complex w = std::polar(1.0, (t0 + t1) / 2);
      const CircularArc a{GeneralizedCircle(Circle{0.0, 1.0}), from, to, w};
      const int r = out.add_arc(copies[i].vertex[placed[i].y], copies[j].vertex[placed[j].x], a,
                                cycle.edges[placed[i].real].id);
      outer = 2 * r + 1;  // the clockwise dart has the unbounded face on its left
    }
    adopt_geometric_rotation(out);
    out.graph.outer_dart = outer;
    if (verify(out).pass) return out;
  }
  throw InternalError("S node components do not fit their sectors");
}

namespace {

// Distance from z to a bounded arc.
double distance_to_arc(const CircularArc& a, Complex z) {
  const Complex p = a.p.z(), q = a.q.z();
  double best = std::min(std::abs(z - p), std::abs(z - q));
  if (a.support.is_line()) {
    const double t = std::real((z - p) * std::conj(q - p)) / std::norm(q - p);
    if (t > 0.0 && t < 1.0) best = std::min(best, std::abs(z - (p + t * (q - p))));
    return best;
  }
  const Circle& c = a.support.as_circle();
  if (z != c.center) {
    const Complex foot = c.center + c.radius * (z - c.center) / std::abs(z - c.center);
    if (on_arc(a, foot)) best = std::min(best, std::abs(std::abs(z - c.center) - c.radius));
  }
  return best;
}

// One side of a bridge: the arc tagged with the bridge, its degree-1 end
// and the vertex it hangs from.
struct BridgeEnd {
  int edge, leaf, attach;
  Complex dir;  // stub tangent leaving the attachment
};

BridgeEnd bridge_end(const LombardiDrawing& d, int tag) {
  BridgeEnd s;
  s.edge = d.find_edge_tag(tag);
  if (s.edge < 0) throw DegenerateInput("drawing has no arc with the bridge tag");
  const int u = d.graph.tail(2 * s.edge), v = d.graph.head(2 * s.edge);
  if (d.graph.degree(v) == 1) {
    s.leaf = v;
    s.attach = u;
  } else if (d.graph.degree(u) == 1) {
    s.leaf = u;
    s.attach = v;
  } else {
    throw DegenerateInput("bridge arc has no degree-1 end");
  }
  s.dir = tangent_vector(d.arc[s.edge], s.attach == u ? ArcEnd::Start : ArcEnd::End);
  return s;
}

// Distance along the ray from the attachment in the stub direction to the
// first point of the drawing other than the stub, or infinity.
double free_run(const LombardiDrawing& d, const BridgeEnd& s) {
  const Complex from = d.position[s.attach].z();
  const auto [lo, hi] = bounding_box(d);
  const double reach = 2.0 * (std::abs(hi - lo) + std::abs(from - lo)) + 1.0;
  const CircularArc ray = arc_through(from, from + reach * s.dir, from + 0.5 * reach * s.dir);
  const double tol = 1e-12 * reach;
  double run = std::numeric_limits<double>::infinity();
  for (int e = 0; e < d.graph.num_edges(); ++e) {
    if (e == s.edge) continue;
    const ArcIntersection x = arc_intersections(ray, d.arc[e]);
    if (x.overlap) return 0.0;
    for (const auto& p : x.points) {
      const double t = std::abs(p.z() - from);
      if (t > tol) run = std::min(run, t);
    }
  }
  for (int v = 0; v < d.graph.num_vertices(); ++v) {
    if (v == s.leaf || v == s.attach) continue;
    const double t = std::abs(d.position[v].z() - from);
    if (on_arc(ray, d.position[v], tol) && distance_to_arc(ray, d.position[v].z()) <= tol) run = std::min(run, t);
  }
  return run;
}

}  // namespace

LombardiDrawing glue_bridge(const LombardiDrawing& host, const LombardiDrawing& guest, int bridge_tag) {
  if (&host == &guest) throw DegenerateInput("a bridge joins two distinct drawings");
  const BridgeEnd h = bridge_end(host, bridge_tag);
  BridgeEnd g = bridge_end(guest, bridge_tag);
  for (int v = 0; v < host.graph.num_vertices(); ++v) {
    if (v == h.leaf) continue;
    const int w = guest.find_vertex_tag(host.vertex_tag[v]);
    if (w >= 0 && w != g.leaf) throw DegenerateInput("bridge endpoints must come from distinct block drawings");
  }

  // Guest: when its stub ray is blocked, invert at the middle of the free
  // run so the run becomes an unbounded ray. The middle rather than the
  // leaf keeps the inversion as mild as the room allows.
  LombardiDrawing gd = guest;
  const double grun = free_run(guest, g);
  if (std::isfinite(grun)) {
    const Complex c = guest.position[g.attach].z() + 0.5 * grun * g.dir;
    gd = transformed(guest, MobiusMap::make(c, 1.0 - c * c, 1.0, -c));
    g.dir = -std::conj(g.dir);
  }
  const Complex gbase = gd.position[g.attach].z();
  double gsize = 0.0;
  for (int v = 0; v < gd.graph.num_vertices(); ++v) {
    if (v != g.leaf) gsize = std::max(gsize, std::abs(gd.position[v].z() - gbase));
  }
  for (int e = 0; e < gd.graph.num_edges(); ++e) {
    const CircularArc& a = gd.arc[e];
    if (e == g.edge || a.support.is_line()) continue;
    const Circle& c = a.support.as_circle();
    if (c.center == gbase) continue;
    const Complex far = c.center + c.radius * (c.center - gbase) / std::abs(c.center - gbase);
    if (on_arc(a, far)) gsize = std::max(gsize, std::abs(far - gbase));
  }

  // Host: stays put. The guest goes halfway along the free part of the
  // host's stub ray, shrunk into the disk there that clears the host.
  const Complex hbase = host.position[h.attach].z();
  const double hrun = free_run(host, h);
  const double stub_len = std::abs(host.position[h.leaf].z() - hbase);
  const double reach = std::isfinite(hrun) ? 0.5 * hrun : 2.0 * stub_len;
  const Complex at = hbase + reach * h.dir;
  double room = reach;
  for (int e = 0; e < host.graph.num_edges(); ++e) {
    if (e != h.edge) room = std::min(room, distance_to_arc(host.arc[e], at));
  }
  for (int v = 0; v < host.graph.num_vertices(); ++v) {
    if (v != h.leaf) room = std::min(room, std::abs(host.position[v].z() - at));
  }
  const double scale = gsize > 0.0 ? 0.5 * room / gsize : 1.0;
  const Complex rot = -h.dir / g.dir * scale;
  gd = transformed(gd, similarity(rot, at - rot * gbase));

  LombardiDrawing out;
  const Copy ca = copy_into(out, host, {h.leaf}, {h.edge});
  const Copy cb = copy_into(out, gd, {g.leaf}, {g.edge});
  out.add_arc(ca.vertex[h.attach], cb.vertex[g.attach], arc_through(hbase, at, (hbase + at) / 2.0), bridge_tag);
  adopt_geometric_rotation(out);
  return out;
}

}  // namespace lombardi
