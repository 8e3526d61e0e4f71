#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "lombardi/drawing.hpp"

namespace lombardi {

namespace {

// Tags above this mark chain arcs that still await their degree-2 vertices.
constexpr int kPendingTag = 1 << 28;
// Tags marking the original arcs of a block drawing while stubs go in.
constexpr int kEdgeMark = 1 << 29;

int placeholder_tag(int bridge) { return -1 - bridge; }

// Tagged R or P skeleton drawing: vertices carry block ids, real edges
// their block edge ids and virtual edges -1 - link.
LombardiDrawing skeleton_drawing(const SpqrNode& n, const DrawOptions& opt) {
  const PlanarEmbeddedGraph& sk = n.skeleton;
  auto edge_tag = [&](int se) { return n.edges[se].is_virtual ? -1 - n.edges[se].id : n.edges[se].id; };
  LombardiDrawing d;
  if (n.type == SpqrType::R) {
    DrawOptions o = opt;
    o.outer_face.reset();
    d = draw_3connected(sk, o);
  } else {
    // bond: match skeleton edges to the canonical arcs by clockwise order
    const LombardiDrawing p = p_node_drawing();
    std::vector<int> assign(3);
    const auto& rs = sk.rotation(0);
    const auto& rp = p.graph.rotation(0);
    for (int i = 0; i < 3; ++i) assign[PlanarEmbeddedGraph::edge_of(rs[i])] = PlanarEmbeddedGraph::edge_of(rp[i]);
    d.add_vertex(sk.name(0), p.position[0], 0);
    d.add_vertex(sk.name(1), p.position[1], 1);
    for (int se = 0; se < 3; ++se) {
      const CircularArc& a = p.arc[assign[se]];
      d.add_arc(sk.tail(2 * se), sk.head(2 * se), sk.tail(2 * se) == 0 ? a : reversed(a), 0);
    }
    adopt_geometric_rotation(d);
  }
  for (int v = 0; v < sk.num_vertices(); ++v) d.vertex_tag[v] = n.vertex_map[v];
  for (int se = 0; se < sk.num_edges(); ++se) d.edge_tag[se] = edge_tag(se);
  return d;
}

// Drawing of the subtree hanging below node `id` (an R or P node), which
// keeps the virtual arc of `parent_link`.
LombardiDrawing draw_subtree(const SpqrTree& t, int id, int parent_link, const DrawOptions& opt) {
  LombardiDrawing d = skeleton_drawing(t.nodes[id], opt);
  for (int l = 0; l < static_cast<int>(t.links.size()); ++l) {
    const SpqrLink& link = t.links[l];
    if (l == parent_link || (link.node[0] != id && link.node[1] != id)) continue;
    const int s = link.node[0] == id ? link.node[1] : link.node[0];
    std::vector<GlueComponent> comps;
    comps.push_back({d, d.find_edge_tag(-1 - l)});
    for (int l2 = 0; l2 < static_cast<int>(t.links.size()); ++l2) {
      const SpqrLink& other = t.links[l2];
      if (l2 == l || (other.node[0] != s && other.node[1] != s)) continue;
      const int child = other.node[0] == s ? other.node[1] : other.node[0];
      LombardiDrawing c = draw_subtree(t, child, l2, opt);
      const int ve = c.find_edge_tag(-1 - l2);
      comps.push_back({std::move(c), ve});
    }
    d = glue_s_node(comps, t.nodes[s], opt.expand_eps);
  }
  return d;
}

// Drawing of a cubic 2-connected multigraph with tags equal to its ids.
LombardiDrawing draw_cubic_block(const PlanarEmbeddedGraph& h, const DrawOptions& opt) {
  const SpqrTree t = spqr(h);
  check_cubic_structure(t);
  int root = 0;
  while (t.nodes[root].type == SpqrType::S) ++root;
  LombardiDrawing d = draw_subtree(t, root, -1, opt);
  require_verified(d, "block drawing", opt.angle_tol);
  return d;
}

struct PieceBuilder {
  const PlanarEmbeddedGraph& g;
  const DrawOptions& opt;
  std::vector<char> is_bridge;

  bool is_leaf(int v) const { return g.degree(v) == 1; }

  // Bridges at v, as (edge, other end).
  std::vector<std::pair<int, int>> bridges_at(int v) const {
    std::vector<std::pair<int, int>> out;
    for (int dart : g.rotation(v)) {
      const int e = PlanarEmbeddedGraph::edge_of(dart);
      if (is_bridge[e]) out.push_back({e, g.head(dart)});
    }
    return out;
  }

  // Adds the far end of bridge e attached at v: the real leaf when the
  // bridge ends in one, otherwise a placeholder.
  std::pair<std::string, int> stub_end(int e, int v) const {
    const int w = g.other(e, v);
    if (is_leaf(w)) return {g.name(w), w};
    return {"~" + std::to_string(e) + "@" + g.name(v), placeholder_tag(e)};
  }

  LombardiDrawing vertex_piece(int v) const {
    const auto br = bridges_at(v);
    LombardiDrawing d;
    const int c = d.add_vertex(g.name(v), Complex(0, 0), v);
    const int k = static_cast<int>(br.size());
    for (int i = 0; i < k; ++i) {
      const Complex at = k == 3 ? std::polar(1.0, kPi / 2 - i * 2 * kPi / 3) : std::polar(1.0, i * kPi);
      const auto [name, tag] = stub_end(br[i].first, v);
      const int leaf = d.add_vertex(name, at, tag);
      d.add_arc(c, leaf, arc_through(Complex(0, 0), at, at / 2.0), br[i].first);
    }
    adopt_geometric_rotation(d);
    return d;
  }

  void add_stub(LombardiDrawing& d, int at_vertex, int bridge, Complex dir, double len) const {
    const Complex p = d.position[at_vertex].z(), q = p + len * dir;
    const auto [name, tag] = stub_end(bridge, d.vertex_tag[at_vertex]);
    const int leaf = d.add_vertex(name, q, tag);
    d.add_arc(at_vertex, leaf, arc_through(p, q, (p + q) / 2.0), bridge);
  }

  // A block that is a plain cycle, given as its vertex and edge sequence.
  LombardiDrawing cycle_piece(const std::vector<int>& vs, const std::vector<int>& es) const {
    const int m = static_cast<int>(vs.size());
    std::vector<int> attach;
    for (int i = 0; i < m; ++i) {
      if (g.degree(vs[i]) == 3) attach.push_back(i);
    }
    const int k = static_cast<int>(attach.size());
    LombardiDrawing d;
    if (m == 1) throw UnsupportedInput("loops have no Lombardi drawing here");
    if (k == 0) {
      for (int i = 0; i < m; ++i) d.add_vertex(g.name(vs[i]), std::polar(1.0, kTwoPi * i / m), vs[i]);
      for (int i = 0; i < m; ++i) {
        const int j = (i + 1) % m;
        d.add_arc(i, j, CircularArc{Circle{0.0, 1.0}, d.position[i], d.position[j],
                                    std::polar(1.0, kTwoPi * (i + 0.5) / m)}, es[i]);
      }
      adopt_geometric_rotation(d);
      return d;
    }
    // anchors: attachment vertices (k >= 2) or the teardrop's corner and
    // its two shoulders (k = 1); the rest subdivide the arcs between them
    std::vector<int> anchor = attach;
    std::vector<Complex> at;
    std::vector<Complex> leave;  // tangent leaving each anchor toward the next
    if (k >= 2) {
      for (int j = 0; j < k; ++j) {
        const double th = kTwoPi * j / k;
        at.push_back(std::polar(1.0, th));
        leave.push_back(std::polar(1.0, th + 2 * kPi / 3));
      }
    } else {
      if (m < 3) throw UnsupportedInput("a cycle with one attachment needs two more vertices to close at 120 degrees");
      const int a = attach[0];
      anchor = {a, (a + 1) % m, (a + m - 1) % m};
      at = {Complex(0, 0), std::polar(1.0, kPi / 4), std::polar(1.0, 3 * kPi / 4)};
      leave = {std::polar(1.0, kPi / 6), std::polar(1.0, kPi / 3), std::polar(1.0, 5 * kPi / 3)};
    }
    const int na = static_cast<int>(anchor.size());
    for (int j = 0; j < na; ++j) d.add_vertex(g.name(vs[anchor[j]]), at[j], vs[anchor[j]]);
    struct Run {
      int edge;
      std::vector<int> inner;      // cycle positions strictly between anchors
    };
    std::vector<Run> runs;
    for (int j = 0; j < na; ++j) {
      const int from = anchor[j], to = anchor[(j + 1) % na];
      const CircularArc a = arc_from_tangent(at[j], leave[j], at[(j + 1) % na]);
      Run r;
      for (int i = (from + 1) % m; i != to; i = (i + 1) % m) r.inner.push_back(i);
      r.edge = d.add_arc(j, (j + 1) % na, a, es[from]);
      runs.push_back(r);
    }
    for (int j = 0; j < k; ++j) {
      const Complex dir = k >= 2 ? std::polar(1.0, kTwoPi * j / k) : Complex(0, -1);
      const auto br = bridges_at(vs[attach[j]]);
      add_stub(d, j, br[0].first, dir, 0.3 * std::min(1.0, std::abs(at[1 % na] - at[0])));
    }
    for (const Run& r : runs) {
      if (r.inner.empty()) continue;
      const int e = d.find_edge_tag(es[r.inner.front() == 0 ? m - 1 : r.inner.front() - 1]);
      std::vector<std::string> names;
      std::vector<int> tags, etags;
      for (int i : r.inner) {
        names.push_back(g.name(vs[i]));
        tags.push_back(vs[i]);
        etags.push_back(es[i]);
      }
      d = subdivide_arc(d, e, names, tags, etags);
    }
    adopt_geometric_rotation(d);
    return d;
  }

  LombardiDrawing block_piece(const std::vector<int>& block_edges) const {
    const Subgraph sub = edge_subgraph(g, block_edges);
    const PlanarEmbeddedGraph& b = sub.graph;
    bool cycle = true;
    for (int v = 0; v < b.num_vertices(); ++v) cycle = cycle && b.degree(v) == 2;
    if (cycle) {
      std::vector<int> vs, es;
      int dart = b.rotation(0)[0];
      do {
        vs.push_back(sub.vertex_map[b.tail(dart)]);
        es.push_back(sub.edge_map[PlanarEmbeddedGraph::edge_of(dart)]);
        const int v = b.head(dart);
        const auto& rot = b.rotation(v);
        dart = rot[0] == PlanarEmbeddedGraph::twin(dart) ? rot[1] : rot[0];
      } while (dart != b.rotation(0)[0]);
      // stubs point out of the cycle, where the construction walks it
      // counter-clockwise: reverse if the input says the other way round
      const int m = static_cast<int>(vs.size());
      for (int i = 0; i < m; ++i) {
        if (g.degree(vs[i]) != 3) continue;
        const int into_next = g.tail(2 * es[i]) == vs[i] ? 2 * es[i] : 2 * es[i] + 1;
        const int br = bridges_at(vs[i])[0].first;
        const int bridge_dart = g.tail(2 * br) == vs[i] ? 2 * br : 2 * br + 1;
        if (m > 2 && g.cw_next(into_next) != bridge_dart) {
          std::vector<int> rv(m), re(m);
          for (int j = 0; j < m; ++j) rv[j] = vs[m - 1 - j];
          for (int j = 0; j + 1 < m; ++j) re[j] = es[m - 2 - j];
          re[m - 1] = es[m - 1];
          vs = rv;
          es = re;
        }
        break;
      }
      return cycle_piece(vs, es);
    }
    const Suppressed sup = suppress_degree_two(b);
    LombardiDrawing d = draw_cubic_block(sup.graph, opt);
    // retag by input ids; remember what each arc still has to carry
    for (auto& tag : d.vertex_tag) tag = sub.vertex_map[sup.vertex_map[tag]];
    struct Segment {
      std::vector<int> inner;  // input vertices, in order from `from`
      std::vector<int> edges;  // input edges, in order from `from`
      int from;
    };
    std::vector<Segment> segments;
    // plan on the unmodified drawing, since attaching stubs renumbers edges
    const FaceSet fs = faces(d.graph);
    std::vector<StubRequest> requests;
    for (int e = 0; e < d.graph.num_edges(); ++e) {
      const int h = d.edge_tag[e];
      // the path of h, oriented along drawing dart 2e
      std::vector<int> path, pedges;
      for (int v : sup.path[h]) path.push_back(sub.vertex_map[v]);
      for (int x : sup.path_edges[h]) pedges.push_back(sub.edge_map[x]);
      if (path.front() != d.vertex_tag[d.graph.tail(2 * e)]) {
        std::reverse(path.begin(), path.end());
        std::reverse(pedges.begin(), pedges.end());
      }
      // host face: the side the input rotation puts the bridges on, by
      // majority; ties go to the face with the smaller index
      int left = 0, right = 0;
      for (size_t i = 1; i + 1 < path.size(); ++i) {
        const int v = path[i];
        if (g.degree(v) != 3) continue;
        auto dart_from = [&](int edge) { return g.tail(2 * edge) == v ? 2 * edge : 2 * edge + 1; };
        const int br = bridges_at(v)[0].first;
        (g.cw_next(dart_from(pedges[i - 1])) == dart_from(br) ? left : right) += 1;
      }
      const bool smaller_left = fs.face_of[2 * e] <= fs.face_of[2 * e + 1];
      const int side = left > right || (left == right && smaller_left) ? 2 * e : 2 * e + 1;
      if (side == 2 * e + 1) {
        std::reverse(path.begin(), path.end());
        std::reverse(pedges.begin(), pedges.end());
      }
      StubRequest req;
      req.edge = e;
      req.side_dart = side;
      Segment cur{{}, {}, path.front()};
      for (size_t i = 1; i < path.size(); ++i) {
        cur.edges.push_back(pedges[i - 1]);
        const int v = path[i];
        if (i + 1 == path.size() || g.degree(v) == 3) {
          req.chain_tags.push_back(kPendingTag + static_cast<int>(segments.size()));
          segments.push_back(cur);
          cur = Segment{{}, {}, v};
          if (i + 1 < path.size()) {
            const int br = bridges_at(v)[0].first;
            const auto [leaf, leaf_tag] = stub_end(br, v);
            req.stubs.push_back({g.name(v), v, leaf, leaf_tag, br});
          }
        } else {
          cur.inner.push_back(v);
        }
      }
      requests.push_back(req);
    }
    for (int e = 0; e < d.graph.num_edges(); ++e) d.edge_tag[e] = kEdgeMark + e;
    for (StubRequest req : requests) {
      const int e = d.find_edge_tag(kEdgeMark + req.edge);
      req.side_dart = 2 * e + (req.side_dart & 1);
      req.edge = e;
      if (req.stubs.empty()) {
        d.edge_tag[e] = req.chain_tags[0];
      } else {
        d = attach_bridge_stubs(d, req);
      }
    }
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
      Segment seg = segments[s];
      const int e = d.find_edge_tag(kPendingTag + s);
      if (d.vertex_tag[d.graph.tail(2 * e)] != seg.from) {
        std::reverse(seg.inner.begin(), seg.inner.end());
        std::reverse(seg.edges.begin(), seg.edges.end());
      }
      d.edge_tag[e] = seg.edges[0];
      if (seg.inner.empty()) continue;
      std::vector<std::string> names;
      for (int v : seg.inner) names.push_back(g.name(v));
      d = subdivide_arc(d, e, names, seg.inner, std::vector<int>(seg.edges.begin() + 1, seg.edges.end()));
    }
    // stubs on every remaining bridge end (only cycle blocks lack them)
    return d;
  }
};

// Places drawings side by side, left to right.
LombardiDrawing side_by_side(const std::vector<LombardiDrawing>& parts) {
  LombardiDrawing out;
  double x = 0.0;
  for (const auto& p : parts) {
    const auto [lo, hi] = bounding_box(p);
    const double w = std::max(hi.real() - lo.real(), 1e-3);
    const LombardiDrawing q = transformed(p, similarity(1.0, Complex(x - lo.real(), -(lo.imag() + hi.imag()) / 2)));
    std::vector<int> map(q.graph.num_vertices());
    for (int v = 0; v < q.graph.num_vertices(); ++v) map[v] = out.add_vertex(q.graph.name(v), q.position[v], q.vertex_tag[v]);
    for (int e = 0; e < q.graph.num_edges(); ++e)
      out.add_arc(map[q.graph.tail(2 * e)], map[q.graph.head(2 * e)], q.arc[e], q.edge_tag[e], q.tangency_witness[e]);
    x += w * 1.25 + 0.25;
  }
  adopt_geometric_rotation(out);
  return out;
}

}  // namespace

LombardiDrawing draw_subcubic(const PlanarEmbeddedGraph& g, const DrawOptions& opt) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 3) throw UnsupportedInput("vertex " + g.name(v) + " has degree above 3");
  }
  faces(g);  // rejects rotations that are not planar
  bool cubic = g.num_vertices() >= 4;
  for (int v = 0; v < g.num_vertices(); ++v) cubic = cubic && g.degree(v) == 3;
  if (cubic && is_triconnected(g)) {
    for (int e = 0; e < g.num_edges(); ++e) {
      if (g.tail(2 * e) == g.head(2 * e)) cubic = false;
    }
    if (cubic) return draw_3connected(g, opt);
  }

  const BlockForest bf = blocks_and_bridges(g);
  PieceBuilder pb{g, opt, std::vector<char>(g.num_edges(), 0)};
  for (int e : bf.bridges) pb.is_bridge[e] = 1;

  // pieces: blocks and bridge-only vertices that are not leaves
  std::vector<LombardiDrawing> piece;
  std::vector<int> piece_of(g.num_vertices(), -1);
  for (const auto& blk : bf.blocks) {
    for (int e : blk) piece_of[g.tail(2 * e)] = piece_of[g.head(2 * e)] = static_cast<int>(piece.size());
    piece.push_back(pb.block_piece(blk));
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (piece_of[v] >= 0 || g.degree(v) == 1) continue;
    piece_of[v] = static_cast<int>(piece.size());
    piece.push_back(pb.vertex_piece(v));
  }
  // a lone edge between two leaves
  for (int e : bf.bridges) {
    const int u = g.tail(2 * e), v = g.head(2 * e);
    if (g.degree(u) == 1 && g.degree(v) == 1) {
      LombardiDrawing d;
      d.add_vertex(g.name(u), Complex(0, 0), u);
      d.add_vertex(g.name(v), Complex(1, 0), v);
      d.add_arc(0, 1, arc_through(Complex(0, 0), Complex(1, 0), Complex(0.5, 0)), e);
      piece_of[u] = piece_of[v] = static_cast<int>(piece.size());
      piece.push_back(d);
    }
  }

  // glue pieces along bridges, one connected component at a time
  std::vector<std::vector<std::pair<int, int>>> adj(piece.size());  // (bridge, piece)
  for (int e : bf.bridges) {
    const int u = g.tail(2 * e), v = g.head(2 * e);
    if (g.degree(u) == 1 || g.degree(v) == 1) continue;
    adj[piece_of[u]].push_back({e, piece_of[v]});
    adj[piece_of[v]].push_back({e, piece_of[u]});
  }
  std::vector<char> done(piece.size(), 0);
  std::vector<LombardiDrawing> parts;
  for (int root = 0; root < static_cast<int>(piece.size()); ++root) {
    if (done[root]) continue;
    LombardiDrawing cur = piece[root];
    std::deque<int> queue{root};
    done[root] = 1;
    while (!queue.empty()) {
      const int p = queue.front();
      queue.pop_front();
      for (const auto& [e, q] : adj[p]) {
        if (done[q]) continue;
        done[q] = 1;
        cur = glue_bridge(cur, piece[q], e);
        queue.push_back(q);
      }
    }
    parts.push_back(std::move(cur));
  }
  const LombardiDrawing all = side_by_side(parts);

  // final drawing numbered like g
  LombardiDrawing out;
  out.graph = g;
  out.position.assign(g.num_vertices(), ExtendedPoint());
  out.arc.assign(g.num_edges(), CircularArc{});
  out.tangency_witness.assign(g.num_edges(), 0);
  std::vector<char> seen(g.num_vertices(), 0);
  for (int v = 0; v < all.graph.num_vertices(); ++v) {
    const int t = all.vertex_tag[v];
    if (t < 0 || t >= g.num_vertices() || seen[t]) throw InternalError("drawing lost track of a vertex");
    seen[t] = 1;
    out.position[t] = all.position[v];
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!seen[v]) {
      if (g.degree(v) != 0) throw InternalError("vertex " + g.name(v) + " was not drawn");
    }
  }
  // isolated vertices: a row below everything else
  double x = 0.0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!seen[v]) out.position[v] = Complex(x += 1.0, -2.0);
  }
  std::vector<char> edge_seen(g.num_edges(), 0);
  for (int e = 0; e < all.graph.num_edges(); ++e) {
    const int t = all.edge_tag[e];
    if (t < 0 || t >= g.num_edges() || edge_seen[t]) throw InternalError("drawing lost track of an edge");
    edge_seen[t] = 1;
    const bool same = all.vertex_tag[all.graph.tail(2 * e)] == g.tail(2 * t);
    out.arc[t] = same ? all.arc[e] : reversed(all.arc[e]);
    out.tangency_witness[t] = all.tangency_witness[e];
  }
  for (int v = 0; v < g.num_vertices(); ++v) out.vertex_tag.push_back(v);
  for (int e = 0; e < g.num_edges(); ++e) out.edge_tag.push_back(e);
  adopt_geometric_rotation(out);
  out.graph.outer_dart.reset();
  require_verified(out, "subcubic drawing", opt.angle_tol);
  return out;
}

}  // namespace lombardi
