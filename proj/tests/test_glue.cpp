#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "lombardi/drawing.hpp"
#include "support.hpp"

using namespace lombardi;
using lombardi::test::read_fixture;

namespace {

LombardiDrawing k4() { return draw_3connected(parse_graph(read_fixture("k4"))); }

double angle_between(Complex a, Complex b) { return std::abs(std::arg(a / b)); }

// Skeleton drawing of an R node tagged the way glue_s_node expects.
LombardiDrawing r_drawing(const SpqrNode& n) {
  LombardiDrawing d = draw_3connected(n.skeleton);
  for (int v = 0; v < n.skeleton.num_vertices(); ++v) d.vertex_tag[v] = n.vertex_map[v];
  for (int e = 0; e < n.skeleton.num_edges(); ++e) d.edge_tag[e] = n.edges[e].is_virtual ? -1 - n.edges[e].id : n.edges[e].id;
  return d;
}

struct SGlue {
  SpqrTree tree;
  int s = -1;
  std::vector<GlueComponent> comps;
};

// The S node of two_k4e with its two R neighbours drawn.
SGlue two_k4e_glue() {
  SGlue out;
  out.tree = spqr(parse_graph(read_fixture("two_k4e")));
  for (int i = 0; i < static_cast<int>(out.tree.nodes.size()); ++i) {
    if (out.tree.nodes[i].type == SpqrType::S) out.s = i;
  }
  REQUIRE(out.s >= 0);
  for (int l = 0; l < static_cast<int>(out.tree.links.size()); ++l) {
    const SpqrLink& link = out.tree.links[l];
    if (link.node[0] != out.s && link.node[1] != out.s) continue;
    const int other = link.node[0] == out.s ? link.node[1] : link.node[0];
    LombardiDrawing d = r_drawing(out.tree.nodes[other]);
    const int ve = d.find_edge_tag(-1 - l);
    out.comps.push_back({d, ve});
  }
  return out;
}

}  // namespace

TEST_CASE("one stub on a K4 edge") {
  const LombardiDrawing d = k4();
  for (int e = 0; e < d.graph.num_edges(); ++e) {
    for (int side : {2 * e, 2 * e + 1}) {
      CAPTURE(side);
      const LombardiDrawing s = attach_bridge_stubs(d, e, side, 1);
      CHECK(s.graph.num_vertices() == 6);
      CHECK(s.graph.num_edges() == 8);
      const VerificationReport r = verify(s);
      CHECK(r.pass);
      CHECK(r.rotation_mismatches == 0);
      const int junction = s.find_vertex_tag(4), leaf = s.find_vertex_tag(5);
      CHECK(s.graph.degree(junction) == 3);
      CHECK(s.graph.degree(leaf) == 1);
      CHECK(s.arc[s.find_edge_tag(7)].support.is_line());
      // the original vertices keep their places and their arc directions
      for (int v = 0; v < 4; ++v) CHECK(s.position[v].z() == d.position[v].z());
    }
  }
}

TEST_CASE("several stubs on one edge") {
  const LombardiDrawing d = draw_3connected(parse_graph(read_fixture("cube")));
  for (int k = 2; k <= 4; ++k) {
    const LombardiDrawing s = attach_bridge_stubs(d, 0, 1, k);
    CHECK(s.graph.num_vertices() == d.graph.num_vertices() + 2 * k);
    CHECK(s.graph.num_edges() == d.graph.num_edges() + 2 * k);
    CHECK(verify(s).pass);
  }
}

TEST_CASE("zero stubs leave the drawing alone") {
  const LombardiDrawing d = k4();
  const LombardiDrawing s = attach_bridge_stubs(d, 2, 4, 0);
  CHECK(s.graph.num_vertices() == d.graph.num_vertices());
  CHECK(s.graph.num_edges() == d.graph.num_edges());
  for (int v = 0; v < 4; ++v) CHECK(s.position[v].z() == d.position[v].z());
}

TEST_CASE("inset arcs of adjacent edges in a face meet at 60 degrees") {
  const LombardiDrawing d = k4();
  const FaceSet fs = faces(d.graph);
  int checked = 0;
  for (const auto& walk : fs.walks) {
    for (size_t i = 0; i < walk.size(); ++i) {
      const int d1 = walk[i], d2 = walk[(i + 1) % walk.size()];
      // darts with the face on their left; d1 ends where d2 starts
      const CircularArc a1 = d1 % 2 == 0 ? d.arc[d1 / 2] : reversed(d.arc[d1 / 2]);
      const CircularArc a2 = d2 % 2 == 0 ? d.arc[d2 / 2] : reversed(d.arc[d2 / 2]);
      const Complex turn = std::polar(1.0, kPi / 6);
      const CircularArc in1 = arc_from_tangent(a1.p.z(), tangent_vector(a1, ArcEnd::Start) * turn, a1.q.z());
      const CircularArc in2 = arc_from_tangent(a2.p.z(), tangent_vector(a2, ArcEnd::Start) * turn, a2.q.z());
      CHECK(angle_between(tangent_vector(in1, ArcEnd::End), tangent_vector(in2, ArcEnd::Start)) ==
            doctest::Approx(kPi / 3).epsilon(1e-9));
      // the stub junction sits on that inset
      const LombardiDrawing s = attach_bridge_stubs(d, d1 / 2, d1, 1);
      const Complex j = s.position[s.find_vertex_tag(4)].z();
      CHECK(std::abs(j - arc_point(in1, 0.5)) < 1e-9);
      ++checked;
    }
  }
  CHECK(checked == 12);
}

TEST_CASE("stub request validation") {
  const LombardiDrawing d = k4();
  CHECK_THROWS_AS(attach_bridge_stubs(d, 0, 5, 1), DegenerateInput);
}

TEST_CASE("S node gluing on two copies of K4 minus an edge") {
  SGlue s = two_k4e_glue();
  REQUIRE(s.comps.size() == 2);
  const LombardiDrawing d = glue_s_node(s.comps, s.tree.nodes[s.s]);
  const VerificationReport r = verify(d);
  CHECK(r.pass);
  CHECK(r.rotation_mismatches == 0);
  CHECK(d.graph.num_vertices() == 8);
  CHECK(d.graph.num_edges() == 12);
  // the two real cycle edges lie on the common unit circle
  int on_circle = 0;
  for (const auto& e : s.tree.nodes[s.s].edges) {
    if (e.is_virtual) continue;
    const CircularArc& a = d.arc[d.find_edge_tag(e.id)];
    REQUIRE(a.support.is_circle());
    CHECK(std::abs(a.support.as_circle().center) < 1e-12);
    CHECK(a.support.as_circle().radius == doctest::Approx(1.0));
    ++on_circle;
  }
  CHECK(on_circle == 2);
  for (int e = 0; e < d.graph.num_edges(); ++e) CHECK(d.edge_tag[e] >= 0);
}

TEST_CASE("S node gluing of identical components is cyclically symmetric") {
  SGlue s = two_k4e_glue();
  // the second component: the first one relabelled onto the other side
  const SpqrNode& sn = s.tree.nodes[s.s];
  const GlueComponent& a = s.comps[0];
  const int link_a = -1 - a.drawing.edge_tag[a.virtual_edge];
  const int link_b = -1 - s.comps[1].drawing.edge_tag[s.comps[1].virtual_edge];
  // positions of the skeleton's virtual edges in cycle order
  std::vector<int> cyc;  // skeleton vertices in walk order
  int dart = 0;
  do {
    cyc.push_back(sn.skeleton.tail(dart));
    const int v = sn.skeleton.head(dart);
    const auto& rot = sn.skeleton.rotation(v);
    dart = rot[0] == PlanarEmbeddedGraph::twin(dart) ? rot[1] : rot[0];
  } while (dart != 0);
  REQUIRE(cyc.size() == 4);
  auto virt_ends = [&](int link) {
    for (int e = 0; e < sn.skeleton.num_edges(); ++e) {
      if (sn.edges[e].is_virtual && sn.edges[e].id == link)
        return std::make_pair(sn.vertex_map[sn.skeleton.tail(2 * e)], sn.vertex_map[sn.skeleton.head(2 * e)]);
    }
    FAIL("missing link");
    return std::make_pair(-1, -1);
  };
  // map the a-side tags onto the b-side: the virtual edge ends in cycle
  // order go to the b virtual edge ends in cycle order
  const auto [ax, ay] = virt_ends(link_a);
  const auto [bx, by] = virt_ends(link_b);
  auto order = [&](int u, int v) {
    // u, v in walk direction
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (sn.vertex_map[cyc[i]] == u && sn.vertex_map[cyc[(i + 1) % cyc.size()]] == v) return std::make_pair(u, v);
    }
    return std::make_pair(v, u);
  };
  const auto [a1, a2] = order(ax, ay);
  const auto [b1, b2] = order(bx, by);
  LombardiDrawing b = a.drawing;
  for (auto& t : b.vertex_tag) t = t == a1 ? b1 : t == a2 ? b2 : 1000 + t;
  for (auto& t : b.edge_tag) t = t == -1 - link_a ? -1 - link_b : 1000 + t;
  // names must stay unique after gluing
  PlanarEmbeddedGraph gg;
  for (int v = 0; v < b.graph.num_vertices(); ++v) gg.add_vertex("b" + b.graph.name(v));
  for (int e = 0; e < b.graph.num_edges(); ++e) gg.add_edge(b.graph.tail(2 * e), b.graph.head(2 * e));
  for (int v = 0; v < b.graph.num_vertices(); ++v) gg.set_rotation(v, b.graph.rotation(v));
  LombardiDrawing renamed = b;
  renamed.graph = gg;
  const std::vector<GlueComponent> comps{a, {renamed, a.virtual_edge}};
  const LombardiDrawing d = glue_s_node(comps, sn);
  CHECK(verify(d).pass);
  // rotating by pi swaps the two copies
  for (int v = 0; v < d.graph.num_vertices(); ++v) {
    const Complex z = -d.position[v].z();
    double best = 1e300;
    for (int w = 0; w < d.graph.num_vertices(); ++w) best = std::min(best, std::abs(d.position[w].z() - z));
    CHECK(best < 1e-6);
  }
}

TEST_CASE("S node gluing needs one component per virtual edge") {
  SGlue s = two_k4e_glue();
  const std::vector<GlueComponent> one{s.comps[0]};
  CHECK_THROWS_AS(glue_s_node(one, s.tree.nodes[s.s]), DegenerateInput);
}

namespace {

// A claw whose vertex tags start at `base` and whose first arc carries `bridge`.
LombardiDrawing tagged_claw(int base, int bridge, const std::string& prefix) {
  const LombardiDrawing c = claw_drawing();
  LombardiDrawing d;
  for (int v = 0; v < 4; ++v) d.add_vertex(prefix + c.graph.name(v), c.position[v], base + v);
  for (int e = 0; e < 3; ++e)
    d.add_arc(c.graph.tail(2 * e), c.graph.head(2 * e), c.arc[e], e == 0 ? bridge : base + 10 + e);
  adopt_geometric_rotation(d);
  return d;
}

}  // namespace

TEST_CASE("two claws glued at leaf stubs") {
  const LombardiDrawing a = tagged_claw(0, 99, "a"), b = tagged_claw(100, 99, "b");
  const LombardiDrawing d = glue_bridge(a, b, 99);
  const VerificationReport r = verify(d);
  CHECK(r.pass);
  CHECK(r.max_angle_residual < 1e-9);
  CHECK(d.graph.num_vertices() == 6);
  CHECK(d.graph.num_edges() == 5);
  const int bridge = d.find_edge_tag(99);
  REQUIRE(bridge >= 0);
  CHECK(d.arc[bridge].support.is_line());
  // the host is not moved
  for (int v = 0; v < 4; ++v) {
    const int w = d.find_vertex_tag(v);
    if (w >= 0) CHECK(d.position[w].z() == a.position[v].z());
  }
}

TEST_CASE("two K4 blocks with stubs glued along a bridge") {
  StubRequest req;
  req.edge = 0;
  req.side_dart = 0;
  req.stubs.push_back({"j", 4, "l", 5, 99});
  req.chain_tags = {0, 6};
  const LombardiDrawing a = attach_bridge_stubs(k4(), req);
  LombardiDrawing b = a;
  for (auto& t : b.vertex_tag) t += 100;
  for (auto& t : b.edge_tag) t = t == 99 ? 99 : t + 100;
  PlanarEmbeddedGraph gb;
  for (int v = 0; v < b.graph.num_vertices(); ++v) gb.add_vertex("b" + b.graph.name(v));
  for (int e = 0; e < b.graph.num_edges(); ++e) gb.add_edge(b.graph.tail(2 * e), b.graph.head(2 * e));
  for (int v = 0; v < b.graph.num_vertices(); ++v) gb.set_rotation(v, b.graph.rotation(v));
  b.graph = gb;
  const LombardiDrawing d = glue_bridge(a, b, 99);
  const VerificationReport r = verify(d);
  CHECK(r.pass);
  CHECK(r.rotation_mismatches == 0);
  CHECK(d.graph.num_vertices() == 10);
  CHECK(d.graph.num_edges() == 15);
  int bridges = 0;
  for (int e = 0; e < d.graph.num_edges(); ++e) bridges += d.edge_tag[e] == 99;
  CHECK(bridges == 1);
  CHECK(d.arc[d.find_edge_tag(99)].support.is_line());
}

TEST_CASE("gluing a drawing to itself is rejected") {
  const LombardiDrawing a = tagged_claw(0, 99, "a");
  CHECK_THROWS_AS(glue_bridge(a, a, 99), DegenerateInput);
  // a copy with the same vertex tags is the same block
  const LombardiDrawing copy = a;
  CHECK_THROWS_AS(glue_bridge(a, copy, 99), DegenerateInput);
}

TEST_CASE("glue_bridge needs the bridge arc on both sides") {
  const LombardiDrawing a = tagged_claw(0, 99, "a"), b = tagged_claw(100, 98, "b");
  CHECK_THROWS_AS(glue_bridge(a, b, 99), DegenerateInput);
}
