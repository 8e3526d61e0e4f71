#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "lombardi/drawing.hpp"
#include "support.hpp"

using namespace lombardi;
using lombardi::test::read_fixture;

namespace {

const char* const kAll[] = {"claw",   "cube",        "cycle6",    "dodecahedron", "double_claw",
                            "frucht", "irregular69", "k4",        "triple_theta", "truncated_icosahedron",
                            "tutte",  "two_blocks_bridge", "two_k4e"};

const char* const kCubic3[] = {"k4", "cube", "dodecahedron", "frucht", "tutte", "truncated_icosahedron"};

int component_count(const PlanarEmbeddedGraph& g) {
  std::vector<int> label;
  return connected_components(g, label);
}

}  // namespace

TEST_CASE("3-connected cubic input takes the packing route unchanged") {
  for (const char* name : kCubic3) {
    CAPTURE(name);
    const PlanarEmbeddedGraph g = parse_graph(read_fixture(name));
    const LombardiDrawing a = draw_subcubic(g), b = draw_3connected(g);
    REQUIRE(a.graph.num_vertices() == b.graph.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) CHECK(std::abs(a.position[v].z() - b.position[v].z()) < 1e-12);
  }
}

TEST_CASE("every subcubic fixture draws and verifies") {
  for (const char* name : kAll) {
    CAPTURE(name);
    const PlanarEmbeddedGraph g = parse_graph(read_fixture(name));
    const LombardiDrawing d = draw_subcubic(g);
    REQUIRE(d.graph.num_vertices() == g.num_vertices());
    REQUIRE(d.graph.num_edges() == g.num_edges());
    for (int v = 0; v < g.num_vertices(); ++v) CHECK(d.graph.name(v) == g.name(v));
    for (int e = 0; e < g.num_edges(); ++e) {
      CHECK(d.graph.tail(2 * e) == g.tail(2 * e));
      CHECK(d.graph.head(2 * e) == g.head(2 * e));
    }
    const VerificationReport r = verify(d, g);
    CHECK(r.pass);
    CHECK(r.max_angle_residual < 1e-6);
    CHECK(r.crossings.empty());
    // irregular69 has stub paths whose junctions disagree on a side
    if (std::string(name) != "irregular69") CHECK(r.rotation_mismatches == 0);
    // a plane drawing has as many faces as Euler's formula allows
    CHECK(faces(d.graph).size() == g.num_edges() - g.num_vertices() + component_count(g) + 1);
  }
}

TEST_CASE("a bare cycle is a unit circle with equal spacing") {
  const LombardiDrawing d = draw_subcubic(parse_graph(read_fixture("cycle6")));
  Complex c{};
  for (int v = 0; v < 6; ++v) c += d.position[v].z() / 6.0;
  for (int v = 0; v < 6; ++v) CHECK(std::abs(d.position[v].z() - c) == doctest::Approx(1.0));
  for (int e = 0; e < 6; ++e) {
    REQUIRE(d.arc[e].support.is_circle());
    CHECK(std::abs(d.arc[e].support.as_circle().center - c) < 1e-12);
    const Complex p = d.arc[e].p.z() - c, q = d.arc[e].q.z() - c;
    CHECK(std::abs(std::arg(q / p)) == doctest::Approx(kPi / 3));
  }
  for (int v = 0; v < 6; ++v) {
    const auto& rot = d.graph.rotation(v);
    REQUIRE(rot.size() == 2);
    auto leaving = [&](int dart) {
      const CircularArc& a = d.arc[dart / 2];
      return dart % 2 == 0 ? tangent_vector(a, ArcEnd::Start) : tangent_vector(reversed(a), ArcEnd::Start);
    };
    CHECK(std::abs(std::arg(leaving(rot[0]) / leaving(rot[1]))) == doctest::Approx(kPi));
  }
}

TEST_CASE("degree above three is rejected") {
  const PlanarEmbeddedGraph g = parse_graph(read_fixture("g18"), 4);
  CHECK_THROWS_AS(draw_subcubic(g), UnsupportedInput);
}

TEST_CASE("a cycle with one pendant becomes a teardrop") {
  const PlanarEmbeddedGraph g = parse_graph("a b c p\nb c a\nc a b\np a\n");
  const LombardiDrawing d = draw_subcubic(g);
  const VerificationReport r = verify(d, g);
  CHECK(r.pass);
  CHECK(r.rotation_mismatches == 0);
}

TEST_CASE("a two-cycle with one attachment has no drawing") {
  const PlanarEmbeddedGraph g = parse_graph("a b b p\nb a a\np a\n");
  CHECK_THROWS_AS(draw_subcubic(g), UnsupportedInput);
}

TEST_CASE("disconnected input and isolated vertices") {
  const std::string text = read_fixture("k4") + "\nx y z\ny z x\nz x y\nlone\n";
  const PlanarEmbeddedGraph g = parse_graph(text);
  REQUIRE(component_count(g) == 3);
  const LombardiDrawing d = draw_subcubic(g);
  const VerificationReport r = verify(d, g);
  CHECK(r.pass);
  CHECK(r.rotation_mismatches == 0);
  CHECK(d.graph.degree(*d.graph.find("lone")) == 0);
  CHECK(r.crossings.empty());
  CHECK(r.coincident.empty());
}

TEST_CASE("drawing is deterministic") {
  for (const char* name : {"two_blocks_bridge", "double_claw", "triple_theta"}) {
    CAPTURE(name);
    const PlanarEmbeddedGraph g = parse_graph(read_fixture(name));
    const LombardiDrawing a = draw_subcubic(g), b = draw_subcubic(g);
    for (int v = 0; v < g.num_vertices(); ++v) CHECK(a.position[v].z() == b.position[v].z());
  }
}
