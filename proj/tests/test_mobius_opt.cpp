#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "lombardi/error.hpp"
#include "lombardi/mobius_opt.hpp"
#include "lombardi/packing.hpp"
#include "support.hpp"

using namespace lombardi;
using lombardi::test::read_fixture;

namespace {

struct DualPacking {
  PlanarEmbeddedGraph t;
  std::vector<Circle> circles;
  int outer = -1;  // dual vertex of the primal outer face
};

// Tangency packing of the dual with a triangle at the outer face pinned.
DualPacking pack_dual(const std::string& name) {
  const auto g = parse_graph(read_fixture(name));
  const auto gf = faces(g);
  DualPacking r{dual(g, gf), {}, outer_face(g, gf)};
  const auto tf = faces(r.t);
  int tri = 0;
  while (r.t.tail(tf.walks[tri].front()) != r.outer && r.t.tail(tf.walks[tri][1]) != r.outer &&
         r.t.tail(tf.walks[tri][2]) != r.outer)
    ++tri;
  std::map<int, double> b;
  for (int d : tf.walks[tri]) b[r.t.tail(d)] = 1.0;
  const auto ra = pack_triangulation(r.t, b);
  r.circles = layout_centers(r.t, ra.radius, tf.walks[tri].front(), tri).circles;
  return r;
}

// Tangency residual with the enclosing circle taken as internally tangent,
// and the largest overlap between non-adjacent inner circles.
PackingResiduals normalized_residuals(const PlanarEmbeddedGraph& t, const std::vector<Circle>& cs, int outer) {
  PackingResiduals r;
  auto signed_radius = [&](int v) { return v == outer ? -cs[v].radius : cs[v].radius; };
  std::vector<std::vector<char>> adj(cs.size(), std::vector<char>(cs.size(), 0));
  for (int e = 0; e < t.num_edges(); ++e) {
    const int u = t.tail(2 * e), v = t.head(2 * e);
    adj[u][v] = adj[v][u] = 1;
    const double want = std::abs(signed_radius(u) + signed_radius(v));
    r.tangency = std::max(r.tangency, std::abs(std::abs(cs[u].center - cs[v].center) - want) / want);
  }
  for (int u = 0; u < static_cast<int>(cs.size()); ++u) {
    for (int v = u + 1; v < static_cast<int>(cs.size()); ++v) {
      if (u == outer || v == outer || adj[u][v]) continue;
      r.overlap = std::max(r.overlap, cs[u].radius + cs[v].radius - std::abs(cs[u].center - cs[v].center));
    }
  }
  return r;
}

bool inside_unit(const Circle& c, double eps) { return std::abs(c.center) + c.radius <= 1.0 + eps; }

std::vector<Circle> apply_all(const MobiusMap& m, const std::vector<Circle>& cs) {
  std::vector<Circle> out;
  for (const auto& c : cs) out.push_back(mobius_apply(m, GeneralizedCircle(c)).as_circle());
  return out;
}

}  // namespace

TEST_CASE("normalize_outer") {
  SUBCASE("chosen circle becomes the enclosing unit circle") {
    for (std::string name : {"k4", "cube", "frucht", "dodecahedron"}) {
      CAPTURE(name);
      const auto d = pack_dual(name);
      const auto [p, m] = normalize_outer(d.circles, d.outer);
      const auto img = mobius_apply(m, GeneralizedCircle(d.circles[d.outer])).as_circle();
      CHECK(std::abs(img.center) < 1e-9);
      CHECK(img.radius == doctest::Approx(1.0).epsilon(1e-9));
      for (int i = 0; i < static_cast<int>(p.circles.size()); ++i) {
        if (i != p.outer) CHECK(inside_unit(p.circles[i], 1e-8));
      }
      // tangencies survive the map
      const auto res = normalized_residuals(d.t, p.circles, p.outer);
      CHECK(res.tangency < 1e-7);
      CHECK(res.overlap < 1e-7);
      CHECK_FALSE(m.conjugate);
    }
  }
  SUBCASE("already normalized input is only rescaled") {
    const auto d = pack_dual("cube");
    const auto p = normalize_outer(d.circles, d.outer).first;
    const auto [q, m] = normalize_outer(p.circles, p.outer);
    for (int i = 0; i < static_cast<int>(p.circles.size()); ++i) {
      CHECK(std::abs(q.circles[i].center - p.circles[i].center) < 1e-12);
      CHECK(q.circles[i].radius == doctest::Approx(p.circles[i].radius).epsilon(1e-12));
    }
    // scaled copy of the input normalizes to the same picture
    std::vector<Circle> scaled;
    for (const auto& c : p.circles) scaled.push_back(Circle{3.0 * c.center + Complex(1, -2), 3.0 * c.radius});
    const auto s = normalize_outer(scaled, p.outer).first;
    for (int i = 0; i < static_cast<int>(p.circles.size()); ++i)
      CHECK(std::abs(s.circles[i].center - p.circles[i].center) < 1e-12);
  }
  SUBCASE("bad index") {
    CHECK_THROWS_AS(normalize_outer({Circle{0.0, 1.0}}, 1), DegenerateInput);
  }
}

TEST_CASE("disk_automorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex w = std::polar(0.9 * std::uniform_real_distribution<double>(0, 1)(rng),
                                 std::uniform_real_distribution<double>(0, kTwoPi)(rng));
    const auto m = disk_automorphism(w);
    CHECK(std::abs(mobius_apply(m, ExtendedPoint(w)).z()) < 1e-14);
    for (int k = 0; k < 20; ++k) {
      const Complex z = std::polar(1.0, kTwoPi * k / 20);
      CHECK(std::abs(std::abs(mobius_apply(m, ExtendedPoint(z)).z()) - 1.0) < 1e-9);
    }
    CHECK_FALSE(m.conjugate);
  }
}

TEST_CASE("optimize_min_radius") {
  SUBCASE("K4 ties the three inner circles") {
    const auto d = pack_dual("k4");
    const auto p = normalize_outer(d.circles, d.outer).first;
    const auto r = optimize_min_radius(p);
    std::vector<double> radii;
    for (const auto& c : apply_all(r.map, p.circles)) radii.push_back(c.radius);
    radii.erase(radii.begin() + p.outer);
    REQUIRE(radii.size() == 3);
    for (double x : radii) CHECK(x == doctest::Approx(radii[0]).epsilon(1e-6));
    CHECK(r.min_radius == doctest::Approx(2.0 * std::sqrt(3.0) - 3.0).epsilon(1e-6));
  }
  SUBCASE("history is non-decreasing and the unit circle is fixed") {
    for (std::string name : {"cube", "frucht", "tutte"}) {
      CAPTURE(name);
      const auto d = pack_dual(name);
      const auto p = normalize_outer(d.circles, d.outer).first;
      const auto r = optimize_min_radius(p);
      for (size_t i = 1; i < r.history.size(); ++i) CHECK(r.history[i] >= r.history[i - 1]);
      CHECK(r.history.front() == doctest::Approx(min_inner_radius(p, MobiusMap::identity())));
      CHECK(r.min_radius == r.history.back());
      for (int k = 0; k < 20; ++k) {
        const Complex z = std::polar(1.0, kTwoPi * k / 20 + 0.1);
        CHECK(std::abs(std::abs(mobius_apply(r.map, ExtendedPoint(z)).z()) - 1.0) < 1e-9);
      }
      const auto moved = apply_all(r.map, p.circles);
      const auto res = normalized_residuals(d.t, moved, p.outer);
      CHECK(res.tangency < 1e-7);
      CHECK(res.overlap < 1e-7);
    }
  }
  SUBCASE("frucht improves") {
    const auto d = pack_dual("frucht");
    const auto p = normalize_outer(d.circles, d.outer).first;
    const auto r = optimize_min_radius(p);
    CHECK(r.min_radius > min_inner_radius(p, MobiusMap::identity()));
  }
  SUBCASE("a symmetric optimum returns the identity") {
    const auto d = pack_dual("k4");
    const auto p0 = normalize_outer(d.circles, d.outer).first;
    NormalizedPacking p = p0;
    p.circles = apply_all(optimize_min_radius(p0).map, p0.circles);
    const auto r = optimize_min_radius(p);
    CHECK(std::abs(r.w) < 1e-8);
    CHECK(r.min_radius - min_inner_radius(p, MobiusMap::identity()) <= OptimizeOptions{}.step_tol);
  }
  SUBCASE("independent of the start point") {
    OptimizeOptions opt;
    for (std::string name : {"k4", "cube", "frucht", "dodecahedron", "tutte", "truncated_icosahedron"}) {
      CAPTURE(name);
      const auto d = pack_dual(name);
      const auto p = normalize_outer(d.circles, d.outer).first;
      const double ref = optimize_min_radius(p, opt).min_radius;
      std::mt19937 rng(11);
      for (int k = 0; k < 5; ++k) {
        const Complex start = std::polar(0.6 * std::uniform_real_distribution<double>(0, 1)(rng),
                                         std::uniform_real_distribution<double>(0, kTwoPi)(rng));
        CHECK(std::abs(optimize_min_radius(p, opt, start).min_radius - ref) <= 10 * opt.step_tol);
      }
    }
  }
  SUBCASE("start outside the disk") {
    const auto d = pack_dual("k4");
    const auto p = normalize_outer(d.circles, d.outer).first;
    CHECK_THROWS_AS(optimize_min_radius(p, {}, Complex(1.0, 0.0)), DegenerateInput);
  }
}
