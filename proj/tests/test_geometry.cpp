#include <cmath>
#include <random>

#include "doctest.h"
#include "lombardi/error.hpp"
#include "lombardi/geometry.hpp"
#include "support.hpp"

using namespace lombardi;
using lombardi::test::random_mobius;
using lombardi::test::random_point;

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

bool close(const ExtendedPoint& a, const ExtendedPoint& b, double tol) { return near(a, b, tol); }

// Angle in [0, pi/2] between the tangent lines of two curves.
double line_angle(Complex u, Complex v) {
  double a = std::abs(std::atan2(cross(u, v), dot(u, v)));
  if (a > kPi / 2) a = kPi - a;
  return a;
}

Complex circle_tangent(const GeneralizedCircle& c, Complex p) {
  return c.outward_normal(p) * Complex(0.0, 1.0);
}

// Independent route to the isodynamic points: send the triangle to an
// equilateral one with matching orientation, take centroid / infinity, map back.
std::pair<ExtendedPoint, ExtendedPoint> isodynamic_by_construction(const Triangle& t) {
  const bool ccw = cross(t.v[1] - t.v[0], t.v[2] - t.v[0]) > 0.0;
  const Complex w = std::polar(1.0, kTwoPi / 3.0);
  const std::array<ExtendedPoint, 3> eq =
      ccw ? std::array<ExtendedPoint, 3>{Complex(1.0), w, w * w}
          : std::array<ExtendedPoint, 3>{Complex(1.0), w * w, w};
  const MobiusMap m = mobius_from_triples({t.v[0], t.v[1], t.v[2]}, eq);
  const MobiusMap back = m.inverse();
  return {back(Complex(0.0)), back(ExtendedPoint::infinity())};
}

bool same_unordered(const std::pair<ExtendedPoint, ExtendedPoint>& a,
                    const std::pair<ExtendedPoint, ExtendedPoint>& b, double tol) {
  return (close(a.first, b.first, tol) && close(a.second, b.second, tol)) ||
         (close(a.first, b.second, tol) && close(a.second, b.first, tol));
}

}  // namespace

TEST_CASE("mobius_from_triples") {
  const ExtendedPoint inf = ExtendedPoint::infinity();
  SUBCASE("identity") {
    const MobiusMap m = mobius_from_triples({Complex(0), Complex(1), inf}, {Complex(0), Complex(1), inf});
    CHECK_FALSE(m.conjugate);
    std::mt19937 rng(1);
    for (int i = 0; i < 10; ++i) {
      const Complex z = random_point(rng);
      CHECK(close(m(z), ExtendedPoint(z), 1e-12));
    }
  }
  SUBCASE("0,1,inf -> 1,inf,0 is 1/(1-z)") {
    const MobiusMap m = mobius_from_triples({Complex(0), Complex(1), inf}, {Complex(1), inf, Complex(0)});
    CHECK(close(m(Complex(0)), ExtendedPoint(Complex(1)), 1e-12));
    CHECK(m(Complex(1)).is_infinite());
    CHECK(close(m(inf), ExtendedPoint(Complex(0)), 1e-12));
    const Complex z(0.3, -0.7);
    CHECK(close(m(z), ExtendedPoint(1.0 / (1.0 - z)), 1e-12));
  }
  SUBCASE("composition with the reverse map is the identity") {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 20; ++trial) {
      const std::array<ExtendedPoint, 3> t{random_point(rng), random_point(rng), random_point(rng)};
      const std::array<ExtendedPoint, 3> u{random_point(rng), random_point(rng), random_point(rng)};
      const MobiusMap m = mobius_from_triples(t, u);
      for (int i = 0; i < 3; ++i) CHECK(close(m(t[i]), u[i], 1e-9));
      const MobiusMap id = mobius_from_triples(u, t) * m;
      for (int i = 0; i < 3; ++i) {
        const Complex z = random_point(rng);
        CHECK(close(id(z), ExtendedPoint(z), 1e-8));
      }
    }
  }
  SUBCASE("coincident points are rejected") {
    CHECK_THROWS_AS(mobius_from_triples({Complex(0), Complex(0), Complex(1)},
                                        {Complex(0), Complex(1), Complex(2)}),
                    DegenerateInput);
  }
}

TEST_CASE("mobius_apply on points, circles and arcs") {
  SUBCASE("inversion of a real-centred circle") {
    const MobiusMap inv = inversion_in_circle(GeneralizedCircle::circle(0.0, 1.0));
    const GeneralizedCircle img = mobius_apply(inv, GeneralizedCircle::circle(3.0, 1.0));
    REQUIRE(img.is_circle());
    CHECK(close(img.as_circle().center, Complex(3.0 / 8.0), 1e-14));
    CHECK(img.as_circle().radius == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
  }
  SUBCASE("identity leaves circles unchanged") {
    const GeneralizedCircle c = GeneralizedCircle::circle({0.4, -1.2}, 0.7);
    CHECK(same_support(mobius_apply(MobiusMap::identity(), c), c, 1e-15));
  }
  SUBCASE("circle through the inversion centre becomes a line") {
    const MobiusMap inv = inversion_in_circle(GeneralizedCircle::circle({1.0, 1.0}, 2.0));
    const GeneralizedCircle c = circle_through(Complex(1.0, 1.0), Complex(3.0, 0.5), Complex(0.0, 4.0));
    const GeneralizedCircle img = mobius_apply(inv, c);
    CHECK(img.is_line());
    // three-point image oracle
    CHECK(same_support(img, circle_through(inv(Complex(3.0, 0.5)), inv(Complex(0.0, 4.0)),
                                           ExtendedPoint::infinity()),
                       1e-9));
  }
  SUBCASE("closed-form circle image agrees with the three-point image") {
    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
      const MobiusMap m = random_mobius(rng);
      const Complex a = random_point(rng), b = random_point(rng), c = random_point(rng);
      const GeneralizedCircle src = circle_through(a, b, c);
      CHECK(same_support(mobius_apply(m, src), circle_through(m(a), m(b), m(c)), 1e-7));
    }
  }
  SUBCASE("arc round trip") {
    std::mt19937 rng(4);
    const CircularArc arc = arc_through(Complex(0.0), Complex(2.0), Complex(1.0, 1.0));
    for (int i = 0; i < 10; ++i) {
      const MobiusMap m = random_mobius(rng);
      const CircularArc back = mobius_apply(m.inverse(), mobius_apply(m, arc));
      CHECK(close(back.p, arc.p, 1e-9));
      CHECK(close(back.q, arc.q, 1e-9));
      CHECK(close(back.witness, arc.witness, 1e-9));
      CHECK(same_support(back.support, arc.support, 1e-8));
    }
  }
}

TEST_CASE("inversion_in_circle") {
  const MobiusMap inv = inversion_in_circle(GeneralizedCircle::circle(0.0, 1.0));
  CHECK(inv.conjugate);
  CHECK(close(inv(Complex(2.0)), ExtendedPoint(Complex(0.5)), 1e-15));
  CHECK(close(inv(inv(Complex(0.3, 0.4))), ExtendedPoint(Complex(0.3, 0.4)), 1e-12));
  CHECK(inv(Complex(0.0)).is_infinite());
  CHECK(close(inv(ExtendedPoint::infinity()), ExtendedPoint(Complex(0.0)), 1e-15));

  const MobiusMap refl = inversion_in_circle(GeneralizedCircle::line_through(0.0, 1.0));
  CHECK(close(refl(Complex(1.0, 2.0)), ExtendedPoint(Complex(1.0, -2.0)), 1e-15));

  SUBCASE("involution and fixed points on random circles") {
    std::mt19937 rng(5);
    for (int k = 0; k < 5; ++k) {
      const GeneralizedCircle o = GeneralizedCircle::circle(random_point(rng), 0.5 + k * 0.3);
      const MobiusMap m = inversion_in_circle(o);
      for (int i = 0; i < 100; ++i) {
        const Complex z = random_point(rng, 3.0);
        CHECK(close(m(m(z)), ExtendedPoint(z), 1e-10));
      }
      const Circle& c = o.as_circle();
      for (int i = 0; i < 8; ++i) {
        const Complex on = c.center + c.radius * std::polar(1.0, i * 0.7);
        CHECK(close(m(on), ExtendedPoint(on), 1e-12));
      }
      CHECK(m(c.center).is_infinite());
    }
  }
}

TEST_CASE("composition of orientation flags") {
  const MobiusMap inv = inversion_in_circle(GeneralizedCircle::circle(0.0, 1.0));
  const MobiusMap m = MobiusMap::make(1.0, Complex(0.5, 0.2), 0.0, 1.0);
  CHECK((inv * m).conjugate);
  CHECK_FALSE((inv * inv).conjugate);
  const Complex z(0.7, -0.4);
  CHECK(close((inv * m)(z), inv(m(z)), 1e-12));
  CHECK(close((m * inv)(z), m(inv(z)), 1e-12));
  CHECK(close((inv * m).inverse()((inv * m)(z)), ExtendedPoint(z), 1e-12));
}

TEST_CASE("isodynamic_points") {
  SUBCASE("equilateral") {
    const auto pts = isodynamic_points(Triangle::make(0.0, 1.0, Complex(0.5, std::sqrt(3.0) / 2)));
    CHECK(close(pts.first, ExtendedPoint(Complex(0.5, std::sqrt(3.0) / 6)), 1e-12));
    CHECK(pts.second.is_infinite());
  }
  SUBCASE("3-4-5 triangle agrees with the equilateral construction") {
    const Triangle t = Triangle::make(0.0, 4.0, Complex(0.0, 3.0));
    CHECK(same_unordered(isodynamic_points(t), isodynamic_by_construction(t), 1e-8));
    // first point matches the centroid route specifically
    CHECK(close(isodynamic_points(t).first, isodynamic_by_construction(t).first, 1e-8));
  }
  SUBCASE("trilinear formula vs construction on random triangles") {
    std::mt19937 rng(6);
    int checked = 0;
    while (checked < 100) {
      Triangle t;
      try {
        t = Triangle::make(random_point(rng), random_point(rng), random_point(rng));
      } catch (const DegenerateInput&) {
        continue;
      }
      ++checked;
      CHECK(same_unordered(isodynamic_points(t), isodynamic_by_construction(t), 1e-8));
    }
  }
  SUBCASE("degenerate triangle") {
    CHECK_THROWS_AS(Triangle::make(0.0, 1.0, 2.0), DegenerateInput);
  }
}

TEST_CASE("circle_through") {
  const GeneralizedCircle c = circle_through(Complex(0), Complex(2), Complex(1, 1));
  REQUIRE(c.is_circle());
  CHECK(close(c.as_circle().center, Complex(1.0), 1e-14));
  CHECK(c.as_circle().radius == doctest::Approx(1.0));
  CHECK(circle_through(Complex(0), Complex(1), Complex(2)).is_line());
  const GeneralizedCircle l = circle_through(Complex(0), Complex(1), ExtendedPoint::infinity());
  REQUIRE(l.is_line());
  CHECK(l.contains(Complex(5.0)));
  CHECK_THROWS_AS(circle_through(Complex(1), Complex(1), Complex(2)), DegenerateInput);

  SUBCASE("permutation invariance") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
      const Complex a = random_point(rng), b = random_point(rng), d = random_point(rng);
      const GeneralizedCircle ref = circle_through(a, b, d);
      CHECK(same_support(ref, circle_through(b, a, d), 1e-10));
      CHECK(same_support(ref, circle_through(d, b, a), 1e-10));
      CHECK(same_support(ref, circle_through(a, d, b), 1e-10));
      for (Complex z : {a, b, d}) CHECK(ref.contains(z, 1e-10));
    }
  }
}

TEST_CASE("arc_through and tangent_direction") {
  const CircularArc upper = arc_through(Complex(0), Complex(2), Complex(1, 1));
  CHECK(tangent_direction(upper, ArcEnd::Start) == doctest::Approx(kPi / 2));
  CHECK(tangent_direction(upper, ArcEnd::End) == doctest::Approx(kPi / 2));
  CHECK(subtended_angle(upper) == doctest::Approx(kPi));

  const CircularArc seg = arc_through(Complex(0), Complex(2), Complex(1, 0));
  CHECK(seg.support.is_line());
  CHECK(tangent_direction(seg, ArcEnd::Start) == doctest::Approx(0.0));
  CHECK(tangent_direction(seg, ArcEnd::End) == doctest::Approx(kPi));

  const CircularArc lower = arc_through(Complex(0), Complex(2), Complex(1, -1));
  CHECK(tangent_direction(lower, ArcEnd::Start) == doctest::Approx(3 * kPi / 2));

  CircularArc bad = upper;
  bad.p = Complex(5.0, 5.0);
  CHECK_THROWS_AS(tangent_direction(bad, ArcEnd::Start), DegenerateInput);

  SUBCASE("arc_from_tangent reproduces the tangent") {
    std::mt19937 rng(8);
    for (int i = 0; i < 50; ++i) {
      const Complex p = random_point(rng), q = random_point(rng);
      const Complex d = std::polar(1.0, std::uniform_real_distribution<double>(0, kTwoPi)(rng));
      const CircularArc a = arc_from_tangent(p, d, q);
      CHECK(close(tangent_vector(a, ArcEnd::Start), d, 1e-9));
      CHECK(a.support.contains(a.witness, 1e-9));
    }
  }
}

TEST_CASE("conformality of Moebius maps") {
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    const Complex p = random_point(rng);
    const CircularArc a = arc_through(p, random_point(rng), random_point(rng));
    const CircularArc b = arc_through(p, random_point(rng), random_point(rng));
    const MobiusMap m = random_mobius(rng);
    const double before = std::remainder(tangent_direction(a, ArcEnd::Start) -
                                             tangent_direction(b, ArcEnd::Start), kTwoPi);
    const CircularArc ma = mobius_apply(m, a), mb = mobius_apply(m, b);
    const double after = std::remainder(tangent_direction(ma, ArcEnd::Start) -
                                            tangent_direction(mb, ArcEnd::Start), kTwoPi);
    CHECK(after == doctest::Approx(before).epsilon(1e-8));
  }
}

TEST_CASE("arc_intersections") {
  const CircularArc upper = arc_through(Complex(0), Complex(2), Complex(1, 1));
  SUBCASE("semicircle against a vertical segment") {
    const auto r = arc_intersections(upper, arc_through(Complex(1, -2), Complex(1, 2), Complex(1, 0)));
    REQUIRE(r.points.size() == 1);
    CHECK(close(r.points[0], ExtendedPoint(Complex(1, 1)), 1e-12));
  }
  SUBCASE("disjoint circles") {
    const auto r = arc_intersections(upper, arc_through(Complex(10), Complex(12), Complex(11, 1)));
    CHECK(r.points.empty());
    CHECK_FALSE(r.overlap);
  }
  SUBCASE("shared endpoint only") {
    const auto r = arc_intersections(upper, arc_through(Complex(2), Complex(4), Complex(3, -1)));
    REQUIRE(r.points.size() == 1);
    CHECK(close(r.points[0], ExtendedPoint(Complex(2)), 1e-12));
  }
  SUBCASE("same circle, adjacent arcs touch at one point") {
    const CircularArc q1 = arc_through(Complex(0), Complex(1, 1), Complex(1 - std::sqrt(0.5), std::sqrt(0.5)));
    const CircularArc q2 = arc_through(Complex(1, 1), Complex(2), Complex(1 + std::sqrt(0.5), std::sqrt(0.5)));
    const auto r = arc_intersections(q1, q2);
    CHECK_FALSE(r.overlap);
    REQUIRE(r.points.size() == 1);
    CHECK(close(r.points[0], ExtendedPoint(Complex(1, 1)), 1e-12));
    CHECK(arc_intersections(upper, q1).overlap);
  }
  SUBCASE("collinear segments") {
    const CircularArc s1 = arc_through(Complex(0), Complex(1), Complex(0.5));
    const CircularArc s2 = arc_through(Complex(1), Complex(2), Complex(1.5));
    const CircularArc s3 = arc_through(Complex(0.5), Complex(3), Complex(2));
    CHECK_FALSE(arc_intersections(s1, s2).overlap);
    CHECK(arc_intersections(s1, s2).points.size() == 1);
    CHECK(arc_intersections(s1, s3).overlap);
  }
}

TEST_CASE("lune_bisector") {
  const GeneralizedCircle c1 = GeneralizedCircle::circle(0.0, 1.0);
  const GeneralizedCircle c2 = GeneralizedCircle::circle(std::sqrt(2.0), 1.0);
  const Complex k1(std::sqrt(0.5), std::sqrt(0.5)), k2(std::sqrt(0.5), -std::sqrt(0.5));

  const CircularArc b = lune_bisector(c1, c2, k1, k2);
  SUBCASE("45 degrees to both circles at both corners, symmetric about the axis") {
    for (auto [corner, end] : {std::pair{k1, ArcEnd::Start}, std::pair{k2, ArcEnd::End}}) {
      const Complex t = tangent_vector(b, end);
      CHECK(line_angle(t, circle_tangent(c1, corner)) == doctest::Approx(kPi / 4).epsilon(1e-12));
      CHECK(line_angle(t, circle_tangent(c2, corner)) == doctest::Approx(kPi / 4).epsilon(1e-12));
    }
    if (b.support.is_circle()) CHECK(std::abs(b.support.as_circle().center.imag()) < 1e-12);
    const Complex w = b.witness.z();
    CHECK(c1.side_value(w) < 0.0);
    CHECK(c2.side_value(w) < 0.0);
  }
  SUBCASE("swapping corners") {
    const CircularArc s = lune_bisector(c1, c2, k2, k1);
    CHECK(same_support(s.support, b.support, 1e-12));
    CHECK(close(s.p, b.q, 1e-15));
    CHECK(close(s.q, b.p, 1e-15));
  }
  SUBCASE("commutes with Moebius maps") {
    std::mt19937 rng(10);
    const Complex hint = b.witness.z();
    for (int i = 0; i < 20; ++i) {
      const MobiusMap m = random_mobius(rng);
      const CircularArc img = lune_bisector(mobius_apply(m, c1), mobius_apply(m, c2), m(k1), m(k2),
                                            m(hint).z());
      const CircularArc mapped = mobius_apply(m, b);
      CHECK(same_support(img.support, mapped.support, 1e-7));
      CHECK(on_arc(img, mapped.witness, 1e-7));
    }
  }
  SUBCASE("non-orthogonal circles are rejected") {
    CHECK_THROWS_AS(lune_bisector(c1, GeneralizedCircle::circle(1.0, 1.0), k1, k2), DegenerateInput);
  }
}
