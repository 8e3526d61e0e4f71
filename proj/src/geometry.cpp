#include "lombardi/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "lombardi/error.hpp"

namespace lombardi {

namespace {

// Sine of the angle below which three points count as collinear. Arcs this
// flat turn by under 1e-7 rad, while the huge circles they would need make
// intersection tests ill-conditioned.
constexpr double kCollinearTol = 1e-8;

Complex unit(Complex z) { return z / std::abs(z); }

ExtendedPoint linear_apply(const MobiusMap& m, Complex z) {
  const Complex den = m.c * z + m.d;
  if (std::abs(den) <= 1e-15 * (std::abs(m.c * z) + std::abs(m.d))) return ExtendedPoint::infinity();
  return ExtendedPoint((m.a * z + m.b) / den);
}

ExtendedPoint linear_apply(const MobiusMap& m, const ExtendedPoint& p) {
  if (p.is_infinite()) {
    if (m.c == Complex(0.0)) return ExtendedPoint::infinity();
    return ExtendedPoint(m.a / m.c);
  }
  return linear_apply(m, p.z());
}

GeneralizedCircle conjugated(const GeneralizedCircle& g) {
  if (g.is_line()) return Line{std::conj(g.as_line().normal), g.as_line().offset};
  return Circle{std::conj(g.as_circle().center), g.as_circle().radius};
}

GeneralizedCircle line_from_images(const ExtendedPoint& p, const ExtendedPoint& q) {
  return circle_through(p, q, ExtendedPoint::infinity());
}

// Image of a circle under the linear part of m.
GeneralizedCircle linear_apply(const MobiusMap& m, const Circle& circ) {
  const Complex c0 = circ.center;
  const double r = circ.radius;
  if (m.c == Complex(0.0)) {
    return Circle{(m.a * c0 + m.b) / m.d, r * std::abs(m.a / m.d)};
  }
  const Complex pole = -m.d / m.c;
  const double dp = std::abs(pole - c0);
  if (std::abs(dp - r) <= 1e-14 * std::max(r, dp)) {
    const Complex u = unit(pole - c0) * Complex(0.0, 1.0);
    return line_from_images(linear_apply(m, c0 + r * u), linear_apply(m, c0 - r * u));
  }
  ExtendedPoint mirror = dp == 0.0 ? ExtendedPoint::infinity()
                                   : ExtendedPoint(c0 + r * r / std::conj(pole - c0));
  const Complex center = linear_apply(m, mirror).z();
  const Complex away = dp == 0.0 ? c0 + r : c0 - r * unit(pole - c0);
  return Circle{center, std::abs(linear_apply(m, away).z() - center)};
}

GeneralizedCircle linear_apply(const MobiusMap& m, const Line& line) {
  const Complex n = line.normal;
  const Complex t = n * Complex(0.0, 1.0);
  if (m.c == Complex(0.0)) {
    const Complex p0 = line.offset * n;
    return line_from_images(linear_apply(m, p0 - t), linear_apply(m, p0 + t));
  }
  const Complex pole = -m.d / m.c;
  const double dist = dot(n, pole) - line.offset;
  const Complex foot = pole - dist * n;
  if (std::abs(dist) <= 1e-14 * (std::abs(pole) + std::abs(line.offset) + 1.0)) {
    return line_from_images(linear_apply(m, foot + t), linear_apply(m, foot - t));
  }
  const Complex center = linear_apply(m, pole - 2.0 * dist * n).z();
  return Circle{center, std::abs(linear_apply(m, foot).z() - center)};
}

struct CircleFrame {
  Complex center;
  double radius;
  double start;  // angle of p
  double span;   // subtended angle
  bool ccw;
};

CircleFrame circle_frame(const CircularArc& a) {
  const Circle& c = a.support.as_circle();
  CircleFrame f{c.center, c.radius, std::arg(a.p.z() - c.center), 0.0, true};
  const double dq = wrap_angle(std::arg(a.q.z() - c.center) - f.start);
  const double dw = wrap_angle(std::arg(a.witness.z() - c.center) - f.start);
  f.ccw = dw < dq;
  f.span = f.ccw ? dq : kTwoPi - dq;
  return f;
}

// Signed offset along the arc's direction of travel, measured from p.
double circle_offset(const CircleFrame& f, Complex z) {
  const double d = wrap_angle(std::arg(z - f.center) - f.start);
  return f.ccw ? d : wrap_angle(-d);
}

bool segment_arc(const CircularArc& a) {
  if (a.witness.is_infinite()) return false;
  const Complex p = a.p.z(), q = a.q.z(), w = a.witness.z();
  return dot(w - p, q - p) > 0.0 && dot(w - q, p - q) > 0.0;
}

std::vector<ExtendedPoint> support_intersections(const GeneralizedCircle& a,
                                                 const GeneralizedCircle& b) {
  std::vector<ExtendedPoint> out;
  if (a.is_circle() && b.is_circle()) {
    const Circle& c1 = a.as_circle();
    const Circle& c2 = b.as_circle();
    const Complex delta = c2.center - c1.center;
    const double d = std::abs(delta);
    const double scale = std::max(c1.radius, c2.radius);
    if (d == 0.0) return out;
    if (d > c1.radius + c2.radius + 1e-12 * scale) return out;
    if (d < std::abs(c1.radius - c2.radius) - 1e-12 * scale) return out;
    // Angles on the smaller circle, measured from the direction away from
    // the larger center. Factoring r^2 - d^2 keeps this accurate when the
    // radii differ by orders of magnitude.
    const bool first_small = c1.radius <= c2.radius;
    const Circle& sm = first_small ? c1 : c2;
    const Circle& lg = first_small ? c2 : c1;
    const Complex u = (first_small ? -delta : delta) / d;
    const double cos_phi =
        ((lg.radius - d) * (lg.radius + d) - sm.radius * sm.radius) / (2.0 * sm.radius * d);
    const double c = std::clamp(cos_phi, -1.0, 1.0);
    const Complex w(c, std::sqrt(std::max(0.0, 1.0 - c * c)));
    out.emplace_back(sm.center + sm.radius * u * w);
    if (w.imag() > 0.0) out.emplace_back(sm.center + sm.radius * u * std::conj(w));
    return out;
  }
  if (a.is_line() && b.is_line()) {
    out.push_back(ExtendedPoint::infinity());
    const Line& l1 = a.as_line();
    const Line& l2 = b.as_line();
    const double det = cross(l1.normal, l2.normal);
    if (std::abs(det) < 1e-15) return out;
    // Solve n1.x = o1, n2.x = o2.
    const double x = (l1.offset * l2.normal.imag() - l2.offset * l1.normal.imag()) / det;
    const double y = (l1.normal.real() * l2.offset - l2.normal.real() * l1.offset) / det;
    out.emplace_back(Complex(x, y));
    return out;
  }
  const Circle& c = a.is_circle() ? a.as_circle() : b.as_circle();
  const Line& l = a.is_line() ? a.as_line() : b.as_line();
  const double dist = dot(l.normal, c.center) - l.offset;
  if (std::abs(dist) > c.radius * (1.0 + 1e-12)) return out;
  const Complex foot = c.center - dist * l.normal;
  const double h = std::sqrt(std::max(0.0, (c.radius - std::abs(dist)) * (c.radius + std::abs(dist))));
  const Complex t = l.normal * Complex(0.0, 1.0);
  out.emplace_back(foot + h * t);
  if (h > 0.0) out.emplace_back(foot - h * t);
  return out;
}

void push_unique(std::vector<ExtendedPoint>& pts, const ExtendedPoint& p, double tol) {
  for (const auto& q : pts) {
    if (near(p, q, tol)) return;
  }
  pts.push_back(p);
}

double arc_scale(const CircularArc& a) {
  double s = 0.0;
  for (const auto* p : {&a.p, &a.q, &a.witness}) {
    if (p->is_finite()) s = std::max(s, std::abs(p->z()));
  }
  if (a.p.is_finite() && a.q.is_finite()) s = std::max(s, std::abs(a.p.z() - a.q.z()));
  return std::max(s, 1e-300);
}

// Overlap test for two arcs on the same circle (lines are first inverted
// into circles).
ArcIntersection same_support_overlap(const CircularArc& a, const CircularArc& b) {
  if (a.support.is_line()) {
    const Line& l = a.support.as_line();
    const double s = std::max(arc_scale(a), arc_scale(b));
    const Complex center = l.offset * l.normal + s * l.normal;
    const MobiusMap inv = inversion_in_circle(Circle{center, s});
    ArcIntersection r = same_support_overlap(mobius_apply(inv, a), mobius_apply(inv, b));
    for (auto& p : r.points) p = inv(p);
    return r;
  }
  ArcIntersection out;
  const CircleFrame fa = circle_frame(a);
  const CircleFrame fb = circle_frame(b);
  // ccw intervals [start, start + span]
  const double a0 = fa.ccw ? fa.start : fa.start - fa.span;
  const double b0 = fb.ccw ? fb.start : fb.start - fb.span;
  const double shift = wrap_angle(b0 - a0);
  double overlap = 0.0;
  for (double s : {shift, shift - kTwoPi}) {
    const double lo = std::max(0.0, s);
    const double hi = std::min(fa.span, s + fb.span);
    overlap = std::max(overlap, hi - lo);
  }
  if (overlap > 1e-9) {
    out.overlap = true;
    return out;
  }
  const double tol = 1e-9 * fa.radius;
  for (const auto* p : {&a.p, &a.q}) {
    if (on_arc(b, *p)) push_unique(out.points, *p, tol);
  }
  for (const auto* p : {&b.p, &b.q}) {
    if (on_arc(a, *p)) push_unique(out.points, *p, tol);
  }
  return out;
}

}  // namespace

double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

ExtendedPoint::ExtendedPoint(Complex z) : z_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DegenerateInput("non-finite coordinate for a finite point");
  }
}

Complex ExtendedPoint::z() const {
  if (infinite_) throw DegenerateInput("point at infinity has no finite coordinate");
  return z_;
}

bool near(const ExtendedPoint& a, const ExtendedPoint& b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return std::abs(a.z() - b.z()) <= tol;
}

GeneralizedCircle::GeneralizedCircle(Circle c) : shape_(c) {
  if (!(c.radius > 0.0) || !std::isfinite(c.radius)) {
    throw DegenerateInput("circle radius must be positive and finite");
  }
}

GeneralizedCircle::GeneralizedCircle(Line l) : shape_(l) {
  const double n = std::abs(l.normal);
  if (!(n > 0.0)) throw DegenerateInput("line normal must be nonzero");
  std::get<Line>(shape_).normal /= n;
  std::get<Line>(shape_).offset /= n;
}

GeneralizedCircle GeneralizedCircle::line_through(Complex p, Complex q) {
  if (p == q) throw DegenerateInput("line through coincident points");
  const Complex n = unit(q - p) * Complex(0.0, -1.0);
  return Line{n, dot(n, p)};
}

double GeneralizedCircle::side_value(Complex z) const {
  if (is_line()) return dot(as_line().normal, z) - as_line().offset;
  const Circle& c = as_circle();
  return std::norm(z - c.center) - c.radius * c.radius;
}

double GeneralizedCircle::distance_to(const ExtendedPoint& p) const {
  if (p.is_infinite()) return is_line() ? 0.0 : HUGE_VAL;
  if (is_line()) return std::abs(dot(as_line().normal, p.z()) - as_line().offset);
  const Circle& c = as_circle();
  return std::abs(std::abs(p.z() - c.center) - c.radius);
}

bool GeneralizedCircle::contains(const ExtendedPoint& p, double tol) const {
  if (p.is_infinite()) return is_line();
  const double scale = is_line() ? std::max(1.0, std::abs(p.z())) : as_circle().radius;
  return distance_to(p) <= tol * scale;
}

Complex GeneralizedCircle::outward_normal(Complex z) const {
  if (is_line()) return as_line().normal;
  return unit(z - as_circle().center);
}

bool same_support(const GeneralizedCircle& a, const GeneralizedCircle& b, double tol) {
  if (a.is_line() != b.is_line()) return false;
  if (a.is_circle()) {
    const Circle& x = a.as_circle();
    const Circle& y = b.as_circle();
    const double s = std::max(x.radius, y.radius);
    return std::abs(x.center - y.center) <= tol * s && std::abs(x.radius - y.radius) <= tol * s;
  }
  const Line& x = a.as_line();
  const Line& y = b.as_line();
  const double s = std::max({1.0, std::abs(x.offset), std::abs(y.offset)});
  if (std::abs(x.normal - y.normal) <= tol) return std::abs(x.offset - y.offset) <= tol * s;
  if (std::abs(x.normal + y.normal) <= tol) return std::abs(x.offset + y.offset) <= tol * s;
  return false;
}

double orthogonality_residual(const Circle& a, const Circle& b) {
  const double d2 = std::norm(a.center - b.center);
  const double r2 = a.radius * a.radius + b.radius * b.radius;
  return std::abs(d2 - r2) / r2;
}

MobiusMap MobiusMap::make(Complex a, Complex b, Complex c, Complex d, bool conjugate) {
  MobiusMap m{a, b, c, d, conjugate};
  m = m.normalized();
  if (std::abs(m.a * m.d - m.b * m.c) <= 1e-12) {
    throw DegenerateInput("Moebius map with vanishing determinant");
  }
  return m;
}

MobiusMap MobiusMap::normalized() const {
  const double s = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (s == 0.0) throw DegenerateInput("Moebius map with all-zero coefficients");
  return {a / s, b / s, c / s, d / s, conjugate};
}

ExtendedPoint MobiusMap::operator()(const ExtendedPoint& p) const {
  if (conjugate && p.is_finite()) return linear_apply(*this, std::conj(p.z()));
  return linear_apply(*this, p);
}

MobiusMap MobiusMap::inverse() const {
  if (!conjugate) return MobiusMap{d, -b, -c, a, false}.normalized();
  return MobiusMap{std::conj(d), -std::conj(b), -std::conj(c), std::conj(a), true}.normalized();
}

MobiusMap operator*(const MobiusMap& f, const MobiusMap& g) {
  const Complex ga = f.conjugate ? std::conj(g.a) : g.a;
  const Complex gb = f.conjugate ? std::conj(g.b) : g.b;
  const Complex gc = f.conjugate ? std::conj(g.c) : g.c;
  const Complex gd = f.conjugate ? std::conj(g.d) : g.d;
  MobiusMap m{f.a * ga + f.b * gc, f.a * gb + f.b * gd, f.c * ga + f.d * gc,
              f.c * gb + f.d * gd, f.conjugate != g.conjugate};
  return m.normalized();
}

namespace {

// Sends z1, z2, z3 to 0, 1, infinity.
MobiusMap to_standard(const std::array<ExtendedPoint, 3>& z) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double s = std::max(z[i].is_finite() ? std::abs(z[i].z()) : 0.0,
                                z[j].is_finite() ? std::abs(z[j].z()) : 0.0);
      if (near(z[i], z[j], 1e-14 * std::max(1.0, s))) {
        throw DegenerateInput("coincident points in a Moebius triple");
      }
    }
  }
  if (z[0].is_infinite()) {
    return MobiusMap::make(0.0, z[1].z() - z[2].z(), 1.0, -z[2].z());
  }
  if (z[1].is_infinite()) return MobiusMap::make(1.0, -z[0].z(), 1.0, -z[2].z());
  if (z[2].is_infinite()) return MobiusMap::make(1.0, -z[0].z(), 0.0, z[1].z() - z[0].z());
  const Complex z1 = z[0].z(), z2 = z[1].z(), z3 = z[2].z();
  return MobiusMap::make(z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1));
}

}  // namespace

MobiusMap mobius_from_triples(const std::array<ExtendedPoint, 3>& src,
                              const std::array<ExtendedPoint, 3>& dst) {
  return to_standard(dst).inverse() * to_standard(src);
}

ExtendedPoint mobius_apply(const MobiusMap& m, const ExtendedPoint& p) { return m(p); }

GeneralizedCircle mobius_apply(const MobiusMap& m, const GeneralizedCircle& c) {
  const GeneralizedCircle g = m.conjugate ? conjugated(c) : c;
  if (g.is_line()) return linear_apply(m, g.as_line());
  return linear_apply(m, g.as_circle());
}

CircularArc mobius_apply(const MobiusMap& m, const CircularArc& a) {
  const ExtendedPoint p = m(a.p), q = m(a.q), w = m(a.witness);
  return CircularArc{circle_through(p, q, w), p, q, w};
}

MobiusMap inversion_in_circle(const GeneralizedCircle& o) {
  if (o.is_line()) {
    const Complex n = o.as_line().normal;
    return MobiusMap::make(-n * n, 2.0 * o.as_line().offset * n, 0.0, 1.0, true);
  }
  const Complex c = o.as_circle().center;
  const double r = o.as_circle().radius;
  return MobiusMap::make(c, r * r - std::norm(c), 1.0, -std::conj(c), true);
}

MobiusMap similarity(Complex scale, Complex shift) {
  return MobiusMap::make(scale, shift, 0.0, 1.0);
}

Triangle Triangle::make(Complex a, Complex b, Complex c) {
  Triangle t;
  t.v = {a, b, c};
  for (int i = 0; i < 3; ++i) t.side[i] = std::abs(t.v[(i + 1) % 3] - t.v[(i + 2) % 3]);
  const double scale = std::max({t.side[0], t.side[1], t.side[2]});
  const double area2 = std::abs(cross(b - a, c - a));
  if (!(scale > 0.0) || area2 <= 1e-12 * scale * scale) {
    throw DegenerateInput("degenerate triangle");
  }
  for (int i = 0; i < 3; ++i) {
    const Complex u = t.v[(i + 1) % 3] - t.v[i];
    const Complex w = t.v[(i + 2) % 3] - t.v[i];
    t.angle[i] = std::abs(std::atan2(cross(u, w), dot(u, w)));
  }
  return t;
}

std::pair<ExtendedPoint, ExtendedPoint> isodynamic_points(const Triangle& t) {
  auto center = [&](double shift) -> ExtendedPoint {
    Complex sum = 0.0;
    double wsum = 0.0, wabs = 0.0;
    for (int i = 0; i < 3; ++i) {
      // trilinear sin(A + shift) converted to a barycentric weight
      const double w = std::sin(t.angle[i] + shift) * t.side[i];
      sum += w * t.v[i];
      wsum += w;
      wabs += t.side[i];
    }
    if (std::abs(wsum) <= 1e-12 * wabs) return ExtendedPoint::infinity();
    return ExtendedPoint(sum / wsum);
  };
  return {center(kPi / 3.0), center(-kPi / 3.0)};
}

GeneralizedCircle circle_through(const ExtendedPoint& p, const ExtendedPoint& q,
                                 const ExtendedPoint& r) {
  const std::array<const ExtendedPoint*, 3> pts{&p, &q, &r};
  std::vector<Complex> finite;
  for (const auto* x : pts) {
    if (x->is_finite()) finite.push_back(x->z());
  }
  if (finite.size() < 2) throw DegenerateInput("circle through coincident points");
  double scale = 0.0;
  for (std::size_t i = 0; i < finite.size(); ++i) {
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      scale = std::max(scale, std::abs(finite[i] - finite[j]));
    }
  }
  for (std::size_t i = 0; i < finite.size(); ++i) {
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      if (std::abs(finite[i] - finite[j]) <= 1e-14 * scale || scale == 0.0) {
        throw DegenerateInput("circle through coincident points");
      }
    }
  }
  if (finite.size() == 2) return GeneralizedCircle::line_through(finite[0], finite[1]);
  const Complex a = finite[0], b = finite[1] - a, c = finite[2] - a;
  const double den = 2.0 * cross(b, c);
  if (std::abs(den) <= 2.0 * kCollinearTol * std::abs(b) * std::abs(c)) {
    // collinear: use the two farthest-apart points
    Complex u = finite[0], v = finite[1];
    double best = std::abs(u - v);
    if (std::abs(finite[0] - finite[2]) > best) {
      v = finite[2];
      best = std::abs(u - v);
    }
    if (std::abs(finite[1] - finite[2]) > best) {
      u = finite[1];
      v = finite[2];
    }
    return GeneralizedCircle::line_through(u, v);
  }
  const double b2 = std::norm(b), c2 = std::norm(c);
  const Complex center(a.real() + (c.imag() * b2 - b.imag() * c2) / den,
                       a.imag() + (b.real() * c2 - c.real() * b2) / den);
  const double radius =
      (std::abs(finite[0] - center) + std::abs(finite[1] - center) + std::abs(finite[2] - center)) /
      3.0;
  return Circle{center, radius};
}

CircularArc arc_through(const ExtendedPoint& p, const ExtendedPoint& q, const ExtendedPoint& via) {
  return CircularArc{circle_through(p, q, via), p, q, via};
}

CircularArc arc_from_tangent(Complex p, Complex dir, Complex q) {
  const Complex chord = q - p;
  const double len = std::abs(chord);
  if (len == 0.0) throw DegenerateInput("arc with coincident endpoints");
  const Complex d = unit(dir);
  const Complex n = d * Complex(0.0, 1.0);
  const double denom = dot(n, p - q);
  if (std::abs(denom) <= kCollinearTol * len) {
    const ExtendedPoint w = dot(d, chord) > 0.0 ? ExtendedPoint((p + q) / 2.0) : ExtendedPoint::infinity();
    return CircularArc{GeneralizedCircle::line_through(p, q), p, q, w};
  }
  const double s = -len * len / (2.0 * denom);
  const Complex center = p + s * n;
  const double radius = std::abs(s);
  const Complex left = chord / len * Complex(0.0, 1.0);
  const Complex w = cross(chord, d) > 0.0 ? center + radius * left : center - radius * left;
  return CircularArc{Circle{center, radius}, p, q, w};
}

Complex tangent_vector(const CircularArc& a, ArcEnd at) {
  const ExtendedPoint& from = at == ArcEnd::Start ? a.p : a.q;
  const ExtendedPoint& other = at == ArcEnd::Start ? a.q : a.p;
  if (from.is_infinite()) throw DegenerateInput("tangent at infinity");
  if (a.support.is_line()) {
    if (other.is_infinite()) return unit(a.witness.z() - from.z());
    const bool seg = segment_arc(a);
    return seg ? unit(other.z() - from.z()) : unit(from.z() - other.z());
  }
  const CircleFrame f = circle_frame(a);
  const Complex radial = from.z() - f.center;
  // Travel from p runs ccw iff f.ccw; travel from q runs the other way.
  const bool ccw = at == ArcEnd::Start ? f.ccw : !f.ccw;
  const Complex t = unit(radial) * Complex(0.0, 1.0);
  return ccw ? t : -t;
}

double tangent_direction(const CircularArc& a, ArcEnd at) {
  const ExtendedPoint& from = at == ArcEnd::Start ? a.p : a.q;
  if (!a.support.contains(from, 1e-8)) throw DegenerateInput("endpoint not on arc support");
  return wrap_angle(std::arg(tangent_vector(a, at)));
}

double subtended_angle(const CircularArc& a) {
  if (a.support.is_line()) return 0.0;
  return circle_frame(a).span;
}

Complex arc_point(const CircularArc& a, double t) {
  if (a.support.is_line()) {
    if (!segment_arc(a)) throw DegenerateInput("sampling an arc through infinity");
    return a.p.z() + t * (a.q.z() - a.p.z());
  }
  const CircleFrame f = circle_frame(a);
  const double ang = f.start + (f.ccw ? 1.0 : -1.0) * t * f.span;
  return f.center + f.radius * std::polar(1.0, ang);
}

bool on_arc(const CircularArc& a, const ExtendedPoint& z, double tol) {
  if (a.support.is_line()) {
    if (z.is_infinite()) return !segment_arc(a);
    const Complex p = a.p.z(), q = a.q.z();
    const double t = dot(z.z() - p, q - p) / std::norm(q - p);
    if (segment_arc(a)) return t >= -tol && t <= 1.0 + tol;
    return t <= tol || t >= 1.0 - tol;
  }
  if (z.is_infinite()) return false;
  const CircleFrame f = circle_frame(a);
  const double off = circle_offset(f, z.z());
  return off <= f.span + tol || off >= kTwoPi - tol;
}

CircularArc recenter_witness(const CircularArc& a) {
  if (a.p.is_infinite() || a.q.is_infinite()) return a;
  if (a.support.is_line() && !segment_arc(a)) return a;
  CircularArc out = a;
  out.witness = arc_point(a, 0.5);
  return out;
}

CircularArc reversed(const CircularArc& a) { return CircularArc{a.support, a.q, a.p, a.witness}; }

ArcIntersection arc_intersections(const CircularArc& a, const CircularArc& b) {
  if (same_support(a.support, b.support)) {
    CircularArc bb = b;
    bb.support = a.support;
    return same_support_overlap(a, bb);
  }
  ArcIntersection out;
  const double tol = 1e-12 * std::max(arc_scale(a), arc_scale(b));
  for (const auto& p : support_intersections(a.support, b.support)) {
    if (on_arc(a, p) && on_arc(b, p)) push_unique(out.points, p, tol);
  }
  return out;
}

namespace {

// Tangent of `self` at corner p pointing to the requested side of `other`.
Complex lune_edge_direction(const GeneralizedCircle& self, const GeneralizedCircle& other,
                            Complex p, bool inside_other) {
  Complex t = self.outward_normal(p) * Complex(0.0, 1.0);
  const double s = dot(t, other.outward_normal(p));
  if ((inside_other && s > 0.0) || (!inside_other && s < 0.0)) t = -t;
  return t;
}

CircularArc bisect(const GeneralizedCircle& c1, const GeneralizedCircle& c2,
                   const ExtendedPoint& corner1, const ExtendedPoint& corner2, bool in1, bool in2) {
  if (c1.is_circle() && c2.is_circle() &&
      orthogonality_residual(c1.as_circle(), c2.as_circle()) > 1e-8) {
    throw DegenerateInput("lune bisector requires orthogonal circles");
  }
  if (c1.is_line() && c2.is_line()) {
    if (std::abs(dot(c1.as_line().normal, c2.as_line().normal)) > 1e-8) {
      throw DegenerateInput("lune bisector requires orthogonal circles");
    }
  } else if (c1.is_line() != c2.is_line()) {
    const Line& l = c1.is_line() ? c1.as_line() : c2.as_line();
    const Circle& c = c1.is_line() ? c2.as_circle() : c1.as_circle();
    if (std::abs(dot(l.normal, c.center) - l.offset) > 1e-8 * c.radius) {
      throw DegenerateInput("lune bisector requires orthogonal circles");
    }
  }
  const Complex p = corner1.z();
  const Complex t1 = lune_edge_direction(c1, c2, p, in2);
  const Complex t2 = lune_edge_direction(c2, c1, p, in1);
  return arc_from_tangent(p, t1 + t2, corner2.z());
}

}  // namespace

CircularArc lune_bisector(const GeneralizedCircle& c1, const GeneralizedCircle& c2,
                          const ExtendedPoint& corner1, const ExtendedPoint& corner2) {
  return bisect(c1, c2, corner1, corner2, true, true);
}

CircularArc lune_bisector(const GeneralizedCircle& c1, const GeneralizedCircle& c2,
                          const ExtendedPoint& corner1, const ExtendedPoint& corner2,
                          Complex hint) {
  return bisect(c1, c2, corner1, corner2, c1.side_value(hint) < 0.0, c2.side_value(hint) < 0.0);
}

}  // namespace lombardi
