#pragma once

// Conformal geometry of the extended plane: points (including infinity),
// generalized circles, circular arcs, Moebius maps and the triangle centers
// that are equivariant under them.

#include <array>
#include <complex>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace lombardi {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Tolerance for exact geometric identities (relative to the local scale).
inline constexpr double kGeomTol = 1e-10;

inline double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }
inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

/// Reduces an angle to [0, 2pi).
double wrap_angle(double a);

/// A point of the plane or the point at infinity.
class ExtendedPoint {
 public:
  ExtendedPoint() = default;
  ExtendedPoint(Complex z);  // NOLINT: implicit on purpose, finite points are the common case
  ExtendedPoint(double x, double y) : ExtendedPoint(Complex(x, y)) {}

  static ExtendedPoint infinity() {
    ExtendedPoint p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Finite coordinate; throws DegenerateInput for the point at infinity.
  Complex z() const;
  double x() const { return z().real(); }
  double y() const { return z().imag(); }

 private:
  Complex z_{};
  bool infinite_ = false;
};

/// True when both points are infinite, or both finite and within `tol`.
bool near(const ExtendedPoint& a, const ExtendedPoint& b, double tol);

struct Circle {
  Complex center;
  double radius = 1.0;
};

/// The line { x : <normal, x> = offset } with |normal| = 1.
struct Line {
  Complex normal{1.0, 0.0};
  double offset = 0.0;
};

/// A circle or a line (a circle through infinity).
class GeneralizedCircle {
 public:
  GeneralizedCircle() = default;
  GeneralizedCircle(Circle c);  // NOLINT
  GeneralizedCircle(Line l);    // NOLINT

  static GeneralizedCircle circle(Complex center, double radius) { return Circle{center, radius}; }
  /// Line through two distinct finite points.
  static GeneralizedCircle line_through(Complex p, Complex q);

  bool is_line() const { return std::holds_alternative<Line>(shape_); }
  bool is_circle() const { return std::holds_alternative<Circle>(shape_); }
  const Circle& as_circle() const { return std::get<Circle>(shape_); }
  const Line& as_line() const { return std::get<Line>(shape_); }

  /// Signed "power": negative strictly inside the disk (or on the side the
  /// normal points away from), zero on the curve, positive outside.
  double side_value(Complex z) const;
  /// Residual of point incidence, scaled to a distance.
  double distance_to(const ExtendedPoint& p) const;
  bool contains(const ExtendedPoint& p, double tol = kGeomTol) const;
  /// Outward gradient direction of side_value at z.
  Complex outward_normal(Complex z) const;

 private:
  std::variant<Circle, Line> shape_ = Circle{};
};

/// Whether two generalized circles coincide within a relative tolerance.
bool same_support(const GeneralizedCircle& a, const GeneralizedCircle& b, double tol = 1e-9);

/// |d^2 - r1^2 - r2^2| normalized by r1^2 + r2^2; zero for orthogonal circles.
double orthogonality_residual(const Circle& a, const Circle& b);

/// One of the two arcs of `support` joining p and q, selected by `witness`.
struct CircularArc {
  GeneralizedCircle support;
  ExtendedPoint p;
  ExtendedPoint q;
  ExtendedPoint witness;
};

enum class ArcEnd { Start, End };

/// A fractional linear map z -> (az+b)/(cz+d), applied after complex
/// conjugation when `conjugate` is set (orientation-reversing maps).
struct MobiusMap {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};
  bool conjugate = false;

  static MobiusMap identity() { return {}; }
  /// Throws DegenerateInput when ad - bc vanishes after normalization.
  static MobiusMap make(Complex a, Complex b, Complex c, Complex d, bool conjugate = false);

  ExtendedPoint operator()(const ExtendedPoint& p) const;
  MobiusMap inverse() const;
  /// Scales the coefficients so the largest has magnitude one.
  MobiusMap normalized() const;
};

/// (f * g)(z) = f(g(z)).
MobiusMap operator*(const MobiusMap& f, const MobiusMap& g);

MobiusMap mobius_from_triples(const std::array<ExtendedPoint, 3>& src,
                              const std::array<ExtendedPoint, 3>& dst);

ExtendedPoint mobius_apply(const MobiusMap& m, const ExtendedPoint& p);
GeneralizedCircle mobius_apply(const MobiusMap& m, const GeneralizedCircle& c);
CircularArc mobius_apply(const MobiusMap& m, const CircularArc& a);

/// Inversion (reflection, for a line) in the given generalized circle.
MobiusMap inversion_in_circle(const GeneralizedCircle& o);

/// Similarity z -> scale * z + shift.
MobiusMap similarity(Complex scale, Complex shift);

struct Triangle {
  std::array<Complex, 3> v;
  std::array<double, 3> side;   // side[i] is opposite v[i]
  std::array<double, 3> angle;  // interior angle at v[i]

  /// Throws DegenerateInput when the area is negligible.
  static Triangle make(Complex a, Complex b, Complex c);
};

/// First and second isodynamic points; the second is infinite for an
/// equilateral triangle.
std::pair<ExtendedPoint, ExtendedPoint> isodynamic_points(const Triangle& t);

GeneralizedCircle circle_through(const ExtendedPoint& p, const ExtendedPoint& q,
                                 const ExtendedPoint& r);

CircularArc arc_through(const ExtendedPoint& p, const ExtendedPoint& q, const ExtendedPoint& via);

/// The arc that leaves finite point p in direction `dir` and ends at q.
CircularArc arc_from_tangent(Complex p, Complex dir, Complex q);

/// Direction of travel leaving the chosen endpoint along the arc, in [0, 2pi).
double tangent_direction(const CircularArc& a, ArcEnd at);
/// Same as a unit vector.
Complex tangent_vector(const CircularArc& a, ArcEnd at);

/// Angle subtended by a finite-circle arc, or 0 for a line arc.
double subtended_angle(const CircularArc& a);

/// Point at fraction t in [0, 1] of the arc (by angle for circles, by
/// length for segments). Throws for arcs through infinity.
Complex arc_point(const CircularArc& a, double t);

/// Whether a point of the support lies on the arc.
bool on_arc(const CircularArc& a, const ExtendedPoint& z, double tol = 1e-9);

/// Same arc with the witness moved to the arc's midpoint (arcs through
/// infinity keep their witness).
CircularArc recenter_witness(const CircularArc& a);

/// The arc with its endpoints exchanged.
CircularArc reversed(const CircularArc& a);

struct ArcIntersection {
  std::vector<ExtendedPoint> points;
  bool overlap = false;
};

ArcIntersection arc_intersections(const CircularArc& a, const CircularArc& b);

/// Arc from corner1 to corner2 meeting both orthogonal circles at 45
/// degrees, inside the lune containing both disks' interiors.
CircularArc lune_bisector(const GeneralizedCircle& c1, const GeneralizedCircle& c2,
                          const ExtendedPoint& corner1, const ExtendedPoint& corner2);

/// As above, selecting the lune that contains `hint`.
CircularArc lune_bisector(const GeneralizedCircle& c1, const GeneralizedCircle& c2,
                          const ExtendedPoint& corner1, const ExtendedPoint& corner2,
                          Complex hint);

}  // namespace lombardi
