#pragma once

// Circle packings: Collins-Stephenson relaxation of radii, center layout,
// and orthogonal primal-dual packings of 3-connected plane graphs.

#include <map>
#include <optional>
#include <vector>

#include "lombardi/geometry.hpp"
#include "lombardi/graph.hpp"

namespace lombardi {

struct PackingOptions {
  double tol = 1e-10;
  long max_iter = 1000000;  // sweeps
};

/// Angle at the center of circle v in the triangle of centers of three
/// mutually tangent circles with radii rv, ru, rw.
double neighbor_angle(double rv, double ru, double rw);

struct RadiusAssignment {
  std::vector<double> radius;  // per vertex
  std::vector<char> boundary;  // fixed radii
  /// Largest interior angular defect after each sweep; front() is the
  /// defect of the starting radii.
  std::vector<double> residual_history;
  long sweeps = 0;
};

/// Sum of neighbor_angle over consecutive neighbours of v. Every pair of
/// consecutive darts at v must bound a triangular face.
double angle_sum(const PlanarEmbeddedGraph& t, const std::vector<double>& radius, int v);

/// Radii for the triangulation t with the given boundary radii fixed, so
/// every other vertex has angle sum 2pi within opt.tol. Throws
/// ConvergenceFailure after opt.max_iter sweeps.
RadiusAssignment pack_triangulation(const PlanarEmbeddedGraph& t,
                                    const std::map<int, double>& boundary,
                                    const PackingOptions& opt = {},
                                    const std::optional<std::vector<double>>& initial = std::nullopt);

struct CirclePacking {
  std::vector<Circle> circles;            // per vertex
  std::vector<ExtendedPoint> tangency;    // per edge
};

/// Places circles face by face starting from seed dart u -> v: u at
/// (-r_u, 0) and v at (r_v, 0). The face `skip_face` (usually the outer
/// triangle) is not used for propagation. Throws InternalError when the
/// result violates tangency or disjointness at 10 * tol.
CirclePacking layout_centers(const PlanarEmbeddedGraph& t, const std::vector<double>& radius,
                             int seed_dart, int skip_face = -1, double tol = 1e-10);

/// Largest tangency residual ||c_u - c_v| - (r_u + r_v)| / (r_u + r_v)
/// over edges, and largest overlap (r_u + r_v - |c_u - c_v|) over
/// non-adjacent pairs, clipped at zero.
struct PackingResiduals {
  double tangency = 0.0;
  double overlap = 0.0;
};
PackingResiduals packing_residuals(const PlanarEmbeddedGraph& t, const std::vector<Circle>& circles);

/// Orthogonal packing of a 3-connected plane graph and its dual. The
/// outer face circle is the unit circle and contains everything else.
struct PrimalDualPacking {
  FaceSet faces;
  int outer = -1;
  std::vector<GeneralizedCircle> vertex_circle;
  std::vector<GeneralizedCircle> face_circle;
  std::vector<Complex> crossing;  // per edge
  /// The working frame: the crossing point of the first outer edge sits at
  /// infinity, the outer face is the line Im z = 0 with the rest above it.
  /// The endpoints of that edge and the face across it are lines too.
  std::vector<GeneralizedCircle> line_vertex_circle;
  std::vector<GeneralizedCircle> line_face_circle;
  std::vector<ExtendedPoint> line_crossing;
  MobiusMap to_disk;
  std::vector<double> residual_history;
};

PrimalDualPacking primal_dual_pack(const PlanarEmbeddedGraph& g, int outer_face,
                                   const PackingOptions& opt = {});

/// Largest incidence orthogonality residual |d^2 - r1^2 - r2^2| / (r1^2 + r2^2)
/// and tangency residuals between adjacent vertices and adjacent faces,
/// over the finite circles.
struct PrimalDualResiduals {
  double orthogonality = 0.0;
  double vertex_tangency = 0.0;
  double face_tangency = 0.0;
  double crossing = 0.0;  // spread of the candidate crossing points per edge
};
PrimalDualResiduals primal_dual_residuals(const PlanarEmbeddedGraph& g, const PrimalDualPacking& p);

}  // namespace lombardi
