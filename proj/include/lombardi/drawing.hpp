#pragma once

// Lombardi drawings: every edge a circular arc (or segment), with the arcs
// at each vertex spread at equal angles. Constructions for 3-connected
// cubic graphs, gluing along SPQR trees and bridges, medial graphs, and a
// verifier.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lombardi/error.hpp"
#include "lombardi/geometry.hpp"
#include "lombardi/graph.hpp"
#include "lombardi/mobius_opt.hpp"
#include "lombardi/packing.hpp"
#include "lombardi/spqr.hpp"

namespace lombardi {

struct LombardiDrawing {
  /// The drawn graph; its rotation is the clockwise order of arc-ends.
  PlanarEmbeddedGraph graph;
  std::vector<ExtendedPoint> position;  // per vertex
  /// Per edge; arc[e].p sits at the tail of dart 2e and arc[e].q at its head.
  std::vector<CircularArc> arc;
  /// Whether the witness of the arc is a tangency point of the packing.
  std::vector<char> tangency_witness;
  /// Caller ids carried through transformations and gluing. Default to the
  /// vertex / edge index.
  std::vector<int> vertex_tag;
  std::vector<int> edge_tag;

  /// Adds a vertex or an arc keeping the per-element vectors in step.
  int add_vertex(const std::string& name, ExtendedPoint at, int tag);
  int add_arc(int u, int v, const CircularArc& a, int tag, bool tangency = false);
  int find_vertex_tag(int tag) const;
  int find_edge_tag(int tag) const;
};

struct VerificationReport {
  double max_endpoint_residual = 0.0;
  double max_angle_residual = 0.0;  // radians
  std::vector<std::pair<int, int>> crossings;   // edge pairs
  std::vector<std::pair<int, int>> coincident;  // vertex pairs
  bool endpoints_ok = true;
  bool angles_ok = true;
  bool planar_ok = true;
  bool distinct_ok = true;
  bool pass = true;
  /// Vertices whose geometric arc order differs from the graph rotation.
  /// Reported but not part of `pass`.
  int rotation_mismatches = 0;

  std::string summary() const;
};

/// Verification failed on a drawing that a construction should have made
/// valid.
class VerificationError : public InternalError {
 public:
  VerificationError(const std::string& what, VerificationReport report)
      : InternalError(what + ": " + report.summary()), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

/// Checks endpoint coincidence, equal angular spacing, absence of
/// crossings (an O(E^2) pairwise test) and distinct vertex positions.
/// `g` must have the same vertex and edge numbering as d.graph.
VerificationReport verify(const LombardiDrawing& d, const PlanarEmbeddedGraph& g,
                          double tol_angle = 1e-6, double tol_geom = 1e-9);
VerificationReport verify(const LombardiDrawing& d, double tol_angle = 1e-6, double tol_geom = 1e-9);

/// Throws VerificationError unless verify passes.
void require_verified(const LombardiDrawing& d, const std::string& what, double tol_angle = 1e-6);

/// Image of d under m. Orientation-reversing maps also reverse the
/// rotations so they keep matching the geometry.
LombardiDrawing transformed(const LombardiDrawing& d, const MobiusMap& m);

/// Clockwise order of the darts at v read off the geometry.
std::vector<int> geometric_rotation(const LombardiDrawing& d, int v);

/// Replaces every rotation of d.graph by the geometric one.
void adopt_geometric_rotation(LombardiDrawing& d);

/// Minimal axis-aligned box of all vertices and arcs, as {min, max}.
std::pair<Complex, Complex> bounding_box(const LombardiDrawing& d);

/// Numeric knobs for the construction pipelines.
struct DrawOptions {
  PackingOptions pack;
  OptimizeOptions opt;
  double angle_tol = 1e-6;
  double geom_tol = 1e-9;
  double expand_eps = 0.05;
  std::optional<int> outer_face;  // face index of the input graph
};

/// Vertex positions and arcs for a 3-connected cubic plane graph from the
/// circles of its faces (any Moebius image of a tangency packing of the
/// dual). Vertices go to isodynamic points of the tangency triangles and
/// each arc passes through the tangency point of its two faces.
LombardiDrawing drawing_from_face_circles(const PlanarEmbeddedGraph& g, const FaceSet& f,
                                          const std::vector<GeneralizedCircle>& face_circle);

/// Packed, normalized and optimized circles of the faces of g, outer face
/// first mapped to the unit circle.
struct FacePacking {
  FaceSet faces;
  int outer = -1;
  std::vector<GeneralizedCircle> circle;  // per face
  RadiusAssignment radii;
  OptimizeResult optimization;
};
FacePacking pack_faces(const PlanarEmbeddedGraph& g, const DrawOptions& opt = {});

/// Lombardi drawing of a 3-connected cubic plane graph from the optimized
/// packing of its dual.
LombardiDrawing draw_3connected(const PlanarEmbeddedGraph& g, const DrawOptions& opt = {});

/// Inversion centered ε·|e| off the midpoint of arc e on the side of face
/// `side_dart` (the face left of that dart, a dart of e; default dart 2e),
/// followed by a reflection so orientation is kept. The face becomes the
/// outer face and the arc of e covers at least 2π(1 - ε) of its circle.
LombardiDrawing expand_virtual_edge(const LombardiDrawing& d, int e, double eps = 0.05,
                                    std::optional<int> side_dart = std::nullopt);
/// The map used by expand_virtual_edge.
MobiusMap expansion_map(const LombardiDrawing& d, int e, double eps, int side_dart);

/// Bond with three edges: vertices at (-1, 0) and (1, 0), a segment and two
/// arcs leaving at ±120° from it.
LombardiDrawing p_node_drawing();

/// K_{1,3}: center at the origin, leaves at distance 1 in directions 90°,
/// 210° and 330°.
LombardiDrawing claw_drawing();

/// Replaces arc e by k+1 subarcs of the same circle, split at equal
/// angles. New vertices get the given names and tags; the new edges after
/// the first get tags from `edge_tags` (the first keeps e's tag).
LombardiDrawing subdivide_arc(const LombardiDrawing& d, int e, const std::vector<std::string>& names,
                              const std::vector<int>& vertex_tags = {}, const std::vector<int>& edge_tags = {});

/// Specification of the stubs hung off one edge by attach_bridge_stubs.
struct StubRequest {
  int edge = -1;
  /// Dart of the edge whose left face receives the stubs.
  int side_dart = -1;
  /// Per stub, in order along side_dart: junction name and tag, leaf name
  /// and tag, tag of the stub edge.
  struct Stub {
    std::string junction;
    int junction_tag = -1;
    std::string leaf;
    int leaf_tag = -1;
    int stub_tag = -1;
  };
  std::vector<Stub> stubs;
  /// Tags for the k+1 chain arcs in order along side_dart.
  std::vector<int> chain_tags;
};

/// Replaces the edge by a chain of arcs through junctions on the inset arc
/// that meets it at 30° inside the face, with a straight stub from every
/// junction to a new degree-1 vertex.
LombardiDrawing attach_bridge_stubs(const LombardiDrawing& d, const StubRequest& req);

/// Convenience form with generated names and tags: k stubs on edge e into
/// the face left of `side_dart`.
LombardiDrawing attach_bridge_stubs(const LombardiDrawing& d, int e, int side_dart, int k);

/// One component of an S-node gluing: a drawing and its virtual arc.
struct GlueComponent {
  LombardiDrawing drawing;
  int virtual_edge = -1;
};

/// Glues the drawings around an S node. Vertex tags of the components and
/// the skeleton's vertex_map must agree; each component's virtual arc is
/// tagged -1 - link id. Real cycle edges are tagged with their input ids.
LombardiDrawing glue_s_node(const std::vector<GlueComponent>& components, const SpqrNode& cycle,
                            double eps = 0.05);

/// Joins two drawings along a bridge. Each holds an arc tagged `bridge_tag`
/// ending at a degree-1 vertex. The host stays where it is; the guest is
/// inverted if its stub is walled in, then shrunk into the free room along
/// the host's stub and joined to it by a segment tagged bridge_tag.
LombardiDrawing glue_bridge(const LombardiDrawing& host, const LombardiDrawing& guest, int bridge_tag);

/// Any embedded planar graph of maximum degree 3 that has a drawing.
LombardiDrawing draw_subcubic(const PlanarEmbeddedGraph& g, const DrawOptions& opt = {});

/// Drawing of the medial graph of a 3-connected plane graph from its
/// orthogonal primal-dual packing. Vertex i of the result is edge i of g.
LombardiDrawing draw_medial(const PlanarEmbeddedGraph& g, const DrawOptions& opt = {});

}  // namespace lombardi
