#pragma once

// Embedded planar multigraphs stored as darts with a clockwise rotation
// system, plus face tracing, duals and the decompositions used by the
// drawing pipelines.

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace lombardi {

/// Darts 2e and 2e+1 are the two orientations of edge e; dart 2e runs from
/// the first endpoint given to add_edge.
class PlanarEmbeddedGraph {
 public:
  int add_vertex(std::string name);
  /// Appends the new darts at the end of both rotations.
  int add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(tail_.size() / 2); }
  int num_darts() const { return static_cast<int>(tail_.size()); }

  static int twin(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  int tail(int d) const { return tail_[d]; }
  int head(int d) const { return tail_[d ^ 1]; }
  /// Endpoint of edge e other than v (v itself for loops).
  int other(int e, int v) const;

  const std::string& name(int v) const { return names_[v]; }
  std::optional<int> find(std::string_view name) const;

  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  /// Outgoing darts of v in clockwise order.
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  /// Replaces v's rotation with a permutation of its darts.
  void set_rotation(int v, std::vector<int> darts);
  int rotation_index(int d) const { return pos_[d]; }
  /// Next outgoing dart clockwise around tail(d).
  int cw_next(int d) const;
  int ccw_next(int d) const;
  /// Next dart of the facial walk containing d.
  int face_next(int d) const { return cw_next(twin(d)); }

  /// A dart on the designated outer face, if any.
  std::optional<int> outer_dart;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<int> tail_;
  std::vector<std::vector<int>> rot_;
  std::vector<int> pos_;
};

struct FaceSet {
  std::vector<std::vector<int>> walks;  // darts in walk order
  std::vector<int> face_of;             // per dart
  int size() const { return static_cast<int>(walks.size()); }
};

/// Traces facial walks; throws NonplanarRotation when some connected
/// component fails V - E + F = 2.
FaceSet faces(const PlanarEmbeddedGraph& g);

/// Component label per vertex; returns the number of components.
int connected_components(const PlanarEmbeddedGraph& g, std::vector<int>& label);

/// Face index to treat as outer: the designated one if set, otherwise the
/// longest walk, ties broken by the smallest incident vertex name.
int outer_face(const PlanarEmbeddedGraph& g, const FaceSet& f);

/// Face whose vertex set equals the given names (in any order), if any.
std::optional<int> face_with_vertices(const PlanarEmbeddedGraph& g, const FaceSet& f,
                                      const std::vector<std::string>& names);

/// Parses the line-per-vertex clockwise neighbour format.
PlanarEmbeddedGraph parse_graph(std::string_view text, int max_degree = 3);
std::string serialize_graph(const PlanarEmbeddedGraph& g);

bool is_biconnected(const PlanarEmbeddedGraph& g);
bool is_triconnected(const PlanarEmbeddedGraph& g);

/// Dual of a 3-connected cubic plane graph. Vertex i of the result is face i
/// of `f` and dual edge e crosses primal edge e, with dual dart 2e running
/// from the face left of primal dart 2e to the face on its right.
PlanarEmbeddedGraph dual(const PlanarEmbeddedGraph& g, const FaceSet& f);

/// The graph spanned by `edges`, keeping the rotation order of g.
/// `vertex_map[new] = old`, `edge_map[new] = old`.
struct Subgraph {
  PlanarEmbeddedGraph graph;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};
Subgraph edge_subgraph(const PlanarEmbeddedGraph& g, const std::vector<int>& edges);

struct Suppressed {
  PlanarEmbeddedGraph graph;
  std::vector<int> vertex_map;             // new vertex -> original vertex
  std::vector<std::vector<int>> path;      // per new edge: original vertices along dart 2e, endpoints included
  std::vector<std::vector<int>> path_edges;  // per new edge: original edges along dart 2e
};

/// Smooths every degree-2 vertex. Throws DegenerateInput on degree-1
/// vertices or on a component that is a bare cycle.
Suppressed suppress_degree_two(const PlanarEmbeddedGraph& g);
/// Re-subdivides; reproduces the original graph including names and rotations.
PlanarEmbeddedGraph restore(const Suppressed& s, const PlanarEmbeddedGraph& original);

struct BlockForest {
  std::vector<int> bridges;              // edge ids
  std::vector<std::vector<int>> blocks;  // edge ids of each 2-edge-connected piece
  std::vector<int> isolated;             // vertices left without edges once bridges go
};

BlockForest blocks_and_bridges(const PlanarEmbeddedGraph& g);

}  // namespace lombardi
