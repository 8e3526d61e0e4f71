#pragma once

// SPQR trees of 2-connected multigraphs by recursive split-pair
// decomposition. Quadratic per level, which is plenty for hand-sized input.

#include <vector>

#include "lombardi/graph.hpp"

namespace lombardi {

enum class SpqrType { S, P, R };

struct SkeletonEdge {
  bool is_virtual = false;
  int id = -1;  // original edge, or index into SpqrTree::links
};

struct SpqrNode {
  SpqrType type = SpqrType::R;
  PlanarEmbeddedGraph skeleton;  // vertex names match the input graph
  std::vector<int> vertex_map;   // skeleton vertex -> input vertex
  std::vector<SkeletonEdge> edges;
  /// Input edges represented by each skeleton edge.
  std::vector<std::vector<int>> covered;
};

/// A tree edge: skeleton edge edge[i] of node node[i], for i = 0, 1.
struct SpqrLink {
  int node[2];
  int edge[2];
};

struct SpqrTree {
  std::vector<SpqrNode> nodes;
  std::vector<SpqrLink> links;
};

/// Throws UnsupportedInput when g is not 2-connected.
SpqrTree spqr(const PlanarEmbeddedGraph& g);

/// Checks the structure expected for cubic input: every link has exactly
/// one S endpoint, S skeletons are even cycles alternating virtual and real
/// edges, P skeletons are three-edge bonds, R skeletons are 3-regular.
/// Throws InternalError with a description on the first violation.
void check_cubic_structure(const SpqrTree& t);

}  // namespace lombardi
