#include "lombardi/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "lombardi/error.hpp"

namespace lombardi {

int PlanarEmbeddedGraph::add_vertex(std::string name) {
  if (index_.count(name)) throw ParseError("duplicate vertex '" + name + "'");
  const int v = num_vertices();
  index_.emplace(name, v);
  names_.push_back(std::move(name));
  rot_.emplace_back();
  return v;
}

int PlanarEmbeddedGraph::add_edge(int u, int v) {
  const int e = num_edges();
  tail_.push_back(u);
  tail_.push_back(v);
  pos_.push_back(static_cast<int>(rot_[u].size()));
  rot_[u].push_back(2 * e);
  pos_.push_back(static_cast<int>(rot_[v].size()));
  rot_[v].push_back(2 * e + 1);
  return e;
}

int PlanarEmbeddedGraph::other(int e, int v) const {
  return tail_[2 * e] == v ? tail_[2 * e + 1] : tail_[2 * e];
}

std::optional<int> PlanarEmbeddedGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void PlanarEmbeddedGraph::set_rotation(int v, std::vector<int> darts) {
  std::vector<int> a = darts, b = rot_[v];
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw InternalError("rotation is not a permutation of the incident darts");
  rot_[v] = std::move(darts);
  for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) pos_[rot_[v][i]] = i;
}

int PlanarEmbeddedGraph::cw_next(int d) const {
  const auto& r = rot_[tail_[d]];
  return r[(pos_[d] + 1) % r.size()];
}

int PlanarEmbeddedGraph::ccw_next(int d) const {
  const auto& r = rot_[tail_[d]];
  return r[(pos_[d] + r.size() - 1) % r.size()];
}

int connected_components(const PlanarEmbeddedGraph& g, std::vector<int>& label) {
  label.assign(g.num_vertices(), -1);
  int count = 0;
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int d : g.rotation(v)) {
        const int w = g.head(d);
        if (label[w] < 0) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

FaceSet faces(const PlanarEmbeddedGraph& g) {
  FaceSet f;
  f.face_of.assign(g.num_darts(), -1);
  for (int d0 = 0; d0 < g.num_darts(); ++d0) {
    if (f.face_of[d0] >= 0) continue;
    const int id = f.size();
    std::vector<int> walk;
    int d = d0;
    do {
      if (f.face_of[d] >= 0) throw InternalError("face walk re-entered a traced dart");
      f.face_of[d] = id;
      walk.push_back(d);
      d = g.face_next(d);
    } while (d != d0);
    f.walks.push_back(std::move(walk));
  }

  std::vector<int> label;
  const int nc = connected_components(g, label);
  std::vector<long> v(nc, 0), e(nc, 0), fc(nc, 0);
  for (int x = 0; x < g.num_vertices(); ++x) ++v[label[x]];
  for (int x = 0; x < g.num_edges(); ++x) ++e[label[g.tail(2 * x)]];
  for (const auto& w : f.walks) ++fc[label[g.tail(w.front())]];
  for (int c = 0; c < nc; ++c) {
    if (e[c] == 0) continue;  // isolated vertex, nothing to embed
    if (v[c] - e[c] + fc[c] != 2) {
      throw NonplanarRotation("rotation system is not planar: V - E + F = " +
                              std::to_string(v[c] - e[c] + fc[c]));
    }
  }
  return f;
}

namespace {

std::string smallest_name(const PlanarEmbeddedGraph& g, const std::vector<int>& walk) {
  std::string best = g.name(g.tail(walk.front()));
  for (int d : walk) best = std::min(best, g.name(g.tail(d)));
  return best;
}

}  // namespace

int outer_face(const PlanarEmbeddedGraph& g, const FaceSet& f) {
  if (g.outer_dart) return f.face_of.at(*g.outer_dart);
  int best = 0;
  for (int i = 1; i < f.size(); ++i) {
    const auto& a = f.walks[i];
    const auto& b = f.walks[best];
    if (a.size() > b.size() ||
        (a.size() == b.size() && smallest_name(g, a) < smallest_name(g, b))) {
      best = i;
    }
  }
  return best;
}

std::optional<int> face_with_vertices(const PlanarEmbeddedGraph& g, const FaceSet& f,
                                      const std::vector<std::string>& names) {
  std::vector<std::string> want = names;
  std::sort(want.begin(), want.end());
  for (int i = 0; i < f.size(); ++i) {
    std::vector<std::string> have;
    for (int d : f.walks[i]) have.push_back(g.name(g.tail(d)));
    std::sort(have.begin(), have.end());
    if (have == want) return i;
  }
  return std::nullopt;
}

PlanarEmbeddedGraph parse_graph(std::string_view text, int max_degree) {
  std::vector<std::pair<std::string, std::vector<std::string>>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (static_cast<int>(toks.size()) - 1 > max_degree) {
      throw UnsupportedInput("line " + std::to_string(lineno) + ": vertex '" + toks[0] +
                             "' has degree " + std::to_string(toks.size() - 1) +
                             ", above the limit of " + std::to_string(max_degree));
    }
    lines.emplace_back(toks[0], std::vector<std::string>(toks.begin() + 1, toks.end()));
  }

  PlanarEmbeddedGraph g;
  for (const auto& [name, nbrs] : lines) g.add_vertex(name);

  // slot[u][i] = dart of u placed at position i of its clockwise list
  std::vector<std::vector<int>> slot(g.num_vertices());
  for (int u = 0; u < g.num_vertices(); ++u) slot[u].assign(lines[u].second.size(), -1);

  auto positions = [&](int u, const std::string& target) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(lines[u].second.size()); ++i) {
      if (lines[u].second[i] == target) out.push_back(i);
    }
    return out;
  };

  for (int u = 0; u < g.num_vertices(); ++u) {
    std::map<std::string, bool> done;
    for (const auto& vn : lines[u].second) {
      if (done[vn]) continue;
      done[vn] = true;
      auto vi = g.find(vn);
      if (!vi) throw ParseError("vertex '" + g.name(u) + "' lists unknown neighbour '" + vn + "'");
      const int v = *vi;
      if (v < u) continue;
      const auto pu = positions(u, vn);
      if (v == u) {
        if (pu.size() % 2 != 0) throw ParseError("self-loop at '" + vn + "' listed an odd number of times");
        for (std::size_t k = 0; k < pu.size(); k += 2) {
          const int e = g.add_edge(u, u);
          slot[u][pu[k]] = 2 * e;
          slot[u][pu[k + 1]] = 2 * e + 1;
        }
        continue;
      }
      const auto pv = positions(v, g.name(u));
      if (pu.size() != pv.size()) {
        throw ParseError("asymmetric adjacency between '" + g.name(u) + "' and '" + vn + "'");
      }
      // parallel edges: the k-th listing at u pairs with the last-k-th at v,
      // the only choice that keeps a bond planar
      for (std::size_t k = 0; k < pu.size(); ++k) {
        const int e = g.add_edge(u, v);
        slot[u][pu[k]] = 2 * e;
        slot[v][pv[pv.size() - 1 - k]] = 2 * e + 1;
      }
    }
  }
  for (int u = 0; u < g.num_vertices(); ++u) g.set_rotation(u, slot[u]);
  return g;
}

std::string serialize_graph(const PlanarEmbeddedGraph& g) {
  std::string out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    out += g.name(v);
    for (int d : g.rotation(v)) out += " " + g.name(g.head(d));
    out += "\n";
  }
  return out;
}

namespace {

// Articulation points of g with vertex `skip` deleted (skip = -1 for none).
// Returns true when the remaining graph is connected and has none.
bool biconnected_without(const PlanarEmbeddedGraph& g, int skip) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0, root = -1;
  for (int v = 0; v < n; ++v) {
    if (v != skip) {
      root = v;
      break;
    }
  }
  if (root < 0) return true;
  bool ok = true;
  int root_children = 0;
  // iterative DFS over (vertex, parent edge, rotation index)
  struct Frame {
    int v, parent_edge, i;
  };
  std::vector<Frame> stack{{root, -1, 0}};
  disc[root] = low[root] = timer++;
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const auto& rot = g.rotation(fr.v);
    if (fr.i < static_cast<int>(rot.size())) {
      const int d = rot[fr.i++];
      const int e = PlanarEmbeddedGraph::edge_of(d);
      const int w = g.head(d);
      if (w == skip || e == fr.parent_edge) continue;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        if (fr.v == root) ++root_children;
        stack.push_back({w, e, 0});
      } else {
        low[fr.v] = std::min(low[fr.v], disc[w]);
      }
    } else {
      const int v = fr.v;
      stack.pop_back();
      if (!stack.empty()) {
        const int p = stack.back().v;
        low[p] = std::min(low[p], low[v]);
        if (p != root && low[v] >= disc[p]) ok = false;
      }
    }
  }
  if (root_children > 1) ok = false;
  for (int v = 0; v < n; ++v) {
    if (v != skip && disc[v] < 0) return false;
  }
  return ok;
}

}  // namespace

bool is_biconnected(const PlanarEmbeddedGraph& g) {
  if (g.num_vertices() < 2) return false;
  return biconnected_without(g, -1);
}

bool is_triconnected(const PlanarEmbeddedGraph& g) {
  if (g.num_vertices() < 4 || !is_biconnected(g)) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!biconnected_without(g, v)) return false;
  }
  return true;
}

PlanarEmbeddedGraph dual(const PlanarEmbeddedGraph& g, const FaceSet& f) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 3) throw UnsupportedInput("dual requires a cubic graph");
  }
  if (!is_triconnected(g)) throw UnsupportedInput("dual requires a 3-connected graph");
  PlanarEmbeddedGraph d;
  for (int i = 0; i < f.size(); ++i) d.add_vertex("f" + std::to_string(i));
  for (int e = 0; e < g.num_edges(); ++e) d.add_edge(f.face_of[2 * e], f.face_of[2 * e + 1]);
  for (int i = 0; i < f.size(); ++i) {
    std::vector<int> r(f.walks[i].rbegin(), f.walks[i].rend());
    d.set_rotation(i, r);
  }
  return d;
}

Subgraph edge_subgraph(const PlanarEmbeddedGraph& g, const std::vector<int>& edges) {
  Subgraph s;
  std::vector<int> vnew(g.num_vertices(), -1);
  std::vector<int> used;
  for (int e : edges) {
    used.push_back(g.tail(2 * e));
    used.push_back(g.head(2 * e));
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (int v : used) {
    vnew[v] = s.graph.add_vertex(g.name(v));
    s.vertex_map.push_back(v);
  }
  std::vector<int> dnew(g.num_darts(), -1);
  for (int e : edges) {
    const int ne = s.graph.add_edge(vnew[g.tail(2 * e)], vnew[g.head(2 * e)]);
    dnew[2 * e] = 2 * ne;
    dnew[2 * e + 1] = 2 * ne + 1;
    s.edge_map.push_back(e);
  }
  for (int v : used) {
    std::vector<int> r;
    for (int d : g.rotation(v)) {
      if (dnew[d] >= 0) r.push_back(dnew[d]);
    }
    s.graph.set_rotation(vnew[v], r);
  }
  return s;
}

Suppressed suppress_degree_two(const PlanarEmbeddedGraph& g) {
  Suppressed s;
  std::vector<int> vnew(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 1) throw DegenerateInput("degree-1 vertex '" + g.name(v) + "' cannot be suppressed");
    if (g.degree(v) != 2) {
      vnew[v] = s.graph.add_vertex(g.name(v));
      s.vertex_map.push_back(v);
    }
  }
  std::vector<char> seen(g.num_edges(), 0);
  std::vector<int> dnew(g.num_darts(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (vnew[v] < 0) continue;
    for (int d0 : g.rotation(v)) {
      if (seen[PlanarEmbeddedGraph::edge_of(d0)]) continue;
      std::vector<int> verts{v}, es;
      int d = d0;
      while (true) {
        seen[PlanarEmbeddedGraph::edge_of(d)] = 1;
        es.push_back(PlanarEmbeddedGraph::edge_of(d));
        const int w = g.head(d);
        verts.push_back(w);
        if (vnew[w] >= 0) break;
        d = g.cw_next(PlanarEmbeddedGraph::twin(d));  // the other dart at a degree-2 vertex
      }
      const int ne = s.graph.add_edge(vnew[v], vnew[verts.back()]);
      dnew[d0] = 2 * ne;
      dnew[PlanarEmbeddedGraph::twin(d)] = 2 * ne + 1;
      s.path.push_back(std::move(verts));
      s.path_edges.push_back(std::move(es));
    }
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!seen[e]) throw DegenerateInput("component is a bare cycle; draw it as a circle instead");
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (vnew[v] < 0) continue;
    std::vector<int> r;
    for (int d : g.rotation(v)) r.push_back(dnew[d]);
    s.graph.set_rotation(vnew[v], r);
  }
  return s;
}

PlanarEmbeddedGraph restore(const Suppressed& s, const PlanarEmbeddedGraph& original) {
  PlanarEmbeddedGraph g;
  std::vector<int> vnew(original.num_vertices(), -1);
  auto vertex = [&](int old) {
    if (vnew[old] < 0) vnew[old] = g.add_vertex(original.name(old));
    return vnew[old];
  };
  for (int old : s.vertex_map) vertex(old);
  // first and last restored dart of each suppressed edge
  std::vector<int> first(s.graph.num_darts(), -1);
  for (int e = 0; e < s.graph.num_edges(); ++e) {
    const auto& p = s.path[e];
    int prev = vertex(p[0]);
    for (std::size_t i = 1; i < p.size(); ++i) {
      const int cur = vertex(p[i]);
      const int re = g.add_edge(prev, cur);
      if (i == 1) first[2 * e] = 2 * re;
      if (i + 1 == p.size()) first[2 * e + 1] = 2 * re + 1;
      prev = cur;
    }
  }
  for (int v = 0; v < s.graph.num_vertices(); ++v) {
    std::vector<int> r;
    for (int d : s.graph.rotation(v)) r.push_back(first[d]);
    g.set_rotation(vnew[s.vertex_map[v]], r);
  }
  return g;
}

BlockForest blocks_and_bridges(const PlanarEmbeddedGraph& g) {
  const int n = g.num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> is_bridge(g.num_edges(), 0);
  int timer = 0;
  struct Frame {
    int v, parent_edge, i;
  };
  for (int s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> stack{{s, -1, 0}};
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      const auto& rot = g.rotation(fr.v);
      if (fr.i < static_cast<int>(rot.size())) {
        const int d = rot[fr.i++];
        const int e = PlanarEmbeddedGraph::edge_of(d);
        const int w = g.head(d);
        if (e == fr.parent_edge) continue;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[fr.v] = std::min(low[fr.v], disc[w]);
        }
      } else {
        const int v = fr.v, pe = fr.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          const int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) is_bridge[pe] = 1;
        }
      }
    }
  }

  BlockForest bf;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  std::vector<char> touched(n, 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (is_bridge[e]) {
      bf.bridges.push_back(e);
      continue;
    }
    const int a = g.tail(2 * e), b = g.head(2 * e);
    touched[a] = touched[b] = 1;
    parent[root(a)] = root(b);
  }
  std::map<int, int> block_of_root;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (is_bridge[e]) continue;
    const int r = root(g.tail(2 * e));
    auto [it, fresh] = block_of_root.emplace(r, static_cast<int>(bf.blocks.size()));
    if (fresh) bf.blocks.emplace_back();
    bf.blocks[it->second].push_back(e);
  }
  for (int v = 0; v < n; ++v) {
    if (!touched[v]) bf.isolated.push_back(v);
  }
  return bf;
}

}  // namespace lombardi
