#include "lombardi/spqr.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "lombardi/error.hpp"

namespace lombardi {

namespace {

struct WEdge {
  int u, v;
  bool virt;
  int id;
};

struct Comp {
  std::vector<WEdge> edges;
  SpqrType type = SpqrType::R;
  bool alive = true;
};

std::vector<int> vertices_of(const std::vector<WEdge>& es) {
  std::vector<int> vs;
  for (const auto& e : es) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// Separation classes of the pair {a, b}: edge indices grouped by the
// component of the rest they touch; edges joining a and b stand alone.
std::vector<std::vector<int>> separation_classes(const std::vector<WEdge>& es,
                                                 const std::vector<int>& vs, int a, int b) {
  std::map<int, int> local;
  for (int v : vs) local.emplace(v, static_cast<int>(local.size()));
  std::vector<int> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  auto inner = [&](int x) { return x != a && x != b; };
  for (const auto& e : es) {
    if (inner(e.u) && inner(e.v)) parent[root(local[e.u])] = root(local[e.v]);
  }
  std::map<int, int> class_of_root;
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < static_cast<int>(es.size()); ++i) {
    const auto& e = es[i];
    if (!inner(e.u) && !inner(e.v)) {
      classes.push_back({i});
      continue;
    }
    const int r = root(local[inner(e.u) ? e.u : e.v]);
    auto [it, fresh] = class_of_root.emplace(r, static_cast<int>(classes.size()));
    if (fresh) classes.emplace_back();
    classes[it->second].push_back(i);
  }
  return classes;
}

bool is_split(const std::vector<std::vector<int>>& classes) {
  if (classes.size() >= 3) return true;
  return classes.size() == 2 && classes[0].size() > 1 && classes[1].size() > 1;
}

void decompose(const std::vector<WEdge>& start, int& next_virtual, std::vector<Comp>& out) {
  std::vector<std::vector<WEdge>> work{start};
  while (!work.empty()) {
    std::vector<WEdge> es = std::move(work.back());
    work.pop_back();
    const auto vs = vertices_of(es);
    std::map<int, int> deg;
    for (const auto& e : es) {
      ++deg[e.u];
      ++deg[e.v];
    }
    if (vs.size() == 2) {
      out.push_back({es, es.size() >= 3 ? SpqrType::P : SpqrType::S, true});
      continue;
    }
    if (std::all_of(deg.begin(), deg.end(), [](const auto& kv) { return kv.second == 2; })) {
      out.push_back({es, SpqrType::S, true});
      continue;
    }
    bool split = false;
    for (std::size_t i = 0; i < vs.size() && !split; ++i) {
      for (std::size_t j = i + 1; j < vs.size() && !split; ++j) {
        auto classes = separation_classes(es, vs, vs[i], vs[j]);
        if (!is_split(classes)) continue;
        std::sort(classes.begin(), classes.end(),
                  [](const auto& x, const auto& y) { return x.size() < y.size(); });
        std::vector<char> in_first(es.size(), 0);
        std::size_t taken = 0;
        for (std::size_t c = 0; c < classes.size() && taken < 2; ++c) {
          for (int k : classes[c]) in_first[k] = 1;
          taken += classes[c].size();
        }
        const int vid = next_virtual++;
        std::vector<WEdge> first, second;
        for (std::size_t k = 0; k < es.size(); ++k) (in_first[k] ? first : second).push_back(es[k]);
        first.push_back({vs[i], vs[j], true, vid});
        second.push_back({vs[i], vs[j], true, vid});
        work.push_back(std::move(first));
        work.push_back(std::move(second));
        split = true;
      }
    }
    if (!split) out.push_back({es, SpqrType::R, true});
  }
}

// Glues comps of equal type S or P sharing a virtual edge.
void merge_same_type(std::vector<Comp>& comps) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, std::vector<int>> owners;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
      if (!comps[c].alive) continue;
      for (const auto& e : comps[c].edges) {
        if (e.virt) owners[e.id].push_back(c);
      }
    }
    for (const auto& [vid, cs] : owners) {
      if (cs.size() != 2) throw InternalError("virtual edge without exactly two owners");
      Comp& a = comps[cs[0]];
      Comp& b = comps[cs[1]];
      if (a.type != b.type || a.type == SpqrType::R) continue;
      std::vector<WEdge> merged;
      for (const auto& e : a.edges) {
        if (!(e.virt && e.id == vid)) merged.push_back(e);
      }
      for (const auto& e : b.edges) {
        if (!(e.virt && e.id == vid)) merged.push_back(e);
      }
      a.edges = std::move(merged);
      b.alive = false;
      changed = true;
      break;
    }
  }
}

}  // namespace

SpqrTree spqr(const PlanarEmbeddedGraph& g) {
  if (!is_biconnected(g)) throw UnsupportedInput("SPQR tree needs a 2-connected graph");
  std::vector<WEdge> all;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (g.tail(2 * e) == g.head(2 * e)) throw UnsupportedInput("SPQR tree input has a self-loop");
    all.push_back({g.tail(2 * e), g.head(2 * e), false, e});
  }
  std::vector<Comp> comps;
  int next_virtual = 0;
  decompose(all, next_virtual, comps);
  merge_same_type(comps);

  SpqrTree t;
  std::map<int, std::vector<std::pair<int, int>>> occ;  // virtual id -> (node, skeleton edge)
  for (const auto& c : comps) {
    if (!c.alive) continue;
    const int id = static_cast<int>(t.nodes.size());
    SpqrNode node;
    node.type = c.type;
    std::map<int, int> local;
    for (int v : vertices_of(c.edges)) {
      local[v] = node.skeleton.add_vertex(g.name(v));
      node.vertex_map.push_back(v);
    }
    for (const auto& e : c.edges) {
      const int se = node.skeleton.add_edge(local[e.u], local[e.v]);
      node.edges.push_back({e.virt, e.id});
      if (e.virt) occ[e.id].push_back({id, se});
    }
    t.nodes.push_back(std::move(node));
  }
  std::map<int, int> link_of_vid;
  for (const auto& [vid, list] : occ) {
    link_of_vid[vid] = static_cast<int>(t.links.size());
    t.links.push_back({{list[0].first, list[1].first}, {list[0].second, list[1].second}});
  }
  for (auto& node : t.nodes) {
    for (auto& se : node.edges) {
      if (se.is_virtual) se.id = link_of_vid[se.id];
    }
  }

  // covered input edges: real ones directly, virtual ones via the far subtree
  std::vector<std::vector<std::pair<int, int>>> adj(t.nodes.size());  // (neighbour, link)
  for (int l = 0; l < static_cast<int>(t.links.size()); ++l) {
    adj[t.links[l].node[0]].push_back({t.links[l].node[1], l});
    adj[t.links[l].node[1]].push_back({t.links[l].node[0], l});
  }
  auto subtree_edges = [&](int from, int blocked_link) {
    std::vector<int> out;
    std::vector<char> seen(t.nodes.size(), 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      const int n = stack.back();
      stack.pop_back();
      for (const auto& se : t.nodes[n].edges) {
        if (!se.is_virtual) out.push_back(se.id);
      }
      for (auto [m, l] : adj[n]) {
        if (l != blocked_link && !seen[m]) {
          seen[m] = 1;
          stack.push_back(m);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  for (int n = 0; n < static_cast<int>(t.nodes.size()); ++n) {
    auto& node = t.nodes[n];
    for (const auto& se : node.edges) {
      if (!se.is_virtual) {
        node.covered.push_back({se.id});
      } else {
        const auto& link = t.links[se.id];
        const int far = link.node[0] == n ? link.node[1] : link.node[0];
        node.covered.push_back(subtree_edges(far, se.id));
      }
    }
  }

  // rotations induced from the input embedding
  for (auto& node : t.nodes) {
    auto& sk = node.skeleton;
    for (int v = 0; v < sk.num_vertices(); ++v) {
      const int gv = node.vertex_map[v];
      std::vector<std::pair<int, int>> keyed;
      for (int d : sk.rotation(v)) {
        const auto& cov = node.covered[PlanarEmbeddedGraph::edge_of(d)];
        int key = g.degree(gv);
        for (int od : g.rotation(gv)) {
          if (std::binary_search(cov.begin(), cov.end(), PlanarEmbeddedGraph::edge_of(od))) {
            key = std::min(key, g.rotation_index(od));
          }
        }
        keyed.push_back({key, d});
      }
      std::sort(keyed.begin(), keyed.end());
      std::vector<int> r;
      for (auto [k, d] : keyed) r.push_back(d);
      sk.set_rotation(v, r);
    }
  }
  return t;
}

void check_cubic_structure(const SpqrTree& t) {
  auto fail = [](const std::string& what) { throw InternalError("SPQR structure: " + what); };
  for (const auto& link : t.links) {
    const int s = (t.nodes[link.node[0]].type == SpqrType::S) + (t.nodes[link.node[1]].type == SpqrType::S);
    if (s != 1) fail("tree edge without exactly one S endpoint");
  }
  for (const auto& node : t.nodes) {
    const auto& sk = node.skeleton;
    switch (node.type) {
      case SpqrType::S: {
        if (sk.num_edges() % 2 != 0) fail("odd S cycle");
        const auto f = faces(sk);
        for (const auto& w : f.walks) {
          for (std::size_t i = 0; i < w.size(); ++i) {
            const int e1 = PlanarEmbeddedGraph::edge_of(w[i]);
            const int e2 = PlanarEmbeddedGraph::edge_of(w[(i + 1) % w.size()]);
            if (node.edges[e1].is_virtual == node.edges[e2].is_virtual) fail("S cycle does not alternate");
          }
        }
        break;
      }
      case SpqrType::P:
        if (sk.num_vertices() != 2 || sk.num_edges() != 3) fail("P node is not a three-edge bond");
        break;
      case SpqrType::R:
        for (int v = 0; v < sk.num_vertices(); ++v) {
          if (sk.degree(v) != 3) fail("R skeleton is not 3-regular");
        }
        break;
    }
  }
}

}  // namespace lombardi
