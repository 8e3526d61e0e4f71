#!/usr/bin/env python3
"""Regenerates the graph fixtures under data/.

Each fixture is written in the line format read by the tool: a vertex id
followed by its neighbours in clockwise order. Embeddings come from
networkx's planarity test and are checked with a face-tracing Euler test.
"""
import itertools
import os
import sys

import networkx as nx

OUT = os.path.join(os.path.dirname(__file__), "..", "data")


def trace_faces(rot):
    pos = {v: {u: i for i, u in enumerate(ns)} for v, ns in rot.items()}
    seen = set()
    faces = []
    for u in rot:
        for v in rot[u]:
            if (u, v) in seen:
                continue
            face = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                face.append(a)
                ns = rot[b]
                c = ns[(pos[b][a] + 1) % len(ns)]
                a, b = b, c
            faces.append(face)
    return faces


def euler_ok(rot):
    g = nx.Graph()
    for v, ns in rot.items():
        g.add_node(v)
        for u in ns:
            g.add_edge(v, u)
    comps = nx.number_connected_components(g)
    V = g.number_of_nodes()
    E = g.number_of_edges()
    F = len(trace_faces(rot))
    return V - E + F == 1 + comps


def embed(g):
    ok, emb = nx.check_planarity(g)
    assert ok
    rot = {v: list(emb.neighbors_cw_order(v)) for v in g.nodes}
    assert euler_ok(rot)
    return rot


def write(name, rot, comment, names=None):
    names = names or {}
    label = lambda v: names.get(v, str(v))
    with open(os.path.join(OUT, name + ".txt"), "w") as f:
        for line in comment.strip().splitlines():
            f.write("# " + line + "\n")
        for v in rot:
            f.write(" ".join([label(v)] + [label(u) for u in rot[v]]) + "\n")


def truncate(rot):
    for flip in (False, True):
        out = {}
        for v, ns in rot.items():
            k = len(ns)
            for i, u in enumerate(ns):
                nxt = (v, ns[(i + 1) % k])
                prv = (v, ns[(i - 1) % k])
                out[(v, u)] = [(u, v), nxt, prv] if not flip else [(u, v), prv, nxt]
        if euler_ok(out):
            ids = {x: i for i, x in enumerate(out)}
            return {ids[x]: [ids[y] for y in ns] for x, ns in out.items()}
    raise RuntimeError("truncation failed")


def relabel(g, prefix):
    return nx.relabel_nodes(g, {v: f"{prefix}{v}" for v in g.nodes})


def k4_minus_e(prefix):
    g = nx.complete_graph(4)
    g.remove_edge(0, 1)
    return relabel(g, prefix)  # degree-2 vertices: prefix0, prefix1


def two_k4e():
    g = nx.union(k4_minus_e("a"), k4_minus_e("b"))
    g.add_edge("a0", "b0")
    g.add_edge("a1", "b1")
    return g


def triple_theta():
    g = nx.Graph()
    for p in "xyz":
        g = nx.union(g, k4_minus_e(p))
        g.add_edge("h", p + "0")
        g.add_edge("k", p + "1")
    return g


def subdivide(g, u, v, names):
    g.remove_edge(u, v)
    prev = u
    for n in names:
        g.add_edge(prev, n)
        prev = n
    g.add_edge(prev, v)


def irregular69():
    g = nx.Graph()
    # dodecahedral block with three bridge attachments and a plain degree-2 vertex
    g = nx.union(g, relabel(nx.dodecahedral_graph(), "d"))
    subdivide(g, "d0", "d1", ["s1"])
    subdivide(g, "d5", "d6", ["s2", "s3"])
    subdivide(g, "d10", "d11", ["s4"])
    # 2-connected block with an S node between two rigid pieces
    g = nx.union(g, two_k4e())
    subdivide(g, "a0", "b0", ["t1"])
    # block whose decomposition contains a P node
    g = nx.union(g, triple_theta())
    subdivide(g, "x2", "x3", ["u1"])
    # claw centre joining three pieces
    g.add_edge("c0", "s1")
    g.add_edge("c0", "t1")
    g.add_edge("c0", "p1")
    g.add_edge("p1", "p2")  # pendant path: p1 has degree 2, p2 is a leaf
    # K4 with one subdivided edge hanging off the dodecahedron
    g = nx.union(g, relabel(nx.complete_graph(4), "k"))
    subdivide(g, "k0", "k1", ["k4"])
    g.add_edge("k4", "s3")
    # cycle block with two bridge attachments
    for i in range(5):
        g.add_edge(f"r{i}", f"r{(i + 1) % 5}")
    g.add_edge("r0", "s4")
    g.add_edge("r2", "u1")
    # cycle block with a single attachment and a leaf
    for i in range(4):
        g.add_edge(f"q{i}", f"q{(i + 1) % 4}")
    g.add_edge("q0", "r3")
    # extra pendant leaves
    g.add_edge("r4", "l1")
    # plain degree-2 run inside the dodecahedral block
    subdivide(g, "d15", "d16", ["s5", "s6", "s7"])
    return g


def g18():
    labeled = [("a", "b"), ("b", "f"), ("f", "c"), ("c", "a"),
               ("a", "d"), ("d", "f"), ("f", "e"), ("e", "a"), ("c", "e")]
    octa = nx.octahedral_graph()
    # remove one edge: its endpoints become the two attachment vertices
    oe = next(iter(octa.edges))
    octa.remove_edge(*oe)
    y = relabel(octa, "y")
    ya, yb = f"y{oe[0]}", f"y{oe[1]}"
    verts = [f"x{i}" for i in range(6)]
    pairs = list(itertools.combinations(verts, 2))
    for bx in itertools.combinations(verts, 2):
        for dx in itertools.combinations(verts, 2):
            ext = {v: (v in bx) + (v in dx) for v in verts}
            need = [4 - ext[v] for v in verts]
            if sum(need) != 20:
                continue
            for edges in itertools.combinations(pairs, 10):
                deg = {v: 0 for v in verts}
                for u, v in edges:
                    deg[u] += 1
                    deg[v] += 1
                if [deg[v] for v in verts] != need:
                    continue
                g = nx.Graph(labeled)
                g.add_edges_from(edges)
                g = nx.union(g, y)
                g.add_edges_from([("b", bx[0]), ("b", bx[1]), ("d", dx[0]), ("d", dx[1]),
                                  ("c", ya), ("e", yb)])
                ok, emb = nx.check_planarity(g)
                if not ok or nx.node_connectivity(g) != 2:
                    continue
                rot = {v: list(emb.neighbors_cw_order(v)) for v in g.nodes}
                faces = {frozenset(f) for f in trace_faces(rot) if len(f) == 4}
                if frozenset("abfc") in faces and frozenset("adfe") in faces:
                    return rot
    raise RuntimeError("no G18 candidate")


def main():
    os.makedirs(OUT, exist_ok=True)
    write("k4", embed(nx.tetrahedral_graph()), "K4, the tetrahedron")
    write("cube", embed(nx.cubical_graph()), "cube graph")
    write("dodecahedron", embed(nx.dodecahedral_graph()), "dodecahedron")
    write("frucht", embed(nx.frucht_graph()), "Frucht graph, 12 vertices")
    write("tutte", embed(nx.tutte_graph()), "Tutte graph, 46 vertices")
    ti = truncate(embed(nx.icosahedral_graph()))
    assert len(ti) == 60
    write("truncated_icosahedron", ti, "truncated icosahedron, 60 vertices")
    write("octahedron", embed(nx.octahedral_graph()), "octahedron (degree 4, polyhedral)")
    write("two_k4e", embed(two_k4e()), "two copies of K4 minus an edge joined by two edges")
    write("triple_theta", embed(triple_theta()),
          "three K4 minus an edge pieces between two hubs (P node)")
    claw2 = nx.Graph([("c", "c1"), ("c", "c2"), ("c", "m"), ("m", "n"),
                      ("n", "n1"), ("n", "n2")])
    write("double_claw", embed(claw2), "two claws joined by a bridge")
    bb = nx.union(relabel(nx.complete_graph(4), "a"), relabel(nx.complete_graph(4), "b"))
    subdivide(bb, "a0", "a1", ["ax"])
    subdivide(bb, "b0", "b1", ["bx"])
    bb.add_edge("ax", "bx")
    write("two_blocks_bridge", embed(bb), "two K4 blocks with a subdivided edge joined by a bridge")
    irr = irregular69()
    assert irr.number_of_nodes() == 69, irr.number_of_nodes()
    assert max(d for _, d in irr.degree()) <= 3
    write("irregular69", embed(irr), "irregular subcubic graph, 69 vertices")
    write("cycle6", embed(nx.cycle_graph(6)), "bare 6-cycle")
    write("claw", embed(nx.star_graph(3)), "claw K_{1,3}")
    write("g18", g18(), "4-regular planar graph with no planar Lombardi drawing")
    print("ok")


if __name__ == "__main__":
    sys.exit(main())
