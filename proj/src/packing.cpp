#include "lombardi/packing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <string>

#include "lombardi/error.hpp"

namespace lombardi {

double neighbor_angle(double rv, double ru, double rw) {
  // half-angle form of the law of cosines; stable for tiny angles
  const double s = std::sqrt(ru * rw / ((rv + ru) * (rv + rw)));
  return 2.0 * std::asin(std::min(1.0, s));
}

double angle_sum(const PlanarEmbeddedGraph& t, const std::vector<double>& radius, int v) {
  double sum = 0.0;
  for (int d : t.rotation(v)) {
    const int u = t.head(d), w = t.head(t.cw_next(d));
    sum += neighbor_angle(radius[v], radius[u], radius[w]);
  }
  return sum;
}

RadiusAssignment pack_triangulation(const PlanarEmbeddedGraph& t,
                                    const std::map<int, double>& boundary,
                                    const PackingOptions& opt,
                                    const std::optional<std::vector<double>>& initial) {
  const int n = t.num_vertices();
  RadiusAssignment ra;
  ra.radius = initial ? *initial : std::vector<double>(n, 1.0);
  if (static_cast<int>(ra.radius.size()) != n) throw InternalError("initial radii have the wrong size");
  ra.boundary.assign(n, 0);
  for (auto [v, r] : boundary) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DegenerateInput("boundary radius must be positive");
    ra.radius[v] = r;
    ra.boundary[v] = 1;
  }
  for (double r : ra.radius) {
    if (!(r > 0.0) || !std::isfinite(r)) throw DegenerateInput("radii must be positive");
  }
  for (int v = 0; v < n; ++v) {
    if (!ra.boundary[v] && t.degree(v) < 3) throw DegenerateInput("interior vertex of degree below 3");
  }

  auto worst = [&] {
    double w = 0.0;
    for (int v = 0; v < n; ++v) {
      if (!ra.boundary[v]) w = std::max(w, std::abs(angle_sum(t, ra.radius, v) - kTwoPi));
    }
    return w;
  };

  ra.residual_history.push_back(worst());
  while (ra.residual_history.back() > opt.tol) {
    if (ra.sweeps >= opt.max_iter) {
      throw ConvergenceFailure("circle packing did not converge in " + std::to_string(opt.max_iter) +
                                   " sweeps",
                               ra.residual_history.back());
    }
    for (int v = 0; v < n; ++v) {
      if (ra.boundary[v]) continue;
      const double k = t.degree(v);
      const double r = ra.radius[v];
      // representative radius of k equal neighbours giving the same angle sum
      const double s = std::sin(angle_sum(t, ra.radius, v) / (2.0 * k));
      const double rho = r * s / (1.0 - s);
      const double target = std::sin(kPi / k);
      ra.radius[v] = rho * (1.0 - target) / target;
    }
    ++ra.sweeps;
    ra.residual_history.push_back(worst());
  }
  return ra;
}

PackingResiduals packing_residuals(const PlanarEmbeddedGraph& t, const std::vector<Circle>& c) {
  PackingResiduals res;
  const int n = t.num_vertices();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int e = 0; e < t.num_edges(); ++e) {
    const int u = t.tail(2 * e), v = t.head(2 * e);
    adj[u][v] = adj[v][u] = 1;
    const double sum = c[u].radius + c[v].radius;
    res.tangency = std::max(res.tangency, std::abs(std::abs(c[u].center - c[v].center) - sum) / sum);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u][v]) continue;
      const double gap = c[u].radius + c[v].radius - std::abs(c[u].center - c[v].center);
      res.overlap = std::max(res.overlap, gap);
    }
  }
  return res;
}

CirclePacking layout_centers(const PlanarEmbeddedGraph& t, const std::vector<double>& radius,
                             int seed_dart, int skip_face, double tol) {
  const int n = t.num_vertices();
  const FaceSet f = faces(t);
  std::vector<char> placed(n, 0), face_done(f.size(), 0);
  CirclePacking p;
  p.circles.assign(n, Circle{});
  for (int v = 0; v < n; ++v) p.circles[v].radius = radius[v];

  const int a0 = t.tail(seed_dart), b0 = t.head(seed_dart);
  p.circles[a0].center = Complex(-radius[a0], 0.0);
  p.circles[b0].center = Complex(radius[b0], 0.0);
  placed[a0] = placed[b0] = 1;

  std::deque<int> queue{seed_dart, PlanarEmbeddedGraph::twin(seed_dart)};
  while (!queue.empty()) {
    const int d = queue.front();
    queue.pop_front();
    const int face = f.face_of[d];
    if (face == skip_face || face_done[face]) continue;
    if (f.walks[face].size() != 3) throw DegenerateInput("layout needs triangular faces");
    const int a = t.tail(d), b = t.head(d);
    const int n1 = t.face_next(d), n2 = t.face_next(n1);
    const int c = t.head(n1);
    if (!placed[c]) {
      const Complex ab = p.circles[b].center - p.circles[a].center;
      const double alpha = neighbor_angle(radius[a], radius[b], radius[c]);
      p.circles[c].center = p.circles[a].center + (radius[a] + radius[c]) * std::polar(1.0, std::arg(ab) + alpha);
      placed[c] = 1;
    }
    face_done[face] = 1;
    for (int x : {d, n1, n2}) queue.push_back(PlanarEmbeddedGraph::twin(x));
  }
  for (int v = 0; v < n; ++v) {
    if (!placed[v]) throw InternalError("layout did not reach every vertex");
  }

  p.tangency.resize(t.num_edges());
  for (int e = 0; e < t.num_edges(); ++e) {
    const Circle& cu = p.circles[t.tail(2 * e)];
    const Circle& cv = p.circles[t.head(2 * e)];
    p.tangency[e] = cu.center + cu.radius * (cv.center - cu.center) / std::abs(cv.center - cu.center);
  }

  double rmax = 0.0;
  for (double r : radius) rmax = std::max(rmax, r);
  const PackingResiduals res = packing_residuals(t, p.circles);
  // positions inherit angle errors scaled by the packing's size
  if (res.tangency > 10.0 * tol * std::max(1.0, static_cast<double>(n)) || res.overlap > 10.0 * tol * rmax * n) {
    throw InternalError("circle layout is inconsistent (tangency residual " + std::to_string(res.tangency) +
                        ", overlap " + std::to_string(res.overlap) + "); radii not converged");
  }
  return p;
}

namespace {

// A vertex or face circle of the incidence relaxation. Four of them are
// lines in the working frame and take no part beyond fixing angles.
struct Node {
  std::vector<int> nbr;    // finite circles met orthogonally
  double target = kTwoPi;  // minus pi for every line met
  bool line = false;
  bool pinned = false;
};

struct LineFit {
  Complex normal_sum = 0.0;
  std::vector<Complex> points;

  Line fit() const {
    const Complex n = normal_sum / std::abs(normal_sum);
    double off = 0.0;
    for (Complex p : points) off += dot(n, p);
    return Line{n, off / static_cast<double>(points.size())};
  }
};

}  // namespace

PrimalDualPacking primal_dual_pack(const PlanarEmbeddedGraph& g, int outer_face, const PackingOptions& opt) {
  if (!is_triconnected(g)) throw UnsupportedInput("primal-dual packing needs a 3-connected graph");
  PrimalDualPacking out;
  out.faces = faces(g);
  out.outer = outer_face;
  const FaceSet& fs = out.faces;
  const int nv = g.num_vertices(), nf = fs.size();
  auto face_node = [&](int f) { return nv + f; };
  // face in the corner between dart a and its clockwise successor
  auto corner_face = [&](int a) { return fs.face_of[g.cw_next(a)]; };

  // The crossing point of outer edge u0 v0 goes to infinity: u0 and v0
  // become parallel lines, the outer face f0 and the face g0 across the
  // edge become the two lines perpendicular to them.
  const int d0 = fs.walks[outer_face].front();
  const int u0 = g.tail(d0), v0 = g.head(d0);
  const int f0 = outer_face, g0 = fs.face_of[PlanarEmbeddedGraph::twin(d0)];

  std::vector<Node> nodes(nv + nf);
  for (int x : {u0, v0, face_node(f0), face_node(g0)}) nodes[x].line = true;
  for (int v = 0; v < nv; ++v) {
    if (nodes[v].line) continue;
    for (int a : g.rotation(v)) {
      const int y = face_node(corner_face(a));
      if (nodes[y].line) {
        nodes[v].target -= kPi;
      } else {
        nodes[v].nbr.push_back(y);
      }
    }
  }
  for (int f = 0; f < nf; ++f) {
    if (nodes[face_node(f)].line) continue;
    for (int d : fs.walks[f]) {
      const int y = g.tail(d);
      if (nodes[y].line) {
        nodes[face_node(f)].target -= kPi;
      } else {
        nodes[face_node(f)].nbr.push_back(y);
      }
    }
  }
  int pin = -1;
  for (int v = 0; v < nv && pin < 0; ++v) {
    if (!nodes[v].line) pin = v;
  }
  nodes[pin].pinned = true;
  for (const auto& nd : nodes) {
    if (!nd.line && (nd.nbr.empty() || nd.target <= 0.0)) throw InternalError("incidence relaxation is ill-posed");
  }

  std::vector<double> r(nv + nf, 1.0);
  auto sum_at = [&](int x) {
    double s = 0.0;
    for (int y : nodes[x].nbr) s += 2.0 * std::atan(r[y] / r[x]);
    return s;
  };
  auto worst = [&] {
    double w = 0.0;
    for (int x = 0; x < nv + nf; ++x) {
      if (!nodes[x].line && !nodes[x].pinned) w = std::max(w, std::abs(sum_at(x) - nodes[x].target));
    }
    return w;
  };
  out.residual_history.push_back(worst());
  long sweeps = 0;
  while (out.residual_history.back() > opt.tol) {
    if (sweeps >= opt.max_iter) {
      throw ConvergenceFailure("primal-dual packing did not converge in " + std::to_string(opt.max_iter) +
                                   " sweeps",
                               out.residual_history.back());
    }
    for (int x = 0; x < nv + nf; ++x) {
      if (nodes[x].line || nodes[x].pinned) continue;
      const double k = static_cast<double>(nodes[x].nbr.size());
      const double rho = r[x] * std::tan(sum_at(x) / (2.0 * k));
      r[x] = rho / std::tan(nodes[x].target / (2.0 * k));
    }
    ++sweeps;
    out.residual_history.push_back(worst());
  }

  // walk tangencies outward from the pinned vertex; theta[a] is the
  // direction from tail(a) to the crossing point of a's edge
  std::vector<Complex> center(nv);
  std::vector<double> theta(g.num_darts(), 0.0);
  std::vector<char> placed(nv, 0);
  std::vector<Complex> face_sum(nf, 0.0);
  std::vector<int> face_count(nf, 0);
  std::map<int, LineFit> fits;
  placed[pin] = 1;
  std::deque<int> queue{g.rotation(pin).front()};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    const int v = g.tail(a);
    for (int i = 0; i < g.degree(v); ++i) {
      const int next = g.cw_next(a);
      const int fn = face_node(corner_face(a));
      if (nodes[fn].line) {
        fits[fn].normal_sum += std::polar(1.0, theta[a] - kPi / 2);
        fits[fn].points.push_back(center[v]);
        theta[next] = theta[a] - kPi;
      } else {
        const double half = std::atan(r[fn] / r[v]);
        face_sum[fn - nv] += center[v] + std::hypot(r[v], r[fn]) * std::polar(1.0, theta[a] - half);
        ++face_count[fn - nv];
        theta[next] = theta[a] - 2.0 * half;
      }
      const int u = g.head(a);
      if (nodes[u].line) {
        fits[u].normal_sum += std::polar(1.0, theta[a]);
        fits[u].points.push_back(center[v] + r[v] * std::polar(1.0, theta[a]));
      } else if (!placed[u]) {
        placed[u] = 1;
        center[u] = center[v] + (r[v] + r[u]) * std::polar(1.0, theta[a]);
        theta[PlanarEmbeddedGraph::twin(a)] = theta[a] + kPi;
        queue.push_back(PlanarEmbeddedGraph::twin(a));
      }
      a = next;
    }
  }

  // rotate and shift so f0 is the real axis with everything above it
  const Line outer_line = fits[face_node(f0)].fit();
  const Complex rot = Complex(0.0, -1.0) / outer_line.normal;
  const Complex shift(0.0, outer_line.offset);
  auto frame = [&](Complex z) { return rot * z + shift; };
  auto frame_line = [&](const Line& l) {
    const Complex n = rot * l.normal;
    return Line{n, l.offset + dot(n, shift)};
  };

  out.line_vertex_circle.resize(nv);
  for (int v = 0; v < nv; ++v) {
    out.line_vertex_circle[v] = nodes[v].line ? GeneralizedCircle(frame_line(fits[v].fit()))
                                              : GeneralizedCircle::circle(frame(center[v]), r[v]);
  }
  out.line_face_circle.resize(nf);
  for (int f = 0; f < nf; ++f) {
    const int fn = face_node(f);
    out.line_face_circle[f] = nodes[fn].line
                                  ? GeneralizedCircle(frame_line(fits[fn].fit()))
                                  : GeneralizedCircle::circle(frame(face_sum[f] / double(face_count[f])), r[fn]);
  }
  out.line_crossing.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const int a = g.tail(2 * e), b = g.head(2 * e);
    if (nodes[a].line && nodes[b].line) {
      out.line_crossing[e] = ExtendedPoint::infinity();
    } else {
      const int d = nodes[a].line ? 2 * e + 1 : 2 * e;
      const int t = g.tail(d);
      out.line_crossing[e] = frame(center[t] + r[t] * std::polar(1.0, theta[d]));
    }
  }

  Complex mean = 0.0;
  int finite = 0;
  for (int v = 0; v < nv; ++v) {
    if (nodes[v].line) continue;
    mean += out.line_vertex_circle[v].as_circle().center;
    ++finite;
  }
  mean /= static_cast<double>(finite);
  // the pole conj(mean) must miss the circles hanging below the axis
  double below = 0.0;
  for (const auto& c : out.line_vertex_circle) {
    if (c.is_circle()) below = std::max(below, c.as_circle().radius - c.as_circle().center.imag());
  }
  mean.imag(std::max(mean.imag(), 2.0 * below));
  out.to_disk = MobiusMap::make(1.0, -mean, 1.0, -std::conj(mean));
  for (const auto& c : out.line_vertex_circle) out.vertex_circle.push_back(mobius_apply(out.to_disk, c));
  for (const auto& c : out.line_face_circle) out.face_circle.push_back(mobius_apply(out.to_disk, c));
  for (const auto& z : out.line_crossing) out.crossing.push_back(out.to_disk(z).z());
  return out;
}

PrimalDualResiduals primal_dual_residuals(const PlanarEmbeddedGraph& g, const PrimalDualPacking& p) {
  PrimalDualResiduals res;
  auto circ = [](const GeneralizedCircle& c) {
    if (!c.is_circle()) throw InternalError("primal-dual residuals expect finite circles");
    return c.as_circle();
  };
  auto tangency_point = [](const Circle& a, const Circle& b, bool internal) {
    const Complex dir = (b.center - a.center) / std::abs(b.center - a.center);
    return internal ? a.center - a.radius * dir : a.center + a.radius * dir;
  };
  for (int e = 0; e < g.num_edges(); ++e) {
    const int u = g.tail(2 * e), v = g.head(2 * e);
    const int f = p.faces.face_of[2 * e], h = p.faces.face_of[2 * e + 1];
    const Circle cu = circ(p.vertex_circle[u]), cv = circ(p.vertex_circle[v]);
    const double sum = cu.radius + cv.radius;
    res.vertex_tangency = std::max(res.vertex_tangency, std::abs(std::abs(cu.center - cv.center) - sum) / sum);
    Circle cf = circ(p.face_circle[f]), ch = circ(p.face_circle[h]);
    const bool touches_outer = f == p.outer || h == p.outer;
    if (h == p.outer) std::swap(cf, ch);  // now cf encloses ch when touching the outer face
    Complex t2;
    if (touches_outer) {
      const double dist = std::abs(cf.center - ch.center);
      res.face_tangency = std::max(res.face_tangency, std::abs(dist - (cf.radius - ch.radius)) / (cf.radius + ch.radius));
      t2 = tangency_point(ch, cf, true);
    } else {
      const double fsum = cf.radius + ch.radius;
      res.face_tangency = std::max(res.face_tangency, std::abs(std::abs(cf.center - ch.center) - fsum) / fsum);
      t2 = tangency_point(cf, ch, false);
    }
    const Complex t1 = tangency_point(cu, cv, false);
    res.crossing = std::max(res.crossing, std::max(std::abs(t1 - p.crossing[e]), std::abs(t2 - p.crossing[e])));
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    const Circle cv = circ(p.vertex_circle[v]);
    for (int a : g.rotation(v)) {
      const Circle cf = circ(p.face_circle[p.faces.face_of[g.cw_next(a)]]);
      const double d2 = std::norm(cv.center - cf.center);
      const double r2 = cv.radius * cv.radius + cf.radius * cf.radius;
      res.orthogonality = std::max(res.orthogonality, std::abs(d2 - r2) / r2);
    }
  }
  return res;
}

}  // namespace lombardi
