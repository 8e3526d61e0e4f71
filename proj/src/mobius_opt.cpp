#include "lombardi/mobius_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lombardi/error.hpp"

namespace lombardi {

std::pair<NormalizedPacking, MobiusMap> normalize_outer(const std::vector<Circle>& circles, int outer) {
  if (outer < 0 || outer >= static_cast<int>(circles.size())) throw DegenerateInput("outer circle out of range");
  const Circle& o = circles[outer];
  // a circle that already encloses the rest only needs rescaling
  bool encloses = true;
  for (int i = 0; i < static_cast<int>(circles.size()); ++i) {
    if (i != outer && std::abs(circles[i].center - o.center) >= o.radius) encloses = false;
  }
  const MobiusMap m = encloses ? similarity(1.0 / o.radius, -o.center / o.radius)
                               : MobiusMap::make(0.0, o.radius, 1.0, -o.center);
  NormalizedPacking p;
  p.outer = outer;
  for (int i = 0; i < static_cast<int>(circles.size()); ++i) {
    if (i == outer) {
      p.circles.push_back(Circle{0.0, 1.0});
      continue;
    }
    const GeneralizedCircle img = mobius_apply(m, GeneralizedCircle(circles[i]));
    if (!img.is_circle()) throw DegenerateInput("a circle passes through the normalization center");
    p.circles.push_back(img.as_circle());
  }
  return {p, m};
}

MobiusMap disk_automorphism(Complex w) { return MobiusMap::make(1.0, -w, -std::conj(w), 1.0); }

double min_inner_radius(const NormalizedPacking& p, const MobiusMap& m) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < static_cast<int>(p.circles.size()); ++i) {
    if (i == p.outer) continue;
    const GeneralizedCircle img = mobius_apply(m, GeneralizedCircle(p.circles[i]));
    if (!img.is_circle()) return 0.0;
    best = std::min(best, img.as_circle().radius);
  }
  return best;
}

namespace {

double image_radius(const Circle& c, Complex w) {
  const GeneralizedCircle img = mobius_apply(disk_automorphism(w), GeneralizedCircle(c));
  return img.is_circle() ? img.as_circle().radius : 0.0;
}

// Unit tangents of the ridges r_i = r_j through w, for pairs among the few
// smallest circles. A fixed pattern misses these when the ridge is sharp.
std::vector<Complex> ridge_directions(const NormalizedPacking& p, Complex w) {
  constexpr int kActive = 4;
  constexpr double h = 1e-7;
  std::vector<std::pair<double, int>> by_radius;
  for (int i = 0; i < static_cast<int>(p.circles.size()); ++i) {
    if (i != p.outer) by_radius.push_back({image_radius(p.circles[i], w), i});
  }
  const int k = std::min<int>(kActive, static_cast<int>(by_radius.size()));
  std::partial_sort(by_radius.begin(), by_radius.begin() + k, by_radius.end());
  std::vector<Complex> grad(k);
  for (int a = 0; a < k; ++a) {
    const Circle& c = p.circles[by_radius[a].second];
    grad[a] = Complex(image_radius(c, w + h) - image_radius(c, w - h),
                      image_radius(c, w + Complex(0, h)) - image_radius(c, w - Complex(0, h))) /
              (2 * h);
  }
  std::vector<Complex> dirs;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      const Complex n = grad[a] - grad[b];
      if (std::abs(n) < 1e-12) continue;
      const Complex t = Complex(0, 1) * n / std::abs(n);
      dirs.push_back(t);
      dirs.push_back(-t);
    }
  }
  return dirs;
}

}  // namespace

OptimizeResult optimize_min_radius(const NormalizedPacking& p, const OptimizeOptions& opt, Complex start) {
  if (std::abs(start) >= 1.0) throw DegenerateInput("start point must lie inside the unit disk");
  auto objective = [&](Complex w) {
    if (std::abs(w) >= 1.0 - 1e-12) return -1.0;
    return min_inner_radius(p, disk_automorphism(w));
  };
  constexpr double kGolden = 2.399963229728653;  // pi (3 - sqrt 5)
  constexpr int kTurnsPerStep = 3;
  constexpr int kMaxRestarts = 8;
  OptimizeResult res;
  Complex w = start;
  double f = objective(w);
  double phase = 0.0;
  res.history.push_back(f);
  // A ridge of the max-min objective can stall a fixed pattern, so each
  // step length gets a few rotated patterns, and the search restarts from
  // its end point until a restart stops paying.
  for (int restart = 0; restart <= kMaxRestarts; ++restart) {
    const double f_start = f;
    double step = opt.initial_step;
    int turns = 0;
    while (step >= opt.step_tol && res.rounds < opt.max_rounds) {
      ++res.rounds;
      Complex best_w = w;
      double best_f = f;
      std::vector<Complex> dirs = ridge_directions(p, w);
      for (int k = 0; k < 16; ++k) dirs.push_back(std::polar(1.0, phase + k * kPi / 8.0));
      for (const Complex& u : dirs) {
        const Complex cand = w + step * u;
        const double fc = objective(cand);
        if (fc > best_f) {
          best_f = fc;
          best_w = cand;
        }
      }
      if (best_f > f) {
        w = best_w;
        f = best_f;
        step = std::min(2.0 * step, opt.initial_step);
        turns = 0;
      } else {
        phase += kGolden;
        if (++turns >= kTurnsPerStep) {
          step *= 0.5;
          turns = 0;
        }
      }
      res.history.push_back(f);
    }
    if (f - f_start < opt.step_tol || res.rounds >= opt.max_rounds) break;
  }
  res.w = w;
  res.map = disk_automorphism(w);
  res.min_radius = f;
  return res;
}

}  // namespace lombardi
