#pragma once

// Moebius normalization of packings: one circle becomes the enclosing unit
// circle, then the disk automorphism maximizing the smallest inner radius.

#include <utility>
#include <vector>

#include "lombardi/geometry.hpp"

namespace lombardi {

struct NormalizedPacking {
  std::vector<Circle> circles;  // circles[outer] is the unit circle
  int outer = -1;
};

/// Sends circle `outer` to the unit circle with everything else inside, by
/// z -> r / (z - c): inversion in the chosen circle followed by a reflection,
/// so orientation is preserved. A circle that already encloses all others
/// is only translated and scaled.
std::pair<NormalizedPacking, MobiusMap> normalize_outer(const std::vector<Circle>& circles, int outer);

/// z -> (z - w) / (1 - conj(w) z), the disk automorphism taking w to 0.
MobiusMap disk_automorphism(Complex w);

/// Smallest radius among the non-outer circles after applying m.
double min_inner_radius(const NormalizedPacking& p, const MobiusMap& m);

struct OptimizeOptions {
  double step_tol = 1e-9;
  long max_rounds = 1000000;
  double initial_step = 0.25;
};

struct OptimizeResult {
  MobiusMap map;  // disk automorphism to apply after normalization
  Complex w;      // point sent to the origin
  double min_radius = 0.0;
  std::vector<double> history;  // objective after each round
  long rounds = 0;
};

/// Pattern search over w in the unit disk. Sixteen directions per round;
/// the step doubles on success, halves and turns the pattern by the golden
/// angle on failure, and the search stops once it drops below step_tol.
OptimizeResult optimize_min_radius(const NormalizedPacking& p, const OptimizeOptions& opt = {},
                                   Complex start = 0.0);

}  // namespace lombardi
