#pragma once

#include <complex>
#include <fstream>
#include <sstream>
#include <random>
#include <string>

#include "lombardi/geometry.hpp"

namespace lombardi::test {

inline std::string fixture(const std::string& name) {
  return std::string(LOMBARDI_DATA_DIR) + "/" + name + ".txt";
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Complex random_point(std::mt19937& rng, double scale = 2.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng)};
}

/// A random orientation-preserving map with moderate coefficients.
inline MobiusMap random_mobius(std::mt19937& rng) {
  for (;;) {
    const Complex a = random_point(rng, 1.0), b = random_point(rng, 1.0),
                  c = random_point(rng, 0.3), d = random_point(rng, 1.0);
    if (std::abs(a * d - b * c) > 0.2) return MobiusMap::make(a, b, c, d);
  }
}

}  // namespace lombardi::test
