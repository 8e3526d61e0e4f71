#pragma once

// The command-line pipeline, separated from argument parsing so tests can
// drive it directly.

#include <iosfwd>
#include <optional>
#include <string>

namespace lombardi {

enum class Mode { Subcubic, Medial };
enum class Format { Svg, Json, Both };

struct RunConfig {
  std::string input;
  Mode mode = Mode::Subcubic;
  Format format = Format::Svg;
  /// Comma-separated vertex names of the face to put outside.
  std::optional<std::string> outer_face;
  double pack_tol = 1e-10;
  long pack_max_iter = 1000000;
  double opt_step_tol = 1e-9;
  long opt_max_rounds = 1000000;
  double angle_tol = 1e-6;
  /// Read a JSON drawing from `input` and only verify it.
  bool verify_only = false;
  /// Artifact path; with Format::Both, ".svg" and ".json" are appended.
  /// Artifacts go to `out` when unset.
  std::optional<std::string> output;
  /// Accepted for forward compatibility; every pipeline is deterministic.
  std::optional<unsigned> seed;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;
inline constexpr int unsupported = 2;
}  // namespace exit_code

/// Runs one invocation. Artifacts go to `output` files or to `out`; the
/// verification summary goes to `out` unless artifacts already occupy it,
/// in which case it goes to `err` along with all diagnostics.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lombardi
