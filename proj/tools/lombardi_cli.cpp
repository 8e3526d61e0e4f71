#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "lombardi/cli.hpp"

int main(int argc, char** argv) {
  using namespace lombardi;
  RunConfig c;
  CLI::App app{"Lombardi drawings of subcubic planar graphs and of medial graphs of polyhedra"};
  app.add_option("input", c.input, "Graph file (one line per vertex: name, then neighbours clockwise), "
                                   "or a JSON drawing with --verify-only")
      ->required();
  const std::map<std::string, Mode> modes{{"subcubic", Mode::Subcubic}, {"medial", Mode::Medial}};
  const std::map<std::string, Format> formats{{"svg", Format::Svg}, {"json", Format::Json}, {"both", Format::Both}};
  app.add_option("--mode", c.mode, "subcubic or medial")->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  app.add_option("--format", c.format, "svg, json or both")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--outer-face", c.outer_face, "Comma-separated vertex names of the outer face");
  app.add_option("--pack-tol", c.pack_tol, "Circle packing angle-sum tolerance")->capture_default_str();
  app.add_option("--pack-max-iter", c.pack_max_iter, "Circle packing sweep limit")->capture_default_str();
  app.add_option("--opt-step-tol", c.opt_step_tol, "Smallest step of the Moebius optimization")
      ->capture_default_str();
  app.add_option("--opt-max-rounds", c.opt_max_rounds, "Round limit of the Moebius optimization")
      ->capture_default_str();
  app.add_option("--angle-tol", c.angle_tol, "Angular resolution tolerance of the verifier (radians)")
      ->capture_default_str();
  app.add_flag("--verify-only", c.verify_only, "Read a JSON drawing and verify it");
  app.add_option("--output,-o", c.output, "Output file (with --format both: stem for .svg and .json)");
  app.add_option("--seed", c.seed, "Reserved; the pipelines are deterministic");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code::unsupported;
  }
  return run(c, std::cout, std::cerr);
}
