#include "lombardi/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "lombardi/io.hpp"

namespace lombardi {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnsupportedInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InternalError("cannot write '" + path + "'");
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

void report(std::ostream& os, const LombardiDrawing& d, const VerificationReport& r) {
  os << "vertices " << d.graph.num_vertices() << ", edges " << d.graph.num_edges() << "\n";
  os << "verification: " << r.summary() << "\n";
  if (r.rotation_mismatches > 0)
    os << "note: " << r.rotation_mismatches << " vertices differ from the input rotation\n";
}

int run_checked(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!(c.pack_tol > 0) || !(c.opt_step_tol > 0) || !(c.angle_tol > 0) || c.pack_max_iter <= 0 ||
      c.opt_max_rounds <= 0) {
    err << "error: tolerances and iteration limits must be positive\n";
    return exit_code::unsupported;
  }
  const std::string text = read_file(c.input);

  if (c.verify_only) {
    const LombardiDrawing d = read_json(text);
    const VerificationReport r = verify(d, c.angle_tol);
    report(out, d, r);
    return r.pass ? exit_code::ok : exit_code::failure;
  }

  const PlanarEmbeddedGraph g = parse_graph(text, c.mode == Mode::Subcubic ? 3 : 1 << 20);
  DrawOptions opt;
  opt.pack.tol = c.pack_tol;
  opt.pack.max_iter = c.pack_max_iter;
  opt.opt.step_tol = c.opt_step_tol;
  opt.opt.max_rounds = c.opt_max_rounds;
  opt.angle_tol = c.angle_tol;
  if (c.outer_face) {
    const auto f = face_with_vertices(g, faces(g), split_names(*c.outer_face));
    if (!f) {
      err << "error: no face has exactly the vertices '" << *c.outer_face << "'\n";
      return exit_code::unsupported;
    }
    opt.outer_face = *f;
  }

  LombardiDrawing d;
  try {
    d = c.mode == Mode::Subcubic ? draw_subcubic(g, opt) : draw_medial(g, opt);
  } catch (const UnsupportedInput& ex) {
    err << "unsupported input: " << ex.what() << "\n";
    if (c.mode == Mode::Medial) {
      bool four_regular = g.num_vertices() > 0;
      for (int v = 0; v < g.num_vertices(); ++v) four_regular = four_regular && g.degree(v) == 4;
      if (four_regular)
        err << "general 4-regular inputs are unsupported: some have no Lombardi drawing at all. Medial mode "
               "expects the 3-connected source graph and draws its medial graph.\n";
    }
    return exit_code::unsupported;
  }
  const VerificationReport r = verify(d, c.angle_tol, opt.geom_tol);

  const bool svg = c.format != Format::Json, json = c.format != Format::Svg;
  if (c.output) {
    const std::string base = *c.output;
    if (svg) write_file(c.format == Format::Both ? base + ".svg" : base, emit_svg(d));
    if (json) write_file(c.format == Format::Both ? base + ".json" : base, emit_json(d));
    report(out, d, r);
  } else {
    if (svg) out << emit_svg(d);
    if (json) out << emit_json(d);
    report(err, d, r);
  }
  return r.pass ? exit_code::ok : exit_code::failure;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return run_checked(config, out, err);
  } catch (const UnsupportedInput& ex) {
    err << "unsupported input: " << ex.what() << "\n";
    return exit_code::unsupported;
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << "\n";
    return exit_code::unsupported;
  } catch (const NonplanarRotation& ex) {
    err << "input rotation is not planar: " << ex.what() << "\n";
    return exit_code::unsupported;
  } catch (const ConvergenceFailure& ex) {
    err << "no convergence: " << ex.what() << " (residual " << ex.residual() << ")\n";
    return exit_code::failure;
  } catch (const VerificationError& ex) {
    err << "drawing failed verification: " << ex.report().summary() << "\n";
    return exit_code::failure;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_code::failure;
  }
}

}  // namespace lombardi
