#include "wedge/connector.hpp"
#include "wedge/errors.hpp"
#include "wedge/graph.hpp"
#include "wedge/instances.hpp"
#include "wedge/io.hpp"
#include "wedge/log.hpp"
#include "wedge/oracle.hpp"
#include "wedge/svg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

namespace
{
using ordered_json = nlohmann::ordered_json;

ordered_json point_json(wedge::Point p) { return ordered_json::array({p.x, p.y}); }

void write_text_file(std::string const & path, std::string const & content)
{
  std::ofstream out(path);
  if (!out) throw wedge::InvalidInput("cannot open '" + path + "' for writing");
  out << content;
}

// Shared option state across subcommands.
struct Options
{
  std::string input, output, assignment, shape, svg;
  double alpha = wedge::kPi / 3.0;
  double demo_alpha = wedge::kPi / 3.0 - 0.1;
  double eps_len = 1e-9;
  double eps_ang = 1e-9;
  double perturb = -1.0;  // < 0: off
  std::uint64_t seed = 0;
  bool force = false;
  int grid = 4096;
  int n = 4;
  int k = 120;
  int matrix_cap = 2000;
  std::string distribution;

  wedge::Tolerance tol() const { return wedge::Tolerance{eps_len, eps_ang}; }
};

void add_tolerance_flags(CLI::App * cmd, Options & opt)
{
  cmd->add_option("--eps-len", opt.eps_len, "relative length tolerance");
  cmd->add_option("--eps-ang", opt.eps_ang, "angular tolerance (radians)");
}

void maybe_perturb(std::vector<wedge::Point> & points, Options const & opt)
{
  if (opt.perturb < 0.0) return;
  wedge::perturb(points, opt.perturb, opt.seed);
  wedge::log::info("perturbed " + std::to_string(points.size()) + " points by +-" +
                   std::to_string(opt.perturb) + " (seed " + std::to_string(opt.seed) +
                   ")");
}

int run_solve(Options const & opt)
{
  auto points = wedge::io::read_points_file(opt.input);
  auto mutable_points = points;
  maybe_perturb(mutable_points, opt);

  wedge::SolveOptions solve_opt;
  solve_opt.tol = opt.tol();
  solve_opt.force_small_alpha = opt.force;
  wedge::Assignment const assignment = wedge::solve(mutable_points, opt.alpha, solve_opt);
  wedge::log::info("solved n=" + std::to_string(mutable_points.size()) + " case=" +
                   std::to_string(assignment.case_tag == wedge::CaseTag::case1 ? 1 : 2));

  if (opt.output.empty())
    wedge::io::write_assignment(std::cout, assignment);
  else
    wedge::io::write_assignment_file(opt.output, assignment);
  if (!opt.svg.empty())
    write_text_file(opt.svg, wedge::render_svg(mutable_points, &assignment, opt.tol()));
  return 0;
}

int run_verify(Options const & opt)
{
  auto const points = wedge::io::read_points_file(opt.input);
  auto const assignment = wedge::io::read_assignment_file(opt.assignment, points);
  wedge::WedgeGraph const graph =
      wedge::build_graph(points, assignment, opt.tol(), opt.matrix_cap);
  wedge::WedgeGraphReport const report = wedge::check(graph, assignment);
  wedge::io::write_report(std::cout, report);

  bool const ok = report.connected && report.anchor_path_ok && report.all_attached &&
                  report.diameter >= 0 && report.diameter <= 4;
  return ok ? 0 : 1;
}

int run_icecream(Options const & opt)
{
  wedge::SupportableShape const shape = wedge::io::read_shape_file(opt.shape);
  wedge::GoodPair const pair = wedge::ice_cream_point(shape, opt.alpha, opt.tol());
  ordered_json j;
  j["alpha"] = opt.alpha;
  j["apex_O"] = point_json(pair.apex_O);
  j["contact_X"] = point_json(pair.contact_X);
  j["contact_Y"] = point_json(pair.contact_Y);
  j["dist_X"] = wedge::distance(pair.apex_O, pair.contact_X);
  j["dist_Y"] = wedge::distance(pair.apex_O, pair.contact_Y);
  std::cout << j.dump() << '\n';
  return 0;
}

int run_identity(Options const & opt)
{
  wedge::SupportableShape const shape = wedge::io::read_shape_file(opt.shape);
  wedge::IdentityReport const report =
      wedge::perimeter_identity_residual(shape, opt.alpha, opt.grid);
  ordered_json j;
  j["integral_f"] = report.integral_f;
  j["rhs"] = report.rhs;
  j["residual"] = report.residual;
  j["grid_size"] = report.grid_size;
  std::cout << j.dump() << '\n';
  return 0;
}

int run_render(Options const & opt)
{
  auto const points = wedge::io::read_points_file(opt.input);
  if (opt.assignment.empty())
  {
    write_text_file(opt.output, wedge::render_svg(points, nullptr, opt.tol()));
    return 0;
  }
  auto const assignment = wedge::io::read_assignment_file(opt.assignment, points);
  write_text_file(opt.output, wedge::render_svg(points, &assignment, opt.tol()));
  return 0;
}

int run_gen(Options const & opt)
{
  auto points = wedge::generate(opt.distribution, opt.n, opt.seed);
  maybe_perturb(points, opt);
  if (opt.output.empty())
    wedge::io::write_points(std::cout, points);
  else
    wedge::io::write_points_file(opt.output, points);
  return 0;
}

int run_demo_tightness(Options const & opt)
{
  auto const points = wedge::generate("triangle-plus-edge", 4, 0);
  auto const witness =
      wedge::oracle::grid_search_assignment(points, opt.demo_alpha, opt.k, opt.tol());
  ordered_json j;
  j["note"] = "demonstration at grid resolution";
  j["alpha"] = opt.demo_alpha;
  j["k"] = opt.k;
  j["found"] = witness.has_value();
  if (witness)
  {
    ordered_json arr = ordered_json::array();
    for (wedge::Wedge const & w : *witness) arr.push_back(double(w.bisector));
    j["bisectors"] = std::move(arr);
  }
  std::cout << j.dump() << '\n';
  return 0;
}
}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"directional wedge connectivity toolkit"};
  app.require_subcommand(1);
  Options opt;
  int rc = 0;

  auto * solve = app.add_subcommand("solve", "compute a connected wedge assignment");
  solve->add_option("--input", opt.input, "points file")->required();
  solve->add_option("--output", opt.output, "assignment file (stdout if omitted)");
  solve->add_option("--alpha", opt.alpha, "wedge opening in radians (default pi/3)");
  solve->add_option("--perturb", opt.perturb, "jitter magnitude applied before solving");
  solve->add_option("--seed", opt.seed, "seed for --perturb");
  solve->add_option("--svg", opt.svg, "also render the result to this SVG path");
  solve->add_flag("--force", opt.force, "allow alpha below pi/3");
  add_tolerance_flags(solve, opt);
  solve->callback([&] { rc = run_solve(opt); });

  auto * verify = app.add_subcommand("verify", "independently check an assignment");
  verify->add_option("--input", opt.input, "points file")->required();
  verify->add_option("--assignment", opt.assignment, "assignment file")->required();
  verify->add_option("--matrix-cap", opt.matrix_cap,
                     "largest n for exact-diameter adjacency matrix");
  add_tolerance_flags(verify, opt);
  verify->callback([&] { rc = run_verify(opt); });

  auto * icecream = app.add_subcommand("icecream", "equal-tangent wedge for a shape");
  icecream->add_option("--shape", opt.shape, "shape file")->required();
  icecream->add_option("--alpha", opt.alpha, "wedge opening in radians");
  add_tolerance_flags(icecream, opt);
  icecream->callback([&] { rc = run_icecream(opt); });

  auto * identity = app.add_subcommand("identity", "integral-vs-perimeter residual");
  identity->add_option("--shape", opt.shape, "shape file")->required();
  identity->add_option("--alpha", opt.alpha, "wedge opening in radians");
  identity->add_option("--grid", opt.grid, "integration grid size");
  add_tolerance_flags(identity, opt);
  identity->callback([&] { rc = run_identity(opt); });

  auto * render = app.add_subcommand("render", "draw an instance as SVG");
  render->add_option("--input", opt.input, "points file")->required();
  render->add_option("--assignment", opt.assignment, "assignment file (optional)");
  render->add_option("--output", opt.output, "SVG output path")->required();
  add_tolerance_flags(render, opt);
  render->callback([&] { rc = run_render(opt); });

  auto * gen = app.add_subcommand("gen", "generate a point instance");
  gen->add_option("--n", opt.n, "number of points")->required();
  gen->add_option("--distribution", opt.distribution,
                  "uniform-disk | uniform-square | circle-evenly | triangle-plus-edge")
      ->required();
  gen->add_option("--seed", opt.seed, "random seed");
  gen->add_option("--output", opt.output, "points file (stdout if omitted)");
  gen->add_option("--perturb", opt.perturb, "jitter magnitude applied after generation");
  gen->callback([&] { rc = run_gen(opt); });

  auto * demo = app.add_subcommand("demo-tightness",
                                   "grid search on the triangle-plus-edge instance");
  demo->add_option("--alpha", opt.demo_alpha, "wedge opening in radians");
  demo->add_option("--k", opt.k, "directions per point (max 120)");
  add_tolerance_flags(demo, opt);
  demo->callback([&] { rc = run_demo_tightness(opt); });

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::ParseError const & e)
  {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  catch (wedge::InvalidInput const & e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  catch (wedge::GeneralPositionViolation const & e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  catch (wedge::TooFewPoints const & e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  catch (wedge::DegenerateWedge const & e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  catch (wedge::Error const & e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  catch (std::exception const & e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return rc;
}
