#include "wedge/io.hpp"

#include "wedge/errors.hpp"
#include "wedge/hull.hpp"

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <vector>

namespace wedge::io
{
namespace
{
using ordered_json = nlohmann::ordered_json;

ordered_json parse(std::istream & in, char const * what)
{
  try
  {
    return ordered_json::parse(in);
  }
  catch (nlohmann::json::exception const & e)
  {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  }
}

Point read_pair(ordered_json const & node, char const * what)
{
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number())
    throw InvalidInput(std::string(what) + " must be a [x, y] number pair");
  return Point{node[0].get<double>(), node[1].get<double>()};
}

ordered_json pair_json(Point p) { return ordered_json::array({p.x, p.y}); }

std::ifstream open_input(std::string const & path)
{
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(std::string const & path)
{
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
  return out;
}

double number_field(ordered_json const & j, char const * key)
{
  if (!j.contains(key) || !j[key].is_number())
    throw InvalidInput(std::string("missing numeric field '") + key + "'");
  return j[key].get<double>();
}
}  // namespace

std::vector<Point> read_points(std::istream & in)
{
  ordered_json const j = parse(in, "points file");
  if (!j.contains("points") || !j["points"].is_array())
    throw InvalidInput("points file must contain a \"points\" array");
  std::vector<Point> out;
  out.reserve(j["points"].size());
  for (auto const & node : j["points"]) out.push_back(read_pair(node, "point"));
  return out;
}

std::vector<Point> read_points_file(std::string const & path)
{
  auto in = open_input(path);
  return read_points(in);
}

void write_points(std::ostream & out, std::span<Point const> points)
{
  ordered_json arr = ordered_json::array();
  for (Point const & p : points) arr.push_back(pair_json(p));
  ordered_json j;
  j["points"] = std::move(arr);
  out << j.dump(2) << '\n';
}

void write_points_file(std::string const & path, std::span<Point const> points)
{
  auto out = open_output(path);
  write_points(out, points);
}

Assignment read_assignment(std::istream & in, std::span<Point const> points)
{
  ordered_json const j = parse(in, "assignment file");
  int const n = int(points.size());

  Assignment out;
  out.alpha = number_field(j, "alpha");

  int const case_number = int(number_field(j, "case"));
  bool const mirrored = j.contains("mirrored") && j["mirrored"].is_boolean()
                            ? j["mirrored"].get<bool>()
                            : throw InvalidInput("missing boolean field 'mirrored'");
  if (case_number == 1 && !mirrored)
    out.case_tag = CaseTag::case1;
  else if (case_number == 2)
    out.case_tag = mirrored ? CaseTag::case2_mirrored : CaseTag::case2;
  else
    throw InvalidInput("case must be 1 (unmirrored) or 2");

  if (!j.contains("apex_O")) throw InvalidInput("missing field 'apex_O'");
  out.apex_O = read_pair(j["apex_O"], "apex_O");

  if (!j.contains("anchors") || !j["anchors"].is_object())
    throw InvalidInput("missing object field 'anchors'");
  out.x_index = int(number_field(j["anchors"], "x"));
  out.z_index = int(number_field(j["anchors"], "z"));
  out.y_index = int(number_field(j["anchors"], "y"));
  for (int idx : {out.x_index, out.z_index, out.y_index})
    if (idx < 0 || idx >= n) throw InvalidInput("anchor index out of range");

  if (!j.contains("wedges") || !j["wedges"].is_array() || int(j["wedges"].size()) != n)
    throw InvalidInput("assignment must carry exactly one wedge per point");
  out.wedges.assign(n, Wedge{});
  std::vector<char> seen(n, 0);
  for (auto const & node : j["wedges"])
  {
    int const i = int(number_field(node, "apex_index"));
    if (i < 0 || i >= n || seen[i])
      throw InvalidInput("wedge apex indices must cover each point exactly once");
    seen[i] = 1;
    double const half = number_field(node, "half_angle");
    if (!(half > 0.0) || !(half < kPi / 2.0))
      throw InvalidInput("half_angle must lie in (0, pi/2)");
    out.wedges[i] = Wedge{points[i], Angle(number_field(node, "bisector")), half};
  }
  return out;
}

Assignment read_assignment_file(std::string const & path, std::span<Point const> points)
{
  auto in = open_input(path);
  return read_assignment(in, points);
}

void write_assignment(std::ostream & out, Assignment const & assignment)
{
  ordered_json j;
  j["alpha"] = assignment.alpha;
  j["case"] = assignment.case_tag == CaseTag::case1 ? 1 : 2;
  j["mirrored"] = assignment.case_tag == CaseTag::case2_mirrored;
  j["apex_O"] = pair_json(assignment.apex_O);
  j["anchors"] = {{"x", assignment.x_index},
                  {"z", assignment.z_index},
                  {"y", assignment.y_index}};
  ordered_json wedges = ordered_json::array();
  for (int i = 0; i < int(assignment.wedges.size()); ++i)
  {
    Wedge const & w = assignment.wedges[i];
    wedges.push_back({{"apex_index", i},
                      {"bisector", double(w.bisector)},
                      {"half_angle", w.half_angle}});
  }
  j["wedges"] = std::move(wedges);
  out << j.dump(2) << '\n';
}

void write_assignment_file(std::string const & path, Assignment const & assignment)
{
  auto out = open_output(path);
  write_assignment(out, assignment);
}

void write_report(std::ostream & out, WedgeGraphReport const & report)
{
  ordered_json j;
  j["connected"] = report.connected;
  if (report.diameter < 0)
    j["diameter"] = "inf";
  else
    j["diameter"] = report.diameter;
  j["anchor_path_ok"] = report.anchor_path_ok;
  j["all_attached"] = report.all_attached;
  j["edge_count"] = report.edge_count;
  out << j.dump() << '\n';
}

SupportableShape read_shape(std::istream & in)
{
  ordered_json const j = parse(in, "shape file");
  if (!j.contains("shape") || !j["shape"].is_string())
    throw InvalidInput("shape file must contain a \"shape\" string");
  std::string const kind = j["shape"].get<std::string>();

  if (kind == "disk")
  {
    if (!j.contains("center")) throw InvalidInput("disk needs a 'center'");
    double const r = number_field(j, "radius");
    if (!(r > 0.0)) throw InvalidInput("disk radius must be positive");
    return Disk{read_pair(j["center"], "center"), r};
  }
  if (kind == "ellipse")
  {
    if (!j.contains("center")) throw InvalidInput("ellipse needs a 'center'");
    if (!j.contains("semi_axes")) throw InvalidInput("ellipse needs 'semi_axes'");
    Point const axes = read_pair(j["semi_axes"], "semi_axes");
    if (!(axes.x > 0.0) || !(axes.y > 0.0))
      throw InvalidInput("ellipse semi-axes must be positive");
    double const rot = j.contains("rotation") ? number_field(j, "rotation") : 0.0;
    return Ellipse{read_pair(j["center"], "center"), axes.x, axes.y, rot};
  }
  if (kind == "polygon")
  {
    if (!j.contains("points") || !j["points"].is_array())
      throw InvalidInput("polygon needs a 'points' array");
    std::vector<Point> pts;
    pts.reserve(j["points"].size());
    for (auto const & node : j["points"]) pts.push_back(read_pair(node, "point"));
    return convex_hull(pts);
  }
  throw InvalidInput("unknown shape '" + kind + "'");
}

SupportableShape read_shape_file(std::string const & path)
{
  auto in = open_input(path);
  return read_shape(in);
}
}  // namespace wedge::io
