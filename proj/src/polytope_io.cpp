#include "conevol/polytope_io.hpp"

#include "conevol/error.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace conevol {

namespace {

bool content_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

std::vector<Point> read_points(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!content_line(in, line, lineno)) throw Error(ErrorCode::ParseError, "empty point file");

  std::istringstream header(line);
  std::string tag;
  int dim = 0;
  if (!(header >> tag >> dim) || tag != "dim" || dim < 2) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected `dim n` with n >= 2");
  }

  std::vector<Point> points;
  while (content_line(in, line, lineno)) {
    std::istringstream row(line);
    Point p(dim);
    for (int k = 0; k < dim; ++k) {
      if (!(row >> p[k])) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " + std::to_string(dim) + " coordinates");
      }
    }
    std::string extra;
    if (row >> extra) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": trailing data");
    points.push_back(std::move(p));
  }
  return points;
}

std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  return read_points(in);
}

void write_points(std::ostream& out, const std::vector<Point>& points) {
  if (points.empty()) throw Error(ErrorCode::ParseError, "nothing to write");
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << "dim " << points.front().size() << '\n';
  out << std::setprecision(17);
  for (const auto& p : points) {
    for (Eigen::Index k = 0; k < p.size(); ++k) out << (k ? " " : "") << p[k];
    out << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

void write_points_file(const std::string& path, const std::vector<Point>& points) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  write_points(out, points);
}

}  // namespace conevol
