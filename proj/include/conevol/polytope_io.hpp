#pragma once

#include "conevol/polytope.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace conevol {

/// Point-set file: a header line `dim n`, then one point per line as n
/// whitespace-separated decimals. Blank lines and lines starting with '#' are
/// skipped. Throws ParseError on malformed input.
std::vector<Point> read_points(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);

/// Writes the same format with 17 significant digits, which round-trips doubles.
void write_points(std::ostream& out, const std::vector<Point>& points);
void write_points_file(const std::string& path, const std::vector<Point>& points);

}  // namespace conevol
