#pragma once

#include <iosfwd>
#include <string>

#include "pencil/realize.hpp"

namespace pencil {

// Pencil files:
//   pencil <n> <a> <b> <field>
//   matrix 1
//   ... b rows of a scalar literals ...
//   matrix 2
//   ...
// `#` starts a comment; printing is canonical (single spaces, no trailing
// whitespace). An a = 0 row prints as an empty line.
void write_pencil(std::ostream& os, const Pencil& p);
Pencil read_pencil(std::istream& is);
std::string pencil_to_string(const Pencil& p);
Pencil pencil_from_string(const std::string& text);

// Quadrics files:
//   quadrics <n> <m> <field>
// then m rows of n(n+1)/2 scalar literals in the fixed pair order.
struct QuadricsFile {
  std::size_t vars = 0;
  Field field = Field::rationals();
  std::vector<QuadraticForm> forms;
};
void write_quadrics(std::ostream& os, const QuadricsFile& q);
QuadricsFile read_quadrics(std::istream& is);
std::string quadrics_to_string(const QuadricsFile& q);
QuadricsFile quadrics_from_string(const std::string& text);

// Point-set files:
//   points <m> <count> <field>
// then one normalized point per line, coordinates space-separated.
struct PointsFile {
  std::size_t coord_count = 0;
  Field field = Field::rationals();
  std::vector<ProjectivePoint> points;
};
void write_points(std::ostream& os, const PointsFile& pf);
PointsFile read_points(std::istream& is);
std::string points_to_string(const PointsFile& pf);
PointsFile points_from_string(const std::string& text);

// Subspace listing: `subspace <ambient> <dim> <field>` plus basis rows.
void write_subspace(std::ostream& os, const Subspace& s);

}  // namespace pencil
