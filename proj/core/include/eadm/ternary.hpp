#pragma once

#include "eadm/core.hpp"
#include "eadm/model.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace eadm {

// One grid mass function with its exact classification.
struct TernaryGridRow {
  MassFunction p;
  bool in_credal;
  // Parallel to the queried option names: whether that option attains the
  // maximal expectation over the query set at p.
  std::vector<bool> maximiser;
};

// The locus {p : E_p(d) = 0} clipped to the probability simplex.
struct TernaryLine {
  std::string label;
  Option direction;
  // Endpoints of the clipped segment (equal for a single touching point);
  // absent when the locus misses the simplex or covers all of it.
  std::optional<std::pair<MassFunction, MassFunction>> segment;
};

struct TernaryExport {
  std::vector<std::string> query_names;
  std::vector<TernaryGridRow> rows;
  std::vector<TernaryLine> lines;
};

// Intersection of {p : E_p(d) = 0} with the three-outcome simplex, exactly.
// Requires d of length 3. Returns nullopt when no point of the simplex
// satisfies the equation, or when every point does (d = 0).
std::optional<std::pair<MassFunction, MassFunction>> simplex_zero_segment(const Option& d);

// Classifies every grid mass function (credal membership, per-option
// maximiser flags over the query) and clips the boundary lines: one line
// per kept/rejected name pair of the assessment, plus one per unordered
// pair of queried options. Requires a three-outcome model.
TernaryExport ternary_export(const Model& model, const std::vector<std::string>& query_names,
                             unsigned resolution);

// CSV with header p1,p2,p3,in_credal and one max_<name> column per queried
// option. Coordinates use 12 significant digits; flags are 0/1.
void write_ternary_grid_csv(std::ostream& os, const TernaryExport& data);

// CSV with header label,a1,a2,a3,b1,b2,b3; lines without a segment keep
// the coordinate fields empty.
void write_ternary_lines_csv(std::ostream& os, const TernaryExport& data);

}  // namespace eadm
