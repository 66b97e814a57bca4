#include "eadm/ternary.hpp"

#include "eadm/oracle.hpp"
#include "eadm/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace eadm {
namespace {

// RFC 4180 quoting, applied only when the field needs it.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) {
    return text;
  }
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void append_point(std::vector<MassFunction>& points, MassFunction p) {
  if (std::find(points.begin(), points.end(), p) == points.end()) {
    points.push_back(std::move(p));
  }
}

}  // namespace

std::optional<std::pair<MassFunction, MassFunction>> simplex_zero_segment(const Option& d) {
  if (d.size() != 3) {
    throw std::invalid_argument("simplex_zero_segment: option must have three entries");
  }
  const Rational zero(0);
  if (d[0] == zero && d[1] == zero && d[2] == zero) {
    return std::nullopt;  // every mass function qualifies; nothing to draw
  }

  std::vector<MassFunction> points;
  for (std::size_t k = 0; k < 3; ++k) {
    if (d[k] == zero) {
      std::vector<Rational> vertex(3, zero);
      vertex[k] = 1;
      append_point(points, MassFunction(std::move(vertex)));
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      // A crossing strictly inside edge (i, j) needs opposite signs.
      if (sgn(d[i]) * sgn(d[j]) >= 0) {
        continue;
      }
      std::vector<Rational> p(3, zero);
      p[i] = d[j] / (d[j] - d[i]);
      p[j] = d[i] / (d[i] - d[j]);
      append_point(points, MassFunction(std::move(p)));
    }
  }

  if (points.empty()) {
    return std::nullopt;
  }
  if (points.size() == 1) {
    return std::make_pair(points[0], points[0]);
  }
  return std::make_pair(points[0], points[1]);
}

TernaryExport ternary_export(const Model& model, const std::vector<std::string>& query_names,
                             unsigned resolution) {
  if (model.outcomes.size() != 3) {
    throw std::invalid_argument("ternary export requires exactly three outcomes");
  }
  if (query_names.empty()) {
    throw std::invalid_argument("ternary export requires at least one queried option");
  }
  if (resolution == 0) {
    throw std::invalid_argument("ternary export requires a positive resolution");
  }

  std::vector<const Option*> query;
  query.reserve(query_names.size());
  for (const std::string& name : query_names) {
    const Option* u = model.find_option(name);
    if (u == nullptr) {
      throw ModelError(ModelErrorCode::unknown_option, name, "no option named \"" + name + '"');
    }
    query.push_back(u);
  }

  TernaryExport data;
  data.query_names = query_names;

  SimplexGrid grid{3, resolution};
  data.rows.reserve(static_cast<std::size_t>(grid_point_count(grid)));
  for_each_grid_point(grid, [&](const MassFunction& p) {
    TernaryGridRow row{p, credal_member(p, model.assessment), {}};
    std::vector<Rational> values;
    values.reserve(query.size());
    for (const Option* u : query) {
      values.push_back(expectation(p, *u));
    }
    const Rational best = *std::max_element(values.begin(), values.end());
    row.maximiser.reserve(values.size());
    for (const Rational& value : values) {
      row.maximiser.push_back(value == best);
    }
    data.rows.push_back(std::move(row));
    return true;
  });

  for (const ModelEntry& entry : model.entries) {
    for (const std::string& keep_name : entry.keep) {
      const Option& v = *model.find_option(keep_name);
      for (const std::string& reject_name : entry.reject) {
        const Option& w = *model.find_option(reject_name);
        Option d = v - w;
        data.lines.push_back(TernaryLine{keep_name + '-' + reject_name, d, simplex_zero_segment(d)});
      }
    }
  }
  for (std::size_t i = 0; i < query.size(); ++i) {
    for (std::size_t j = i + 1; j < query.size(); ++j) {
      Option d = *query[i] - *query[j];
      data.lines.push_back(
          TernaryLine{query_names[i] + '-' + query_names[j], d, simplex_zero_segment(d)});
    }
  }

  return data;
}

void write_ternary_grid_csv(std::ostream& os, const TernaryExport& data) {
  os << "p1,p2,p3,in_credal";
  for (const std::string& name : data.query_names) {
    os << ',' << csv_field("max_" + name);
  }
  os << '\n';
  for (const TernaryGridRow& row : data.rows) {
    os << to_decimal(row.p[0], 12) << ',' << to_decimal(row.p[1], 12) << ','
       << to_decimal(row.p[2], 12) << ',' << (row.in_credal ? 1 : 0);
    for (bool flag : row.maximiser) {
      os << ',' << (flag ? 1 : 0);
    }
    os << '\n';
  }
}

void write_ternary_lines_csv(std::ostream& os, const TernaryExport& data) {
  os << "label,a1,a2,a3,b1,b2,b3\n";
  for (const TernaryLine& line : data.lines) {
    os << csv_field(line.label);
    if (line.segment) {
      const auto& [a, b] = *line.segment;
      for (std::size_t k = 0; k < 3; ++k) {
        os << ',' << to_decimal(a[k], 12);
      }
      for (std::size_t k = 0; k < 3; ++k) {
        os << ',' << to_decimal(b[k], 12);
      }
    } else {
      os << ",,,,,,";
    }
    os << '\n';
  }
}

}  // namespace eadm
