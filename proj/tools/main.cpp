// eadm: decide option sets under a rejection assessment.
//
// Subcommands:
//   extend     partition a queried option set into chosen / rejected
//   consistent check that the assessment admits any mass function at all
//   witness    print one mass function compatible with the assessment
//   plot       export ternary-plot CSV data for three-outcome models
//
// Exit codes: 0 success, 1 input error, 2 inconsistent assessment.

#include <CLI11.hpp>
#include <json.hpp>

#include "eadm/engine.hpp"
#include "eadm/model.hpp"
#include "eadm/rational.hpp"
#include "eadm/ternary.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInconsistent = 2;
constexpr int kPlotDigits = 12;

struct GlobalFlags {
  bool json = false;
  bool approximate = false;
  std::uint64_t max_tuples = 1'000'000;
  unsigned grid = 200;
};

// Exact "p/q" text normally; 12-significant-digit decimals under --float,
// where the solver itself is approximate anyway.
std::string format_value(const eadm::Rational& q, const GlobalFlags& flags) {
  return flags.approximate ? eadm::to_decimal(q, kPlotDigits) : eadm::to_string(q);
}

ordered_json mass_to_json(const eadm::MassFunction& p, const GlobalFlags& flags) {
  ordered_json values = ordered_json::array();
  for (const eadm::Rational& q : p.probs()) {
    values.push_back(format_value(q, flags));
  }
  return values;
}

std::string mass_to_text(const eadm::MassFunction& p, const GlobalFlags& flags) {
  std::string text = "(";
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) text += ", ";
    text += format_value(p[k], flags);
  }
  return text + ")";
}

void emit(const GlobalFlags& flags, const ordered_json& report, const std::string& text) {
  if (flags.json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

eadm::EngineOptions engine_options(const GlobalFlags& flags) {
  eadm::EngineOptions opts;
  opts.tuple_warning_cap = flags.max_tuples;
  opts.approximate = flags.approximate;
  return opts;
}

int run_extend(const GlobalFlags& flags, const std::string& model_path,
               const std::vector<std::string>& set_names, bool want_witness) {
  eadm::Model model = eadm::load_model(model_path);
  eadm::OptionSet query = model.option_set(set_names);
  eadm::ExtensionResult result = eadm::extension(query, model.assessment, engine_options(flags));

  // Map verdicts back to the names the user asked about. Names sharing one
  // value share a verdict.
  auto verdict_for = [&](const std::string& name) -> const eadm::AdmissibilityVerdict& {
    const eadm::Option& value = *model.find_option(name);
    for (std::size_t i = 0; i < result.queried.size(); ++i) {
      if (result.queried[i] == value) {
        return result.verdicts[i];
      }
    }
    throw std::logic_error("query verdict lookup failed");
  };

  std::vector<std::string> chosen;
  std::vector<std::string> rejected;
  for (const std::string& name : set_names) {
    (verdict_for(name).admissible ? chosen : rejected).push_back(name);
  }
  const bool consistent = !result.empty();

  ordered_json report;
  report["command"] = "extend";
  report["set"] = set_names;
  report["consistent"] = consistent;
  report["chosen"] = chosen;
  report["rejected"] = rejected;
  if (want_witness) {
    ordered_json witnesses = ordered_json::object();
    for (const std::string& name : chosen) {
      const auto& verdict = verdict_for(name);
      if (verdict.witness) {
        witnesses[name] = mass_to_json(*verdict.witness, flags);
      }
    }
    report["witnesses"] = std::move(witnesses);
  }

  std::string text;
  auto join = [](const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) out += ", ";
      out += names[i];
    }
    return out.empty() ? std::string("(none)") : out;
  };
  text += "chosen:   " + join(chosen) + '\n';
  text += "rejected: " + join(rejected) + '\n';
  if (want_witness) {
    for (const std::string& name : chosen) {
      const auto& verdict = verdict_for(name);
      if (verdict.witness) {
        text += "witness " + name + ": " + mass_to_text(*verdict.witness, flags) + '\n';
      }
    }
  }
  if (!consistent) {
    text += "assessment is inconsistent: no option is admissible\n";
  }

  emit(flags, report, text);
  return consistent ? kExitOk : kExitInconsistent;
}

int run_consistent(const GlobalFlags& flags, const std::string& model_path) {
  eadm::Model model = eadm::load_model(model_path);
  const bool ok =
      eadm::is_consistent(model.outcomes.size(), model.assessment, engine_options(flags));

  ordered_json report;
  report["command"] = "consistent";
  report["consistent"] = ok;
  emit(flags, report, ok ? "consistent\n" : "inconsistent\n");
  return ok ? kExitOk : kExitInconsistent;
}

int run_witness(const GlobalFlags& flags, const std::string& model_path) {
  eadm::Model model = eadm::load_model(model_path);
  std::optional<eadm::MassFunction> witness =
      eadm::find_witness(model.outcomes.size(), model.assessment, engine_options(flags));

  ordered_json report;
  report["command"] = "witness";
  report["consistent"] = witness.has_value();
  if (witness) {
    report["witness"] = mass_to_json(*witness, flags);
    emit(flags, report, "witness: " + mass_to_text(*witness, flags) + '\n');
    return kExitOk;
  }
  report["witness"] = nullptr;
  emit(flags, report, "inconsistent\n");
  return kExitInconsistent;
}

int run_plot(const GlobalFlags& flags, const std::string& model_path,
             const std::vector<std::string>& set_names, const std::string& out_prefix) {
  eadm::Model model = eadm::load_model(model_path);
  eadm::TernaryExport data = eadm::ternary_export(model, set_names, flags.grid);

  const std::string grid_path = out_prefix + "-grid.csv";
  const std::string lines_path = out_prefix + "-lines.csv";
  {
    std::ofstream grid_file(grid_path);
    if (!grid_file) {
      throw std::runtime_error("cannot write \"" + grid_path + '"');
    }
    eadm::write_ternary_grid_csv(grid_file, data);
  }
  {
    std::ofstream lines_file(lines_path);
    if (!lines_file) {
      throw std::runtime_error("cannot write \"" + lines_path + '"');
    }
    eadm::write_ternary_lines_csv(lines_file, data);
  }

  ordered_json report;
  report["command"] = "plot";
  report["grid_csv"] = grid_path;
  report["lines_csv"] = lines_path;
  report["grid_rows"] = data.rows.size();
  report["lines"] = data.lines.size();
  emit(flags, report,
       "wrote " + grid_path + " (" + std::to_string(data.rows.size()) + " points) and " +
           lines_path + " (" + std::to_string(data.lines.size()) + " lines)\n");
  return kExitOk;
}

int report_error(const GlobalFlags& flags, const std::string& code, const std::string& location,
                 const std::string& message) {
  if (flags.json) {
    ordered_json report;
    report["error"] = {{"code", code}, {"location", location}, {"message", message}};
    std::cout << report.dump(2) << '\n';
  }
  std::fprintf(stderr, "eadm: error: %s\n", message.c_str());
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide option sets under a rejection assessment"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Emit one JSON object on standard output");
  app.add_flag("--float", flags.approximate,
               "Use double-precision feasibility checks (tolerance 1e-9) instead of "
               "exact rational arithmetic");
  app.add_option("--max-tuples", flags.max_tuples,
                 "Warn when a query needs more than this many difference tuples")
      ->capture_default_str();
  app.add_option("--grid", flags.grid, "Simplex grid resolution for plot export")
      ->capture_default_str();

  std::string model_path;
  std::vector<std::string> set_names;
  bool want_witness = false;
  std::string out_prefix = "ternary";

  CLI::App* extend = app.add_subcommand(
      "extend", "Partition a queried option set into chosen and rejected options");
  extend->add_option("model", model_path, "Model JSON file")->required();
  extend->add_option("--set", set_names, "Comma-separated option names to query")
      ->required()
      ->delimiter(',');
  extend->add_flag("--witness", want_witness, "Print a witness mass function per chosen option");

  CLI::App* consistent =
      app.add_subcommand("consistent", "Check that the assessment admits a mass function");
  consistent->add_option("model", model_path, "Model JSON file")->required();

  CLI::App* witness =
      app.add_subcommand("witness", "Print one mass function compatible with the assessment");
  witness->add_option("model", model_path, "Model JSON file")->required();

  CLI::App* plot = app.add_subcommand(
      "plot", "Export ternary-plot CSV data (three-outcome models only)");
  plot->add_option("model", model_path, "Model JSON file")->required();
  plot->add_option("--set", set_names, "Comma-separated option names to query")
      ->required()
      ->delimiter(',');
  plot->add_option("--out", out_prefix, "Output path prefix")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (extend->parsed()) {
      return run_extend(flags, model_path, set_names, want_witness);
    }
    if (consistent->parsed()) {
      return run_consistent(flags, model_path);
    }
    if (witness->parsed()) {
      return run_witness(flags, model_path);
    }
    if (plot->parsed()) {
      return run_plot(flags, model_path, set_names, out_prefix);
    }
  } catch (const eadm::ModelError& e) {
    return report_error(flags, std::string(eadm::to_string(e.code())), e.location(), e.what());
  } catch (const std::exception& e) {
    return report_error(flags, "error", "", e.what());
  }
  return kExitInputError;
}
