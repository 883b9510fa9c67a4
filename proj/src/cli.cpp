// Copyright 2026 The Gately Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gately/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gately/analysis.hpp"
#include "gately/errors.hpp"
#include "gately/generators.hpp"
#include "gately/io.hpp"

namespace gately {
namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr double kVerifyTolerance = 1e-5;

struct Options {
  std::string file;
  std::string format = "text";
  std::string method;
  std::string alpha;
  std::string point;
  std::string tol;
  int grid = 241;
  std::string output;
  std::string emit_dir;
};

std::optional<double> optional_real(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_real(text);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

OrderedJson rational_entry(const Rational& r) {
  return OrderedJson{{"exact", to_string(r)},
                     {"decimal", format_decimal(r.get_d())}};
}

OrderedJson allocation_json(const GameDocument& doc, const Allocation& x) {
  OrderedJson out = OrderedJson::object();
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[doc.labels[i]] =
        x.is_exact() ? rational_entry(x.exact_payoffs()[i])
                     : OrderedJson{{"approx", format_decimal(x[i])}};
  }
  return out;
}

int run_info(const Options& o, std::ostream& out) {
  const auto doc = read_game_file(o.file);
  const auto report = emit_report(doc, {{"classify"}, std::nullopt},
                                  parse_report_format(o.format));
  out << report.document;
  return kExitOk;
}

int run_value(const Options& o, std::ostream& out, std::ostream& err) {
  const auto format = parse_report_format(o.format);
  const auto doc = read_game_file(o.file);
  const auto alpha = optional_real(o.alpha);
  std::string analysis = o.method;
  if (o.method == "gately" && alpha) analysis = "alpha-gately";
  if (o.method != "gately" && o.method != "dual-gately" && alpha) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "--alpha applies to gately and dual-gately only");
  }
  const auto report = emit_report(doc, {{analysis}, alpha}, format);
  if (report.first_error) {
    err << report.first_error->what() << '\n';
    return is_input_error(report.first_error->code()) ? kExitUsageError
                                                     : kExitAnalysisError;
  }
  out << report.document;
  return kExitOk;
}

Allocation parse_point(const std::string& text, int n) {
  std::vector<Rational> x;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    x.push_back(parse_rational(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (static_cast<int>(x.size()) != n) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "--point has " + std::to_string(x.size()) +
                        " entries for " + std::to_string(n) + " players");
  }
  return Allocation::exact(std::move(x));
}

int run_check_core(const Options& o, std::ostream& out) {
  const auto format = parse_report_format(o.format);
  const auto doc = read_game_file(o.file);
  const auto alpha = optional_real(o.alpha);
  if (!o.point.empty() && alpha) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "--point and --alpha are mutually exclusive");
  }
  std::string source = "gately";
  Allocation x;
  if (!o.point.empty()) {
    source = "point";
    x = parse_point(o.point, doc.game.players());
  } else if (alpha) {
    source = "alpha-gately";
    x = alpha_gately_value(doc.game, *alpha);
  } else {
    x = gately_value(doc.game);
  }
  const auto cert = core_membership(doc.game, x);

  if (format == ReportFormat::kJson) {
    OrderedJson j;
    j["game"] = doc.name;
    j["source"] = source;
    if (alpha) j["alpha"] = format_decimal(*alpha);
    j["point"] = allocation_json(doc, x);
    j["member"] = cert.member;
    j["efficient"] = cert.efficient;
    j["approximate"] = cert.approximate;
    OrderedJson v = OrderedJson::array();
    for (const auto& c : cert.violated_coalitions) {
      v.push_back(OrderedJson{{"coalition", coalition_label(doc, c.coalition)},
                              {"deficit", rational_entry(c.deficit)}});
    }
    j["violations"] = std::move(v);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "game: " << doc.name << '\n' << "point (" << source << "):\n"
      << allocation_text(doc, x) << "member: " << bool_text(cert.member) << '\n'
      << "efficient: " << bool_text(cert.efficient) << '\n';
  if (cert.approximate) out << "mode: approx\n";
  for (const auto& c : cert.violated_coalitions) {
    out << "violation " << coalition_label(doc, c.coalition) << ": deficit "
        << rational_text(c.deficit) << '\n';
  }
  return kExitOk;
}

std::string endpoint_text(double value, bool exact) {
  return format_decimal(value) + (exact ? "" : " (approx)");
}

int run_alpha_range(const Options& o, std::ostream& out) {
  const auto format = parse_report_format(o.format);
  const auto doc = read_game_file(o.file);
  const double tol = o.tol.empty() ? 1e-6 : parse_real(o.tol);
  const auto range = alpha_core_range(doc.game, o.grid, tol);

  if (format == ReportFormat::kJson) {
    OrderedJson j;
    j["game"] = doc.name;
    j["probe_min"] = format_decimal(kAlphaProbeMin);
    j["probe_max"] = format_decimal(kAlphaProbeMax);
    j["probes"] = range.probe_grid.size();
    j["refine_tol"] = format_decimal(tol);
    OrderedJson list = OrderedJson::array();
    for (const auto& iv : range.intervals) {
      list.push_back(OrderedJson{{"lower", format_decimal(iv.lower)},
                                 {"upper", format_decimal(iv.upper)},
                                 {"lower_exact", iv.lower_exact},
                                 {"upper_exact", iv.upper_exact},
                                 {"degenerate", iv.degenerate()}});
    }
    j["intervals"] = std::move(list);
    j["endpoints_validated"] = range.endpoints_validated;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "game: " << doc.name << '\n'
      << "probes: " << range.probe_grid.size() << " over ["
      << format_decimal(kAlphaProbeMin) << ", "
      << format_decimal(kAlphaProbeMax) << "]\n";
  if (range.intervals.empty()) {
    out << "no probed alpha puts the alpha-Gately value in the Core\n";
  }
  for (const auto& iv : range.intervals) {
    if (iv.degenerate()) {
      out << "interval: {" << endpoint_text(iv.lower, iv.lower_exact) << "}\n";
    } else {
      out << "interval: [" << endpoint_text(iv.lower, iv.lower_exact) << ", "
          << endpoint_text(iv.upper, iv.upper_exact) << "]\n";
    }
  }
  out << "endpoints_validated: " << bool_text(range.endpoints_validated) << '\n';
  return kExitOk;
}

int run_dividends(const Options& o, std::ostream& out) {
  const auto doc = read_game_file(o.file);
  out << emit_report(doc, {{"dividends"}, std::nullopt},
                     parse_report_format(o.format))
             .document;
  return kExitOk;
}

int run_dual(const Options& o, std::ostream& out) {
  auto doc = read_game_file(o.file);
  doc.game = dual_game(doc.game);
  doc.description = "Dual game of " + (doc.name.empty() ? o.file : doc.name);
  doc.name = doc.name.empty() ? "dual" : doc.name + "_dual";
  write_game_file(o.output, doc);
  out << "wrote " << o.output << '\n';
  return kExitOk;
}

int run_fixtures(const Options& o, std::ostream& out) {
  const std::filesystem::path dir(o.emit_dir);
  std::filesystem::create_directories(dir);
  for (const auto& [name, f] : builtin_fixtures()) {
    const auto path = dir / (name + ".json");
    write_game_file(path, GameDocument{f.name, f.description, f.labels, f.game});
    out << "wrote " << path.string() << '\n';
  }
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto format = parse_report_format(o.format);
  const auto doc = read_game_file(o.file);
  const double alpha = parse_real(o.alpha);
  const auto closed = alpha_gately_value(doc.game, alpha);
  const auto oracle = minimax_oracle(doc.game, 1.0 / alpha);
  double deviation = 0.0;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    deviation = std::max(deviation, std::abs(closed[i] - oracle[i]));
  }
  const bool agree = deviation <= kVerifyTolerance;

  if (format == ReportFormat::kJson) {
    OrderedJson j;
    j["game"] = doc.name;
    j["alpha"] = format_decimal(alpha);
    j["closed_form"] = allocation_json(doc, closed);
    j["minimax_oracle"] = allocation_json(doc, oracle);
    j["max_deviation"] = format_decimal(deviation);
    j["tolerance"] = format_decimal(kVerifyTolerance);
    j["agree"] = agree;
    out << j.dump(2) << '\n';
  } else {
    out << "game: " << doc.name << '\n'
        << "alpha: " << format_decimal(alpha) << '\n'
        << "closed form:\n" << allocation_text(doc, closed)
        << "minimax oracle:\n" << allocation_text(doc, oracle)
        << "max deviation: " << format_decimal(deviation) << '\n'
        << "agree: " << bool_text(agree) << '\n';
  }
  if (!agree) {
    err << "oracle deviates from the closed form by "
        << format_decimal(deviation) << '\n';
    return kExitAnalysisError;
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Exact solver for transferable-utility cooperative games",
               "gately"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Game document (JSON)")->required();
    sub->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* info = app.add_subcommand("info", "Classify the game");
  add_file(info);

  auto* value = app.add_subcommand("value", "Compute a value");
  add_file(value);
  value->add_option("--method", o.method, "Value map")
      ->required()
      ->check(CLI::IsMember(
          {"gately", "shapley", "nucleolus", "equal", "dual-gately"}));
  value->add_option("--alpha", o.alpha, "Exponent alpha > 0");

  auto* check = app.add_subcommand("check-core", "Test Core membership");
  add_file(check);
  check->add_option("--point", o.point, "Payoffs x1,x2,... (p/q allowed)");
  check->add_option("--alpha", o.alpha, "Check the alpha-Gately value");

  auto* range = app.add_subcommand("alpha-range",
                                    "Alpha values whose alpha-Gately value "
                                    "lies in the Core");
  add_file(range);
  range->add_option("--tol", o.tol, "Bisection width");
  range->add_option("--grid", o.grid, "Number of log-spaced probes");

  auto* dividends = app.add_subcommand("dividends", "Harsanyi dividends");
  add_file(dividends);

  auto* dual = app.add_subcommand("dual", "Write the dual game");
  dual->add_option("file", o.file, "Game document (JSON)")->required();
  dual->add_option("-o,--output", o.output, "Output path")->required();

  auto* fixtures = app.add_subcommand("fixtures", "Write the example games");
  fixtures->add_option("--emit", o.emit_dir, "Output directory")->required();

  auto* verify = app.add_subcommand(
      "verify", "Compare the minimax oracle with the closed form");
  add_file(verify);
  verify->add_option("--alpha", o.alpha, "Exponent alpha > 0")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out, usage_err;
    const int code = app.exit(e, usage_out, usage_err);
    out << usage_out.str();
    std::string message = usage_err.str();
    if (!message.empty()) {
      // First line only.
      err << message.substr(0, message.find('\n')) << '\n';
    }
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (*info) return run_info(o, out);
    if (*value) return run_value(o, out, err);
    if (*check) return run_check_core(o, out);
    if (*range) return run_alpha_range(o, out);
    if (*dividends) return run_dividends(o, out);
    if (*dual) return run_dual(o, out);
    if (*fixtures) return run_fixtures(o, out);
    if (*verify) return run_verify(o, out, err);
  } catch (const GameError& e) {
    err << e.what() << '\n';
    return is_input_error(e.code()) ? kExitUsageError : kExitAnalysisError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAnalysisError;
  }
  return kExitUsageError;
}

}  // namespace gately
