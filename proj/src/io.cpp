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

#include "gately/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "gately/analysis.hpp"

namespace gately {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& message) {
  throw GameError(ErrorCode::kParseError, message);
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

// Rejects repeated keys inside any object. Repeats directly under "worths"
// are coalition duplicates; elsewhere the document is malformed.
Json parse_strict(std::string_view text) {
  struct Frame {
    std::set<std::string> keys;
    std::string owner;
  };
  std::vector<Frame> stack;
  std::string last_key;
  auto callback = [&](int, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start:
        stack.push_back({{}, last_key});
        break;
      case Json::parse_event_t::object_end:
        stack.pop_back();
        break;
      case Json::parse_event_t::key: {
        last_key = parsed.get<std::string>();
        if (!stack.back().keys.insert(last_key).second) {
          if (stack.size() == 2 && stack.back().owner == "worths") {
            throw GameError(ErrorCode::kDuplicateCoalition,
                            "coalition key \"" + last_key + "\" repeated");
          }
          parse_error("key \"" + last_key + "\" repeated");
        }
        break;
      }
      default:
        break;
    }
    return true;
  };
  try {
    return Json::parse(text.begin(), text.end(), callback);
  } catch (const Json::exception& e) {
    parse_error(e.what());
  }
}

Rational worth_literal(const Json& value, const std::string& key) {
  if (value.is_number_integer()) return parse_rational(value.dump());
  if (value.is_number_float()) {
    // Shortest decimal that round-trips the double, then taken exactly.
    char buf[64];
    const double d = value.get<double>();
    const auto res = std::to_chars(buf, buf + sizeof(buf), d);
    return parse_rational(std::string_view(buf, res.ptr - buf));
  }
  if (value.is_string()) return parse_rational(value.get<std::string>());
  parse_error("worth of \"" + key + "\" must be a number or a rational string");
}

Json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) {
    return Json(r.get_num().get_si());
  }
  return Json(to_string(r));
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

OrderedJson rational_entry(const Rational& r) {
  return OrderedJson{{"exact", to_string(r)},
                     {"decimal", format_decimal(r.get_d())}};
}

OrderedJson allocation_json(const GameDocument& doc, const Allocation& x) {
  OrderedJson out = OrderedJson::object();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.is_exact()) {
      out[doc.labels[i]] = rational_entry(x.exact_payoffs()[i]);
    } else {
      out[doc.labels[i]] = OrderedJson{{"approx", format_decimal(x[i])}};
    }
  }
  return out;
}

OrderedJson rationals_json(const GameDocument& doc,
                           const std::vector<Rational>& v) {
  OrderedJson out = OrderedJson::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[doc.labels[i]] = rational_entry(v[i]);
  }
  return out;
}

// One analysis as a JSON fragment plus its text rendering.
struct Section {
  OrderedJson json;
  std::string text;
};

Section allocation_section(const GameDocument& doc, const Allocation& x) {
  return {OrderedJson{{"mode", x.is_exact() ? "exact" : "approx"},
                      {"values", allocation_json(doc, x)}},
          allocation_text(doc, x)};
}

Section classify_section(const GameDocument& doc) {
  const auto c = classify(doc.game);
  OrderedJson j;
  std::ostringstream t;
  const std::pair<const char*, bool> flags[] = {
      {"essential", c.essential},
      {"semi_standard", c.semi_standard},
      {"semi_regular", c.semi_regular},
      {"standard", c.standard},
      {"regular", c.regular},
      {"zero_normalised", c.zero_normalised},
      {"partitionally_superadditive", c.partitionally_superadditive},
      {"superadditive", is_superadditive(doc.game)},
  };
  for (const auto& [name, value] : flags) {
    j[name] = value;
    t << name << ": " << bool_text(value) << '\n';
  }
  j["individual_worths"] = rationals_json(doc, c.individual_worths);
  j["marginal_contributions"] = rationals_json(doc, c.marginal_contributions);
  t << "individual_worths:\n";
  for (std::size_t i = 0; i < c.individual_worths.size(); ++i) {
    t << "  " << doc.labels[i] << ": " << rational_text(c.individual_worths[i])
      << '\n';
  }
  t << "marginal_contributions:\n";
  for (std::size_t i = 0; i < c.marginal_contributions.size(); ++i) {
    t << "  " << doc.labels[i] << ": "
      << rational_text(c.marginal_contributions[i]) << '\n';
  }
  return {j, t.str()};
}

Section dividends_section(const GameDocument& doc) {
  OrderedJson j = OrderedJson::object();
  std::ostringstream t;
  const auto dividends = harsanyi_dividends(doc.game);
  for (const auto& [s, d] : dividends.entries()) {
    const auto key = coalition_label(doc, s);
    j[key] = rational_entry(d);
    t << key << ": " << rational_text(d) << '\n';
  }
  return {j, t.str()};
}

Section core_section(const GameDocument& doc) {
  const auto w = core_nonempty(doc.game);
  OrderedJson j{{"nonempty", w.nonempty}};
  std::string t = "nonempty: " + bool_text(w.nonempty) + "\n";
  if (w.witness) {
    j["witness"] = allocation_json(doc, *w.witness);
    t += "witness:\n" + allocation_text(doc, *w.witness);
  }
  return {j, t};
}

unsigned long integer_alpha(double alpha) {
  auto k = exact_exponent(alpha);
  if (!k) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "dual alpha-Gately value needs an integer alpha in [1, " +
                        std::to_string(kMaxExactExponent) + "]");
  }
  return *k;
}

Section run_analysis(const GameDocument& doc, const std::string& name,
                     double alpha) {
  const Game& g = doc.game;
  if (name == "classify") return classify_section(doc);
  if (name == "dividends") return dividends_section(doc);
  if (name == "gately") return allocation_section(doc, gately_value(g));
  if (name == "alpha-gately") {
    return allocation_section(doc, alpha_gately_value(g, alpha));
  }
  if (name == "dual-gately") {
    return allocation_section(doc, dual_alpha_gately(g, integer_alpha(alpha)));
  }
  if (name == "shapley") return allocation_section(doc, shapley_value(g));
  if (name == "nucleolus") return allocation_section(doc, nucleolus(g));
  if (name == "equal") return allocation_section(doc, equal_division(g));
  if (name == "core") return core_section(doc);
  if (name == "compromise") {
    const Rational gamma = compromise_coefficient(g);
    return {OrderedJson{{"gamma", rational_entry(gamma)}},
            "gamma: " + rational_text(gamma) + "\n"};
  }
  throw GameError(ErrorCode::kInvalidParameter, "unknown analysis " + name);
}

}  // namespace

GameDocument parse_game(std::string_view text) {
  const Json root = parse_strict(text);
  if (!root.is_object()) parse_error("game document must be a JSON object");
  for (const auto& [key, _] : root.items()) {
    if (key != "name" && key != "description" && key != "players" &&
        key != "worths") {
      parse_error("unexpected field \"" + key + "\"");
    }
  }

  GameDocument doc;
  auto text_field = [&](const char* field) -> std::string {
    if (!root.contains(field)) return {};
    if (!root[field].is_string()) {
      parse_error(std::string(field) + " must be a string");
    }
    return root[field].get<std::string>();
  };
  doc.name = text_field("name");
  doc.description = text_field("description");

  if (!root.contains("players") || !root["players"].is_array()) {
    parse_error("players must be an array of labels");
  }
  std::map<std::string, int> index;
  for (const auto& p : root["players"]) {
    if (!p.is_string()) parse_error("player labels must be strings");
    std::string label = p.get<std::string>();
    if (label.empty() || label != trim(label) ||
        label.find(',') != std::string::npos) {
      parse_error("player label \"" + label +
                  "\" must be nonempty without commas or outer spaces");
    }
    if (!index.emplace(label, static_cast<int>(doc.labels.size())).second) {
      parse_error("player label \"" + label + "\" repeated");
    }
    doc.labels.push_back(std::move(label));
  }
  const int n = static_cast<int>(doc.labels.size());
  if (n > kMaxPlayers) {
    throw GameError(ErrorCode::kTooManyPlayers,
                    std::to_string(n) + " players; at most " +
                        std::to_string(kMaxPlayers) + " are supported");
  }
  if (n < 2) {
    throw GameError(ErrorCode::kInvalidGame, "a game needs at least 2 players");
  }

  if (!root.contains("worths") || !root["worths"].is_object()) {
    parse_error("worths must be an object");
  }
  std::vector<Rational> worths(coalition_count(n), Rational(0));
  std::map<std::uint32_t, std::string> seen;
  for (const auto& [key, value] : root["worths"].items()) {
    std::uint32_t mask = 0;
    std::string_view rest = key;
    while (true) {
      const auto comma = rest.find(',');
      const std::string label = trim(rest.substr(0, comma));
      const auto it = index.find(label);
      if (it == index.end()) {
        if (label.empty()) {
          throw GameError(ErrorCode::kInvalidCoalition,
                          "coalition key \"" + key + "\" has an empty label");
        }
        throw GameError(ErrorCode::kUnknownLabel,
                        "\"" + label + "\" in coalition \"" + key + "\"");
      }
      const std::uint32_t bit = 1u << it->second;
      if (mask & bit) {
        throw GameError(ErrorCode::kInvalidCoalition,
                        "coalition key \"" + key + "\" repeats " + label);
      }
      mask |= bit;
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (auto [it, fresh] = seen.emplace(mask, key); !fresh) {
      throw GameError(ErrorCode::kDuplicateCoalition,
                      "\"" + key + "\" and \"" + it->second +
                          "\" name the same coalition");
    }
    worths[mask] = worth_literal(value, key);
  }
  if (!seen.contains(coalition_count(n) - 1)) {
    throw GameError(ErrorCode::kMissingGrandCoalition,
                    "worths must list the grand coalition");
  }
  doc.game = Game(n, std::move(worths));
  return doc;
}

GameDocument read_game_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

std::string coalition_label(const GameDocument& doc, Coalition s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.members()) {
    if (!first) out += ',';
    out += doc.labels.at(i);
    first = false;
  }
  return out + "}";
}

std::string serialise_game(const GameDocument& doc) {
  OrderedJson root;
  root["name"] = doc.name;
  root["description"] = doc.description;
  root["players"] = doc.labels;
  OrderedJson worths = OrderedJson::object();
  const int n = doc.game.players();
  const std::uint32_t grand = coalition_count(n) - 1;
  for (std::uint32_t mask = 1; mask <= grand; ++mask) {
    const Rational& w = doc.game.worth(Coalition(mask));
    if (w == 0 && mask != grand) continue;
    std::string key;
    for (int i : Coalition(mask).members()) {
      if (!key.empty()) key += ',';
      key += doc.labels[i];
    }
    worths[key] = rational_json(w);
  }
  root["worths"] = std::move(worths);
  return root.dump(2) + "\n";
}

void write_game_file(const std::filesystem::path& path, const GameDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw GameError(ErrorCode::kInvalidParameter,
                    "cannot write " + path.string());
  }
  out << serialise_game(doc);
}

ReportFormat parse_report_format(std::string_view text) {
  if (text == "text") return ReportFormat::kText;
  if (text == "json") return ReportFormat::kJson;
  throw GameError(ErrorCode::kInvalidParameter,
                  "format must be text or json, got " + std::string(text));
}

std::string rational_text(const Rational& r) {
  return to_string(r) + " (" + format_decimal(r.get_d()) + ")";
}

std::string allocation_text(const GameDocument& doc, const Allocation& x) {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out += doc.labels.at(i) + ": ";
    if (x.is_exact()) {
      out += rational_text(x.exact_payoffs()[i]);
    } else {
      out += format_decimal(x[i]) + " (approx)";
    }
    out += '\n';
  }
  return out;
}

Report emit_report(const GameDocument& doc, const ReportRequest& request,
                   ReportFormat format) {
  for (const auto& name : request.analyses) {
    if (std::find(known_analyses().begin(), known_analyses().end(), name) ==
        known_analyses().end()) {
      throw GameError(ErrorCode::kInvalidParameter, "unknown analysis " + name);
    }
  }
  const double alpha = request.alpha.value_or(1.0);
  Report report;
  OrderedJson root;
  root["game"] = doc.name;
  root["players"] = doc.labels;
  if (request.alpha) root["alpha"] = format_decimal(*request.alpha);
  OrderedJson analyses = OrderedJson::object();
  std::string text = "game: " + doc.name + "\n";
  for (const auto& name : request.analyses) {
    text += "[" + name + "]\n";
    try {
      auto section = run_analysis(doc, name, alpha);
      analyses[name] = std::move(section.json);
      text += section.text;
    } catch (const GameError& e) {
      analyses[name] = OrderedJson{
          {"error", OrderedJson{{"code", std::string(error_name(e.code()))},
                                {"message", e.detail()}}}};
      text += std::string("error: ") + e.what() + "\n";
      if (!report.first_error) report.first_error = e;
    }
  }
  root["analyses"] = std::move(analyses);
  report.document =
      format == ReportFormat::kJson ? root.dump(2) + "\n" : std::move(text);
  return report;
}

}  // namespace gately
