#include "hypotria/cli.hpp"

#include "hypotria/decomposition.hpp"
#include "hypotria/oracle.hpp"
#include "hypotria/six_search.hpp"
#include "hypotria/special_points.hpp"
#include "hypotria/triple.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <map>
#include <regex>
#include <sstream>

namespace hypotria::cli {

namespace {

using Json = nlohmann::ordered_json;

// Results of one command. Tabular commands emit one record per row and fix
// their columns up front so an empty result still has a CSV header.
struct Output {
  Output() = default;
  explicit Output(std::string name) : command(std::move(name)) {}

  std::string command;
  Json inputs = Json::object();
  std::vector<Json> records;
  bool tabular = false;
  std::vector<std::string> columns;
};

struct Args {
  std::string format;
  std::string d, m, n, a, b, c;
  std::string t, h1;
  std::string max_c;
  std::string inner_m, inner_n, k;
  std::string point;
  std::string claim;
  std::string bound;
  bool list_claims = false;
};

std::string s(const BigInt& v) { return v.str(); }
std::string s(const Rational& v) { return v.str(); }

Json lengths_json(const std::vector<NamedLength>& lengths) {
  Json out = Json::object();
  for (const auto& l : lengths) out[l.name] = s(l.value);
  return out;
}

TripleParams params_from(const Args& args, Json& inputs) {
  inputs["d"] = args.d;
  inputs["m"] = args.m;
  inputs["n"] = args.n;
  return TripleParams(parse_bigint(args.d), parse_bigint(args.m), parse_bigint(args.n));
}

Output cmd_generate(const Args& args) {
  Output out("generate");
  out.inputs["max_c"] = args.max_c;
  out.tabular = true;
  out.columns = {"d", "m", "n", "a", "b", "c"};
  for (const auto& p : enumerate_params(parse_bigint(args.max_c))) {
    const Triple t = triple_from_params(p);
    out.records.push_back(
        Json{{"d", s(p.d())}, {"m", s(p.m())}, {"n", s(p.n())}, {"a", s(t.a())}, {"b", s(t.b())}, {"c", s(t.c())}});
  }
  return out;
}

Output cmd_recover(const Args& args) {
  Output out("recover");
  out.inputs = Json{{"a", args.a}, {"b", args.b}, {"c", args.c}};
  const auto rec = recover_params(parse_bigint(args.a), parse_bigint(args.b), parse_bigint(args.c));
  const Triple t = triple_from_params(rec.params);
  out.records.push_back(Json{{"d", s(rec.params.d())},
                             {"m", s(rec.params.m())},
                             {"n", s(rec.params.n())},
                             {"legs_swapped", rec.legs_swapped},
                             {"primitive", rec.params.d() == 1},
                             {"a", s(t.a())},
                             {"b", s(t.b())},
                             {"c", s(t.c())}});
  return out;
}

Output cmd_decompose(const Args& args) {
  Output out("decompose");
  const TripleParams p = params_from(args, out.inputs);
  const Triple tri = triple_from_params(p);
  Decomposition dec;
  if (!args.t.empty()) {
    out.inputs["t"] = args.t;
    dec = decompose_at_fraction(tri, Rational::parse(args.t));
  } else {
    out.inputs["h1"] = args.h1;
    dec = decompose_at_h1(tri, Rational::parse(args.h1));
  }
  const PositionClass cls = classify_position(p, dec.t);
  const auto* integral = std::get_if<IntegralPosition>(&cls);
  out.records.push_back(Json{{"a", s(tri.a())},
                             {"b", s(tri.b())},
                             {"c", s(tri.c())},
                             {"t", s(dec.t)},
                             {"x", s(dec.x)},
                             {"y", s(dec.y)},
                             {"a_minus_y", s(dec.a_minus_y)},
                             {"b_minus_x", s(dec.b_minus_x)},
                             {"h1", s(dec.h1)},
                             {"h2", s(dec.h2)},
                             {"classification", integral ? "integral" : "rational-non-integral"},
                             {"delta", integral ? Json(s(integral->delta)) : Json(nullptr)}});
  return out;
}

Output cmd_positions(const Args& args) {
  Output out("positions");
  const TripleParams p = params_from(args, out.inputs);
  out.tabular = true;
  out.columns = {"delta", "a_minus_y", "x", "h1", "y", "b_minus_x", "h2"};
  for (const auto& pos : integral_positions(p)) {
    out.records.push_back(Json{{"delta", s(pos.delta)},
                               {"a_minus_y", s(pos.sub_bdp.a())},
                               {"x", s(pos.sub_bdp.b())},
                               {"h1", s(pos.sub_bdp.c())},
                               {"y", s(pos.sub_pea.a())},
                               {"b_minus_x", s(pos.sub_pea.b())},
                               {"h2", s(pos.sub_pea.c())}});
  }
  return out;
}

Output cmd_special(const Args& args) {
  Output out("special");
  out.inputs["point"] = args.point;
  const TripleParams p = params_from(args, out.inputs);
  static const std::map<std::string, PointKind> kinds = {
      {"midpoint", PointKind::Midpoint}, {"bisector", PointKind::BisectorFoot}, {"altitude", PointKind::AltitudeFoot}};
  const SpecialPointReport report = analyze_special_point(kinds.at(args.point), p);
  out.records.push_back(Json{{"point", std::string(to_string(report.kind))},
                             {"t", s(report.t)},
                             {"all_pythagorean", report.all_pythagorean},
                             {"inner_pythagorean", report.inner_pythagorean},
                             {"K", report.witness ? Json(s(*report.witness)) : Json(nullptr)},
                             {"lengths", lengths_json(report.lengths)},
                             {"notes", report.notes}});
  return out;
}

Json config_json(const SixConfig& cfg) {
  return Json{{"delta", s(cfg.delta)},
              {"y", s(cfg.y)},
              {"x", s(cfg.x)},
              {"inner_hypotenuse", s(cfg.inner_hypotenuse)},
              {"D", s(cfg.inner.D)},
              {"M", s(cfg.inner.M)},
              {"N", s(cfg.inner.N)},
              {"orientation", std::string(to_string(cfg.inner.orientation))},
              {"h1", s(cfg.h1)}};
}

Output cmd_six(const Args& args) {
  Output out("six");
  const TripleParams p = params_from(args, out.inputs);
  const SixSearchResult result = search_six(p);
  Json configs = Json::array();
  for (const auto& cfg : result.configs) configs.push_back(config_json(cfg));
  Json rejected = Json::array();
  Json sums = Json::array();
  for (const auto& r : result.rejected) {
    rejected.push_back(Json{{"delta", s(r.delta)}, {"y", s(r.y)}, {"x", s(r.x)}, {"sum", s(r.sum_of_squares)}});
    sums.push_back(s(r.sum_of_squares));
  }
  out.records.push_back(Json{{"configs", configs}, {"rejected_sums", sums}, {"rejected", rejected}});
  return out;
}

Output cmd_family1(const Args& args) {
  Output out("family1");
  out.inputs = Json{{"m", args.m}, {"n", args.n}, {"M", args.inner_m}, {"N", args.inner_n}, {"K", args.k}};
  const Family1Result fam = family1_generate(parse_bigint(args.m), parse_bigint(args.n), parse_bigint(args.inner_m),
                                             parse_bigint(args.inner_n), parse_bigint(args.k));
  Json record = Json::object();
  record["d"] = s(fam.instance.d);
  const Triple tri = triple_from_params(fam.outer);
  record["a"] = s(tri.a());
  record["b"] = s(tri.b());
  record["c"] = s(tri.c());
  const Json config = config_json(fam.config);
  for (const auto& [key, value] : config.items()) record[key] = value;
  out.records.push_back(std::move(record));
  return out;
}

int cmd_verify(const Args& args, Output& out) {
  out.command = "verify";
  if (args.list_claims) {
    out.tabular = true;
    out.columns = {"claim_id", "default_bound", "bound_meaning", "statement"};
    for (const auto& info : oracle::registered_claims()) {
      out.records.push_back(Json{{"claim_id", std::string(info.id)},
                                 {"default_bound", std::to_string(info.default_bound)},
                                 {"bound_meaning", std::string(info.bound_meaning)},
                                 {"statement", std::string(info.statement)}});
    }
    return kOk;
  }
  const auto& infos = oracle::registered_claims();
  const auto it = std::find_if(infos.begin(), infos.end(), [&](const auto& i) { return i.id == args.claim; });
  const std::uint64_t bound = args.bound.empty() ? it->default_bound : std::stoull(args.bound);
  out.inputs = Json{{"claim_id", args.claim}, {"bound", std::to_string(bound)}};
  const oracle::OracleReport report = oracle::verify_claim(args.claim, bound);
  out.records.push_back(Json{{"claim_id", report.claim_id},
                             {"statement", std::string(it->statement)},
                             {"bound", std::to_string(report.bound)},
                             {"scanned", std::to_string(report.scanned)},
                             {"confirmed", report.confirmed()},
                             {"mismatches", report.mismatches}});
  return report.confirmed() ? kOk : kDomainError;
}

// ---- rendering ----------------------------------------------------------

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const Json& value, const std::string& key, std::vector<std::pair<std::string, std::string>>& cells,
             const std::string& list_separator) {
  if (value.is_object()) {
    for (const auto& [sub, v] : value.items()) flatten(v, key.empty() ? sub : key + "." + sub, cells, list_separator);
    return;
  }
  if (value.is_array()) {
    const bool scalars = std::all_of(value.begin(), value.end(), [](const Json& e) { return e.is_primitive(); });
    std::string joined;
    if (scalars) {
      for (std::size_t i = 0; i < value.size(); ++i) joined += (i ? list_separator : "") + scalar_text(value[i]);
    } else {
      joined = value.dump();
    }
    cells.emplace_back(key, joined);
    return;
  }
  cells.emplace_back(key, scalar_text(value));
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

std::string strip_unit_denominator(const std::string& text) {
  static const std::regex unit(R"(^(-?\d+)/1$)");
  std::smatch match;
  if (std::regex_match(text, match, unit)) return match[1];
  return text;
}

void render_json(const Output& out, std::ostream& os) {
  for (const auto& record : out.records) {
    Json line{{"schema_version", kSchemaVersion}, {"command", out.command}, {"inputs", out.inputs}, {"results", record}};
    os << line.dump() << "\n";
  }
}

void render_csv(const Output& out, std::ostream& os) {
  std::vector<std::vector<std::pair<std::string, std::string>>> rows;
  for (const auto& record : out.records) {
    rows.emplace_back();
    flatten(record, "", rows.back(), ";");
  }
  std::vector<std::string> header = out.columns;
  if (header.empty() && !rows.empty()) {
    for (const auto& [key, _] : rows.front()) header.push_back(key);
  }
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << csv_cell(header[i]);
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      const auto it = std::find_if(row.begin(), row.end(), [&](const auto& c) { return c.first == header[i]; });
      os << (i ? "," : "") << (it == row.end() ? "" : csv_cell(it->second));
    }
    os << "\n";
  }
}

void render_table(const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows,
                  const std::string& indent, std::ostream& os) {
  std::vector<std::size_t> widths(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) {
    widths[i] = columns[i].size();
    for (const auto& row : rows) widths[i] = std::max(widths[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    os << indent;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i ? "  " : "") << std::setw(static_cast<int>(widths[i])) << std::right << cells[i];
    }
    os << "\n";
  };
  line(columns);
  for (const auto& row : rows) line(row);
}

void render_object_array(const Json& array, const std::string& indent, std::ostream& os) {
  std::vector<std::string> columns;
  for (const auto& [key, _] : array.front().items()) columns.push_back(key);
  std::vector<std::vector<std::string>> rows;
  for (const auto& element : array) {
    rows.emplace_back();
    for (const auto& col : columns) rows.back().push_back(strip_unit_denominator(scalar_text(element.value(col, Json()))));
  }
  render_table(columns, rows, indent, os);
}

void render_text(const Output& out, std::ostream& os) {
  if (out.tabular) {
    if (out.records.empty()) {
      os << "(no results)\n";
      return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& record : out.records) {
      rows.emplace_back();
      for (const auto& col : out.columns) rows.back().push_back(strip_unit_denominator(scalar_text(record.at(col))));
    }
    render_table(out.columns, rows, "", os);
    return;
  }
  for (const auto& record : out.records) {
    // Each key maps to one or more display lines.
    std::vector<std::pair<std::string, std::vector<std::string>>> cells;
    std::vector<std::pair<std::string, const Json*>> tables;
    for (const auto& [key, value] : record.items()) {
      if (value.is_array() && !value.empty() && value.front().is_object()) {
        tables.emplace_back(key, &value);
      } else if (value.is_array()) {
        std::vector<std::string> lines;
        for (const auto& element : value) lines.push_back(strip_unit_denominator(scalar_text(element)));
        if (lines.empty()) lines.emplace_back("(none)");
        cells.emplace_back(key, std::move(lines));
      } else {
        std::vector<std::pair<std::string, std::string>> flat;
        flatten(value, key, flat, ", ");
        for (auto& [k, text] : flat) {
          cells.emplace_back(k, std::vector<std::string>{value.is_null() ? "-" : strip_unit_denominator(text)});
        }
      }
    }
    std::size_t width = 0;
    for (const auto& [key, _] : cells) width = std::max(width, key.size());
    for (const auto& [key, lines] : cells) {
      for (std::size_t i = 0; i < lines.size(); ++i) {
        os << std::left << std::setw(static_cast<int>(width)) << (i == 0 ? key : "") << "  " << lines[i] << "\n";
      }
    }
    for (const auto& [key, array] : tables) {
      os << key << ":\n";
      render_object_array(*array, "  ", os);
    }
  }
}

// ---- argument validation ------------------------------------------------

const CLI::Validator kIntegerLiteral(
    [](std::string& value) -> std::string {
      try {
        parse_bigint(value);
      } catch (const DomainError&) {
        return "expected a decimal integer, got '" + value + "'";
      }
      return {};
    },
    "INTEGER");

const CLI::Validator kRationalLiteral(
    [](std::string& value) -> std::string {
      try {
        Rational::parse(value);
      } catch (const DomainError&) {
        return "expected a rational p/q, got '" + value + "'";
      }
      return {};
    },
    "P/Q");

void add_params(CLI::App* sub, Args& args) {
  sub->add_option("--d", args.d, "scale factor d")->required()->check(kIntegerLiteral);
  sub->add_option("--m", args.m, "generator m")->required()->check(kIntegerLiteral);
  sub->add_option("--n", args.n, "generator n")->required()->check(kIntegerLiteral);
}

}  // namespace

int run(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_format) {
  static const std::vector<std::string> formats = {"json", "csv", "text"};
  Args args;
  CLI::App app{"hypotria: Pythagorean triangles decomposed at points of their hypotenuse"};
  app.name("hypotria");
  app.require_subcommand(1);
  app.fallthrough();
  auto* format_opt =
      app.add_option("--format", args.format, "output format (default text, or $HYPOTRIA_FORMAT)")
          ->check(CLI::IsMember(formats));

  auto* generate = app.add_subcommand("generate", "list every (d, m, n) with c <= max-c");
  generate->add_option("--max-c", args.max_c, "largest hypotenuse")->required()->check(kIntegerLiteral);

  auto* recover = app.add_subcommand("recover", "recover (d, m, n) from sidelengths");
  recover->add_option("--a", args.a)->required()->check(kIntegerLiteral);
  recover->add_option("--b", args.b)->required()->check(kIntegerLiteral);
  recover->add_option("--c", args.c)->required()->check(kIntegerLiteral);

  auto* decompose = app.add_subcommand("decompose", "lengths at a point of the hypotenuse");
  add_params(decompose, args);
  auto* t_opt = decompose->add_option("--t", args.t, "|BP| / |BA|")->check(kRationalLiteral);
  auto* h1_opt = decompose->add_option("--h1", args.h1, "|BP|")->check(kRationalLiteral);
  t_opt->excludes(h1_opt);

  auto* positions = app.add_subcommand("positions", "the d-1 integral positions");
  add_params(positions, args);

  auto* special = app.add_subcommand("special", "analysis at the midpoint, bisector foot or altitude foot");
  special->add_option("point", args.point)->required()->check(CLI::IsMember({"midpoint", "bisector", "altitude"}));
  add_params(special, args);

  auto* six = app.add_subcommand("six", "positions where all six triangles are Pythagorean");
  add_params(six, args);

  auto* family1 = app.add_subcommand("family1", "generate a Family 1 six-triangle configuration");
  family1->add_option("--m", args.m, "outer generator m")->required()->check(kIntegerLiteral);
  family1->add_option("--n", args.n, "outer generator n")->required()->check(kIntegerLiteral);
  family1->add_option("--M,--inner-m", args.inner_m, "inner generator M")->required()->check(kIntegerLiteral);
  family1->add_option("--N,--inner-n", args.inner_n, "inner generator N")->required()->check(kIntegerLiteral);
  family1->add_option("--K", args.k, "multiplier K")->required()->check(kIntegerLiteral);

  std::vector<std::string> claim_ids;
  for (const auto& info : oracle::registered_claims()) claim_ids.emplace_back(info.id);
  auto* verify = app.add_subcommand("verify", "exhaustively check a registered claim");
  auto* claim_opt = verify->add_option("claim-id", args.claim)->check(CLI::IsMember(claim_ids));
  verify->add_option("--bound", args.bound, "sweep bound (claim specific)")->check(CLI::PositiveNumber);
  auto* list_opt = verify->add_flag("--list", args.list_claims, "list registered claims");
  claim_opt->excludes(list_opt);

  std::vector<std::string> reversed(args_in.rbegin(), args_in.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  if (decompose->parsed() && t_opt->count() + h1_opt->count() != 1) {
    err << "error: decompose needs exactly one of --t or --h1\n";
    return kUsageError;
  }
  if (verify->parsed() && claim_opt->count() + list_opt->count() != 1) {
    err << "error: verify needs a claim id or --list\n";
    return kUsageError;
  }

  std::string format = "text";
  if (format_opt->count() > 0) {
    format = args.format;
  } else if (env_format && !env_format->empty()) {
    if (std::find(formats.begin(), formats.end(), *env_format) == formats.end()) {
      err << "error: HYPOTRIA_FORMAT must be one of json, csv, text (got '" << *env_format << "')\n";
      return kUsageError;
    }
    format = *env_format;
  }

  Output result;
  int status = kOk;
  try {
    if (generate->parsed()) result = cmd_generate(args);
    else if (recover->parsed()) result = cmd_recover(args);
    else if (decompose->parsed()) result = cmd_decompose(args);
    else if (positions->parsed()) result = cmd_positions(args);
    else if (special->parsed()) result = cmd_special(args);
    else if (six->parsed()) result = cmd_six(args);
    else if (family1->parsed()) result = cmd_family1(args);
    else if (verify->parsed()) status = cmd_verify(args, result);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }

  if (format == "json") render_json(result, out);
  else if (format == "csv") render_csv(result, out);
  else render_text(result, out);
  return status;
}

}  // namespace hypotria::cli
