#include "cli/cli.hpp"
#include "cli/output.hpp"

#include <polylie/coalgebra/coproduct.hpp>
#include <polylie/coalgebra/verify.hpp>
#include <polylie/error.hpp>
#include <polylie/fields/finite_field.hpp>
#include <polylie/homology/bloch.hpp>
#include <polylie/inversion/verify.hpp>
#include <polylie/numerics/realize.hpp>
#include <polylie/relations/reduce.hpp>
#include <polylie/relations/schema.hpp>
#include <polylie/relations/vanishing.hpp>
#include <polylie/shuffle/shuffle.hpp>
#include <polylie/symbolic/parse.hpp>

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

namespace polylie::cli {

namespace {

using symbolic::LinComb;

constexpr int kMaxDepth = 4;
constexpr int kMaxWeight = 8;
constexpr int kMaxQ = 256;

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::optional<int> weight;
  std::optional<int> depth;
  std::string field = "Q";
  std::uint64_t seed = 1;
  long samples = 0;
  double tol = 1e-8;
  std::string format = "tsv";
  std::string mode = "numeric";
  std::string at;
  std::string q = "5,7,9,11,13";
  bool prime = false;
  bool mutate = false;
  bool mod_products = false;
  bool timing = false;
  std::string target;
};

Format format_of(const Options& o) { return o.format == "json" ? Format::Json : Format::Tsv; }

int exit_code(const std::vector<Report>& reports) { return overall_verdict(reports) == "FAIL" ? 1 : 0; }

void check_range(const char* flag, long value, long lo, long hi) {
  if (value < lo || value > hi)
    throw UsageError(std::string(flag) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

void check_bounds(const Options& o, int default_depth, int default_weight, int& depth, int& weight) {
  depth = o.depth.value_or(default_depth);
  weight = o.weight.value_or(default_weight);
  check_range("--depth", depth, 1, kMaxDepth);
  check_range("--weight", weight, 1, kMaxWeight);
}

void check_numeric(const Options& o) {
  if (o.samples) check_range("--samples", o.samples, 1, 1000000);
  if (!(o.tol > 0)) throw UsageError("--tol must be positive");
}

/// Schema names have no brackets; anything else is an expression.
LinComb element_of(const std::string& target, bool mutate) {
  if (target.find('[') != std::string::npos) {
    if (mutate) throw UsageError("--mutate needs a schema name");
    return parse_expression(target);
  }
  auto schema = relations::find_schema(target);
  LinComb e = schema.element();
  if (mutate) {
    auto lead = schema.leading();
    e.add(lead, -2 * e.coefficient(lead));
  }
  return e;
}

std::vector<int> parse_q_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  static const std::regex range(R"((\d+)\.\.(\d+))");
  static const std::regex single(R"(\d+)");
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (std::regex_match(item, m, range)) {
      int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
      check_range("--q", hi, 4, kMaxQ);
      for (int q = std::max(lo, 4); q <= hi; ++q)
        if (fields::prime_power(q)) out.push_back(q);
    } else if (std::regex_match(item, single)) {
      int q = std::stoi(item);
      check_range("--q", q, 4, kMaxQ);
      if (!fields::prime_power(q)) throw UsageError("--q: " + item + " is not a prime power");
      out.push_back(q);
    } else {
      throw UsageError("--q: cannot read '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("--q names no prime power > 3");
  return out;
}

std::map<std::string, fields::FieldElement> parse_point(const std::string& text, const fields::FieldSpec& field) {
  std::map<std::string, fields::FieldElement> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--at expects name=value pairs, got '" + item + "'");
    out[item.substr(0, eq)] = field.parse_element(item.substr(eq + 1));
  }
  return out;
}

int cmd_cobracket(const Options& o, std::ostream& out) {
  LinComb e = parse_expression(o.target);
  auto w = coalgebra::delta(e, o.prime ? coalgebra::Variant::Prime : coalgebra::Variant::Standard);
  print_value(o.prime ? "cobracket-prime" : "cobracket", symbolic::to_string(e), symbolic::to_string(w), format_of(o), out);
  return 0;
}

int cmd_coproduct(const Options& o, std::ostream& out) {
  LinComb e = parse_expression(o.target);
  std::string result = o.mod_products ? symbolic::to_string(coalgebra::coproduct_mod_products(e))
                                      : symbolic::to_string(coalgebra::coproduct(e));
  print_value("coproduct", symbolic::to_string(e), result, format_of(o), out);
  return 0;
}

int cmd_verify(const std::string& suite, const Options& o, std::ostream& out) {
  std::vector<Report> reports;
  int depth = 0, weight = 0;
  if (suite == "delta2" || suite == "deltaprime2") {
    check_bounds(o, 3, 6, depth, weight);
    auto variant = suite == "delta2" ? coalgebra::Variant::Standard : coalgebra::Variant::Prime;
    reports.push_back(coalgebra::verify_delta_squared(depth, weight, variant));
  } else if (suite == "coassoc") {
    check_bounds(o, 2, 4, depth, weight);
    reports.push_back(coalgebra::verify_coassociativity(depth, weight));
  } else if (suite == "cor13") {
    check_bounds(o, 3, 5, depth, weight);
    reports.push_back(coalgebra::verify_mod_products(depth, weight));
  } else if (suite == "inversion") {
    check_bounds(o, 3, 5, depth, weight);
    for (int d = 1; d <= depth; ++d) reports.push_back(inversion::verify_inversion_claim(d, weight));
    for (int d = 1; d <= depth; ++d) reports.push_back(inversion::verify_inversion_families(d, weight));
    reports.push_back(inversion::verify_inversion_depth2(weight));
    reports.push_back(inversion::verify_infinity_closed_forms(weight));
  } else if (suite == "shuffle") {
    check_bounds(o, 2, 6, depth, weight);
    reports.push_back(shuffle::verify_shuffle_delta(11, weight));
    if (depth >= 2) reports.push_back(shuffle::verify_shuffle_delta(21, weight));
  } else {
    throw UsageError("unknown suite: " + suite);
  }
  print_reports("verify " + suite, reports, format_of(o), out);
  return exit_code(reports);
}

int cmd_relations_list(const Options& o, std::ostream& out) {
  if (format_of(o) == Format::Json) {
    Json j = Json::array();
    for (const auto& s : relations::catalog()) {
      Json e;
      e["name"] = s.name;
      e["weight"] = s.weight;
      e["parameters"] = s.parameters;
      e["template"] = s.template_text;
      e["description"] = s.description;
      j.push_back(e);
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "name\tweight\tparameters\ttemplate\n";
  for (const auto& s : relations::catalog()) {
    std::string params;
    for (const auto& p : s.parameters) params += (params.empty() ? "" : ",") + p;
    out << s.name << "\t" << s.weight << "\t" << params << "\t" << s.template_text << "\n";
  }
  return 0;
}

int cmd_relations_check(const Options& o, std::ostream& out) {
  check_numeric(o);
  auto mode = relations::parse_vanishing_mode(o.mode);
  relations::VanishingOptions opts;
  opts.seed = o.seed;
  opts.tolerance = o.tol;
  opts.samples = o.samples ? o.samples : (mode == relations::VanishingMode::Numeric ? 100 : 50);
  auto field = fields::FieldSpec::parse(o.field);
  Report report;
  if (!o.at.empty()) {
    auto schema = relations::find_schema(o.target);
    auto inst = relations::instantiate(schema, parse_point(o.at, field), field);
    if (field.kind() == fields::FieldSpec::Kind::Finite) {
      report.name = "verify_vanishing";
      report.label = "TRIVIAL";
      report.detail = "exterior square of the cyclic group F_q^* vanishes";
      report.note("instance", inst.to_string());
    } else {
      report = relations::verify_vanishing(inst.lincomb(), mode, opts);
      report.note("instance", inst.to_string());
    }
  } else {
    if (field.kind() != fields::FieldSpec::Kind::Rationals) throw UsageError("--field needs --at");
    report = relations::verify_vanishing(element_of(o.target, o.mutate), mode, opts);
  }
  std::vector<Report> reports{report};
  print_reports("relations check", reports, format_of(o), out);
  return exit_code(reports);
}

int cmd_relations_reduce(const Options& o, std::ostream& out) {
  LinComb e = element_of(o.target, false);
  print_value("relations reduce", symbolic::to_string(e), symbolic::to_string(relations::reduce_to_depth1(e)),
              format_of(o), out);
  return 0;
}

int cmd_bloch(const Options& o, std::ostream& out) {
  auto qs = parse_q_list(o.q);
  std::vector<homology::H1Row> rows;
  bool ok = true;
  for (int q : qs) {
    rows.push_back(homology::h1_order(q));
    ok = ok && rows.back().match_up_to_2_3;
  }
  if (format_of(o) == Format::Json) {
    Json j;
    j["command"] = "bloch";
    j["verdict"] = ok ? "PASS" : "FAIL";
    j["rows"] = Json::array();
    for (const auto& r : rows) {
      Json e;
      e["q"] = r.q;
      e["generators"] = r.generators;
      e["relations"] = r.relations;
      Json factors = Json::array();
      for (const auto& d : r.snf.invariant_factors)
        if (d != 1) factors.push_back(d.get_str());
      e["invariant_factors"] = factors;
      e["h1_order"] = r.snf.order_string();
      e["q_plus_1"] = r.q + 1;
      e["ratio"] = r.ratio ? Json(fields::to_string(*r.ratio)) : Json(nullptr);
      e["match_up_to_2_3"] = r.match_up_to_2_3;
      e["exact_match"] = r.exact_match;
      if (o.timing) e["seconds"] = r.seconds;
      j["rows"].push_back(e);
    }
    out << j.dump(2) << "\n";
  } else {
    out << homology::tsv_header() << (o.timing ? "\tseconds" : "") << "\n";
    for (const auto& r : rows) {
      out << homology::to_tsv(r);
      if (o.timing) out << "\t" << r.seconds;
      out << "\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_numeric(const std::string& what, const Options& o, std::ostream& out) {
  check_numeric(o);
  numerics::NumericOptions opts;
  opts.seed = o.seed;
  opts.tolerance = o.tol;
  if (o.samples) opts.samples = o.samples;
  LinComb e = element_of(o.target, o.mutate);
  Report report = what == "check" ? numerics::wedge_numeric_check(coalgebra::delta(e), opts)
                                  : numerics::realize_constancy(e, opts);
  std::vector<Report> reports{report};
  print_reports("numeric " + what, reports, format_of(o), out);
  return exit_code(reports);
}

int cmd_gr_translate(const Options& o, std::ostream& out) {
  auto s = relations::parse_gr_symbol(o.target);
  print_value("gr-translate", s.to_string(), symbolic::to_string(relations::gr_translate(s)), format_of(o), out);
  return 0;
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
}

void add_bounds(CLI::App* app, Options& o) {
  app->add_option("--weight", o.weight, "Weight bound");
  app->add_option("--depth", o.depth, "Depth bound");
}

void add_numeric(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed, "Random seed");
  app->add_option("--samples", o.samples, "Number of sample points");
  app->add_option("--tol", o.tol, "Numeric tolerance");
}

}  // namespace

symbolic::LinComb parse_expression(std::string_view text) {
  LinComb e = symbolic::parse_lincomb(text);
  for (const auto& [s, c] : e) symbolic::check_symbol(s);
  return e;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Symbolic multiple polylogarithms: cobracket, coproduct and verification suites", "polylie"};
  app.require_subcommand(1);

  auto* cobracket = app.add_subcommand("cobracket", "Cobracket of an expression");
  cobracket->add_option("expression", o.target)->required();
  cobracket->add_flag("--prime", o.prime, "Use the primed cobracket");

  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of an expression");
  coproduct->add_option("expression", o.target)->required();
  coproduct->add_flag("--mod-products", o.mod_products, "Keep generator (x) generator terms, as wedges");

  auto* verify = app.add_subcommand("verify", "Run an exact verification suite");
  std::string suite;
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember({"delta2", "deltaprime2", "inversion", "shuffle", "coassoc", "cor13"}));
  add_bounds(verify, o);

  auto* relations = app.add_subcommand("relations", "Relation schemata");
  relations->require_subcommand(1);
  auto* rel_list = relations->add_subcommand("list", "List the schemata");
  auto* rel_check = relations->add_subcommand("check", "Check that a schema or expression has zero cobracket");
  rel_check->add_option("target", o.target, "Schema name or expression")->required();
  rel_check->add_option("--mode", o.mode, "Vanishing mode")
      ->check(CLI::IsMember({"exact-wedge", "specialize", "numeric"}));
  rel_check->add_option("--at", o.at, "Instantiate the schema at name=value pairs");
  rel_check->add_option("--field", o.field, "Field for --at: Q, Fq:7, Fq:9:poly=t^2+1, Q(t)");
  rel_check->add_flag("--mutate", o.mutate, "Flip the sign of the schema's leading term");
  add_numeric(rel_check, o);
  auto* rel_reduce = relations->add_subcommand("reduce", "Rewrite into depth one");
  rel_reduce->add_option("target", o.target, "Schema name or expression")->required();

  auto* bloch = app.add_subcommand("bloch", "Order of the weight-two group over F_q");
  bloch->add_option("--q", o.q, "Comma-separated q values or ranges a..b");
  bloch->add_flag("--timing", o.timing, "Include timings");

  auto* numeric = app.add_subcommand("numeric", "Numeric evidence through single-valued polylogarithms");
  numeric->require_subcommand(1);
  auto* num_check = numeric->add_subcommand("check", "Cobracket vanishes at random points");
  auto* num_const = numeric->add_subcommand("constancy", "Realization is constant at random points");
  for (auto* sub : {num_check, num_const}) {
    sub->add_option("target", o.target, "Schema name or expression")->required();
    sub->add_flag("--mutate", o.mutate, "Flip the sign of the schema's leading term");
    add_numeric(sub, o);
  }

  auto* gr = app.add_subcommand("gr-translate", "Translate {x,y;n,1} symbols");
  gr->add_option("symbol", o.target)->required();

  for (auto* sub : {cobracket, coproduct, verify, rel_list, rel_check, rel_reduce, bloch, num_check, num_const, gr})
    add_format(sub, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (cobracket->parsed()) return cmd_cobracket(o, out);
    if (coproduct->parsed()) return cmd_coproduct(o, out);
    if (verify->parsed()) return cmd_verify(suite, o, out);
    if (rel_list->parsed()) return cmd_relations_list(o, out);
    if (rel_check->parsed()) return cmd_relations_check(o, out);
    if (rel_reduce->parsed()) return cmd_relations_reduce(o, out);
    if (bloch->parsed()) return cmd_bloch(o, out);
    if (num_check->parsed()) return cmd_numeric("check", o, out);
    if (num_const->parsed()) return cmd_numeric("constancy", o, out);
    if (gr->parsed()) return cmd_gr_translate(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const AdmissibilityError& e) {
    err << "inadmissible: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace polylie::cli
