// Command-line front end: tables, Whittaker vectors, verification suites and
// the critical expansion. Exit codes: 0 pass, 1 identity failure,
// 2 singular specialization, 3 configuration error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "whittaker/affine_whittaker.hpp"
#include "whittaker/errors.hpp"
#include "whittaker/finite_whittaker.hpp"
#include "whittaker/path_model.hpp"
#include "whittaker/q_whittaker.hpp"
#include "whittaker/serialize.hpp"
#include "whittaker/verify.hpp"

using namespace whittaker;
using json = nlohmann::ordered_json;

namespace {

enum class Output { Json, Csv, Pretty };

struct JobConfig {
  std::string type_text;
  bool affine_flag = false;
  int degree = 3;
  int j_max = 0;
  std::string lambda_text;
  std::string suite = "all";
  std::string output = "json";
  std::string out_path;
  std::string gauge = "zero-diagonal";
  unsigned seed = 1;
  bool series = false;

  TypeSpec spec;
  std::vector<Rational> lambda;
  Output format = Output::Json;
};

void resolve(JobConfig& cfg) {
  std::string t = cfg.type_text;
  if (cfg.affine_flag && (t.empty() || t.back() != '~')) t += '~';
  cfg.spec = TypeSpec::parse(t);
  if (cfg.degree < 0) throw ConfigError("--degree must be non-negative");
  if (cfg.j_max < 0) throw ConfigError("--jmax must be non-negative");
  cfg.lambda.clear();
  if (!cfg.lambda_text.empty()) {
    std::stringstream ss(cfg.lambda_text);
    std::string item;
    while (std::getline(ss, item, ',')) cfg.lambda.push_back(parse_rational(item));
    if (static_cast<int>(cfg.lambda.size()) != cfg.spec.type.rank)
      throw ConfigError("--lambda needs " + std::to_string(cfg.spec.type.rank) + " entries");
  }
  if (cfg.spec.quantum && cfg.lambda.empty()) throw ConfigError("quantum mode requires --lambda");
  if (cfg.output == "json")
    cfg.format = Output::Json;
  else if (cfg.output == "csv")
    cfg.format = Output::Csv;
  else if (cfg.output == "pretty")
    cfg.format = Output::Pretty;
  else
    throw ConfigError("--output must be json, csv or pretty");
}

WeightParam weight_param(const JobConfig& cfg, int rank) {
  return cfg.lambda.empty() ? WeightParam::symbolic(rank) : WeightParam::special(cfg.lambda);
}

void emit(const JobConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + cfg.out_path + "'");
  f << text;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// One table row: coordinates plus numerator and denominator strings.
struct Row {
  std::string key;
  std::string expr;
  std::string num;
  std::string den;
  json structural;
};

std::string render_rows(const JobConfig& cfg, const std::vector<Row>& rows, const std::string& label) {
  std::ostringstream os;
  switch (cfg.format) {
    case Output::Json: {
      json j = json::object();
      for (const auto& r : rows) j[r.key] = r.structural.is_null() ? json(r.expr) : r.structural;
      os << j.dump(2) << "\n";
      break;
    }
    case Output::Csv:
      os << "beta_coords,value_num,value_den\n";
      for (const auto& r : rows) os << csv_quote(r.key) << "," << csv_quote(r.num) << "," << csv_quote(r.den) << "\n";
      break;
    case Output::Pretty:
      for (const auto& r : rows) os << label << r.key << " = " << r.expr << "\n";
      break;
  }
  return os.str();
}

Row classical_row(const std::string& key, const RatFunc& f, const std::vector<MultiPoly>& hints) {
  return {key, to_string(f, hints), to_string(f.num()), to_string(f.den()), json()};
}

Row quantum_row(const std::string& key, const QRatFunc& f) {
  json s = to_json(f);
  s["expr"] = to_string(f);
  return {key, to_string(f), to_string(f.num()), to_string(f.den()), s};
}

int cmd_table(const JobConfig& cfg) {
  std::vector<Row> rows;
  if (cfg.spec.quantum) {
    const QContext ctx = QContext::make(cfg.lambda);
    QPartitionTable table(ctx, std::max(cfg.degree, 1));
    for (const auto& b : lattice_points_upto(ctx.r, cfg.degree)) rows.push_back(quantum_row(format_coords(b), table(b)));
  } else {
    const CartanData cd = build_cartan(cfg.spec.type);
    const bool affine = cfg.spec.type.affine;
    PartitionTable table(cd, weight_param(cfg, cd.rank), affine, std::max(cfg.degree, 1));
    const int size = affine ? cd.rank + 1 : cd.rank;
    const auto pts = lattice_points_upto(size, cfg.degree);
    for (const auto& b : pts) table(b);
    const auto hints = table.weight_factors();
    for (const auto& b : pts) rows.push_back(classical_row(format_coords(b), table(b), hints));
  }
  emit(cfg, render_rows(cfg, rows, "Z"));
  return 0;
}

std::string vector_text(const JobConfig& cfg, const std::vector<std::pair<RootVec, std::pair<std::string, std::string>>>& terms) {
  std::ostringstream os;
  switch (cfg.format) {
    case Output::Json: {
      json j = json::object();
      for (const auto& [b, wc] : terms) j[format_coords(b)].push_back(json::array({wc.first, wc.second}));
      os << j.dump(2) << "\n";
      break;
    }
    case Output::Csv:
      os << "beta_coords,word,coefficient\n";
      for (const auto& [b, wc] : terms)
        os << csv_quote(format_coords(b)) << "," << csv_quote(wc.first) << "," << csv_quote(wc.second) << "\n";
      break;
    case Output::Pretty:
      for (const auto& [b, wc] : terms)
        os << format_coords(b) << "  " << (wc.first.empty() ? "1" : wc.first) << "  " << wc.second << "\n";
      break;
  }
  return os.str();
}

int cmd_series(const JobConfig& cfg) {
  if (cfg.spec.quantum || cfg.spec.type.affine) throw ConfigError("--series is available for finite types");
  const CartanData cd = build_cartan(cfg.spec.type);
  PartitionTable table(cd, weight_param(cfg, cd.rank), false, std::max(cfg.degree, 1));
  const auto terms = whittaker_series(table, cfg.degree);
  const auto hints = table.weight_factors();
  std::ostringstream os;
  auto form = [&](const std::vector<MultiPoly>& e) {
    std::vector<std::string> s;
    for (const auto& x : e) s.push_back(to_string(x));
    return s;
  };
  switch (cfg.format) {
    case Output::Json: {
      json j = json::array();
      for (const auto& t : terms)
        j.push_back({{"beta", format_coords(t.beta)},
                     {"exponent", form(t.exponent)},
                     {"modified_exponent", form(t.modified_exponent)},
                     {"coefficient", to_string(t.coefficient, hints)}});
      os << j.dump(2) << "\n";
      break;
    }
    case Output::Csv:
      os << "beta_coords,value_num,value_den\n";
      for (const auto& t : terms)
        os << csv_quote(format_coords(t.beta)) << "," << csv_quote(to_string(t.coefficient.num())) << ","
           << csv_quote(to_string(t.coefficient.den())) << "\n";
      break;
    case Output::Pretty:
      for (const auto& t : terms) {
        os << format_coords(t.beta) << "  phi:";
        for (const auto& x : form(t.exponent)) os << " [" << x << "]";
        os << "  " << to_string(t.coefficient, hints) << "\n";
      }
      break;
  }
  emit(cfg, os.str());
  return 0;
}

int cmd_vector(const JobConfig& cfg) {
  if (cfg.series) return cmd_series(cfg);
  if (cfg.degree > kDefaultEnumerationCap) throw ConfigError("--degree beyond the path enumeration cap");
  std::vector<std::pair<RootVec, std::pair<std::string, std::string>>> terms;
  if (cfg.spec.quantum) {
    const QContext ctx = QContext::make(cfg.lambda);
    for (const auto& b : lattice_points_upto(ctx.r, cfg.degree))
      for (const auto& p : enumerate_paths(b)) terms.push_back({b, {path_word(p, false), to_string(q_path_weight(ctx, p))}});
  } else {
    const CartanData cd = build_cartan(cfg.spec.type);
    const bool affine = cfg.spec.type.affine;
    const WeightParam w = weight_param(cfg, cd.rank);
    PartitionTable table(cd, w, affine, std::max(cfg.degree, 1));
    const int size = affine ? cd.rank + 1 : cd.rank;
    const auto pts = lattice_points_upto(size, cfg.degree);
    for (const auto& b : pts) table.weight(b);
    const auto hints = table.weight_factors();
    for (const auto& b : pts)
      for (const auto& p : enumerate_paths(b)) terms.push_back({b, {path_word(p, affine), to_string(path_weight(cd, w, p, affine), hints)}});
  }
  emit(cfg, vector_text(cfg, terms));
  return 0;
}

int cmd_verify(const JobConfig& cfg) {
  VerifyOptions opt;
  opt.degree = cfg.degree;
  opt.j_max = cfg.j_max;
  opt.lambda = cfg.lambda;
  opt.seed = cfg.seed;
  const auto results = run_verify(cfg.spec, opt, cfg.suite);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok();
  std::ostringstream os;
  switch (cfg.format) {
    case Output::Json: {
      json j = {{"type", cfg.spec.name()}, {"degree", cfg.degree}, {"status", ok ? "pass" : "fail"}};
      json suites = json::array();
      for (const auto& r : results) {
        json s = {{"name", r.name},
                  {"status", r.ok() ? "pass" : "fail"},
                  {"instances", r.instances},
                  {"passed", r.passed},
                  {"skipped", r.skipped}};
        if (!r.first_failure.empty()) s["first_failure"] = r.first_failure;
        suites.push_back(s);
      }
      j["suites"] = suites;
      os << j.dump(2) << "\n";
      break;
    }
    case Output::Csv:
      os << "suite,status,instances,passed,skipped,first_failure\n";
      for (const auto& r : results)
        os << r.name << "," << (r.ok() ? "pass" : "fail") << "," << r.instances << "," << r.passed << "," << r.skipped
           << "," << csv_quote(r.first_failure) << "\n";
      break;
    case Output::Pretty:
      for (const auto& r : results) {
        os << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << "/" << r.instances << " instances";
        if (r.skipped) os << ", " << r.skipped << " singular skipped";
        os << " (" << r.seconds << " s)";
        if (!r.first_failure.empty()) os << "; first failure at " << r.first_failure;
        os << "\n";
      }
      break;
  }
  emit(cfg, os.str());
  if (!ok) {
    for (const auto& r : results)
      if (!r.ok()) std::cerr << "verify: suite " << r.name << " failed at " << r.first_failure << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_critical(const JobConfig& cfg) {
  if (!cfg.spec.type.affine || cfg.spec.quantum) throw ConfigError("critical needs an affine type such as A1~");
  CriticalGauge gauge;
  if (cfg.gauge == "zero-diagonal")
    gauge = CriticalGauge::ZeroDiagonal;
  else if (cfg.gauge == "consistent")
    gauge = CriticalGauge::Consistent;
  else
    throw ConfigError("--gauge must be zero-diagonal or consistent");
  const CartanData cd = build_cartan(cfg.spec.type);
  const WeightParam w = cfg.lambda.empty() ? WeightParam::symbolic(cd.rank) : WeightParam::special(cfg.lambda, 0);
  const CriticalExpansion e = critical_solve(cd, w, cfg.degree, cfg.j_max, gauge);
  std::vector<Row> a_rows, w_rows;
  for (const auto& [m, v] : e.a) a_rows.push_back(classical_row("a" + std::to_string(m), v, e.factors));
  for (const auto& b : lattice_points_upto(cd.rank + 1, cfg.degree))
    for (int j = 0; j <= cfg.j_max; ++j)
      w_rows.push_back(classical_row("w" + std::to_string(j) + format_coords(b), e.coefficient(j, b), e.factors));
  std::ostringstream os;
  switch (cfg.format) {
    case Output::Json: {
      json a = json::object(), wj = json::object();
      for (const auto& r : a_rows) a[r.key.substr(1)] = r.expr;
      for (const auto& r : w_rows) wj[r.key.substr(1, r.key.find('(') - 1) + ";" + r.key.substr(r.key.find('('))] = r.expr;
      json j = {{"type", cfg.spec.name()}, {"degree", cfg.degree}, {"jmax", cfg.j_max}, {"gauge", cfg.gauge}};
      j["a"] = a;
      j["w"] = wj;
      os << j.dump(2) << "\n";
      break;
    }
    case Output::Csv:
      os << "beta_coords,value_num,value_den\n";
      for (const auto* rows : {&a_rows, &w_rows})
        for (const auto& r : *rows) os << csv_quote(r.key) << "," << csv_quote(r.num) << "," << csv_quote(r.den) << "\n";
      break;
    case Output::Pretty:
      for (const auto* rows : {&a_rows, &w_rows})
        for (const auto& r : *rows) os << r.key << " = " << r.expr << "\n";
      break;
  }
  emit(cfg, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whittaker vectors and functions from lattice path models"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type_text, "Lie type: A1..G2, '~' suffix for affine, 'q' for quantum")->required();
    sub->add_option("--degree", cfg.degree, "maximal |beta|");
    sub->add_option("--lambda", cfg.lambda_text, "specialized highest weight, e.g. 3,4 or 5/3,11/2");
    sub->add_option("--output", cfg.output, "json, csv or pretty");
    sub->add_option("--out", cfg.out_path, "write to this file instead of stdout");
    sub->add_option("--seed", cfg.seed, "seed for randomized suites");
  };

  auto* table = app.add_subcommand("table", "partition functions Z_beta");
  common(table);
  table->add_flag("--affine", cfg.affine_flag, "use the affine extension of --type");
  auto* vector = app.add_subcommand("vector", "Whittaker vector terms (word, coefficient)");
  common(vector);
  vector->add_flag("--affine", cfg.affine_flag, "use the affine extension of --type");
  vector->add_flag("--series", cfg.series, "emit Whittaker series terms instead");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--suite", cfg.suite, "suite name or 'all'");
  verify->add_option("--jmax", cfg.j_max, "critical order for the critical suite");
  verify->add_flag("--affine", cfg.affine_flag, "use the affine extension of --type");
  auto* critical = app.add_subcommand("critical", "critical-level expansion for affine types");
  common(critical);
  critical->add_option("--jmax", cfg.j_max, "highest order j");
  critical->add_option("--gauge", cfg.gauge, "zero-diagonal or consistent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    resolve(cfg);
    if (*table) return cmd_table(cfg);
    if (*vector) return cmd_vector(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_critical(cfg);
  } catch (const SingularWeight& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CriticalSingularity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DivisionByZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
