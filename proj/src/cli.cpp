#include "poincare/cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "poincare/io.hpp"
#include "poincare/legendre.hpp"
#include "poincare/oracle.hpp"
#include "poincare/sharp.hpp"
#include "poincare/verify.hpp"

namespace poincare::cli {

namespace {

using io::Json;

/// Raised for inputs that parse but are invalid; mapped to kArgumentError.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Request {
  std::string format;
  int m = 1;
  std::string x = "0";
  int samples = 101;
  int grid = 20;
  int side = 1;
  int nodes = 513;
  bool exact = false;
  int max_m = 8;
  int max_degree = 12;
  std::string perturb;
};

std::string resolve_format(const Request& req, const std::string& fallback) {
  return req.format.empty() ? fallback : req.format;
}

Rational parse_x(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--x: ") + e.what());
  }
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_constant(const Request& req, std::ostream& out) {
  const SharpSolution sol = solve_interior(req.m, parse_x(req.x));
  if (resolve_format(req, "json") == "json") {
    emit_json(out, io::to_json(sol));
  } else {
    out << "m,x,a,alpha,beta,c,Bsq,B\n"
        << sol.m << "," << sol.x << "," << sol.a << "," << sol.alpha << "," << sol.beta << "," << sol.c << ","
        << sol.Bsq << "," << io::format_double(sol.B()) << "\n";
  }
  return kSuccess;
}

int cmd_family(const Request& req, std::ostream& out) {
  const SharpFamily fam = solve_family(req.m);
  if (resolve_format(req, "json") == "json") {
    emit_json(out, io::to_json(fam));
  } else {
    out << "power,Bsq,a,alpha,beta\n";
    const int top = std::max({fam.Bsq_poly.degree(), fam.a_poly.degree(), fam.alpha_poly.degree(),
                              fam.beta_poly.degree()});
    for (int i = 0; i <= top; ++i) {
      out << i << "," << fam.Bsq_poly.coefficient(i) << "," << fam.a_poly.coefficient(i) << ","
          << fam.alpha_poly.coefficient(i) << "," << fam.beta_poly.coefficient(i) << "\n";
    }
  }
  return kSuccess;
}

int cmd_extremal(const Request& req, std::ostream& out) {
  if (req.samples < 2) throw UsageError("--samples must be at least 2");
  const SharpSolution sol = solve_interior(req.m, parse_x(req.x));
  const auto y = extremal(sol);

  std::set<Rational> ts;
  for (int i = 0; i < req.samples; ++i) {
    ts.insert(rat(2L * i - (req.samples - 1), req.samples - 1));
  }
  ts.insert(sol.x);

  if (resolve_format(req, "csv") == "json") {
    Json rows = Json::array();
    for (const auto& t : ts) rows.push_back(Json{{"t", t.to_double()}, {"y", y(t).to_double()}});
    emit_json(out, Json{{"m", sol.m}, {"x", sol.x.str()}, {"extremal", io::to_json(y)}, {"samples", rows}});
  } else {
    out << "t,y\n";
    for (const auto& t : ts) out << io::format_double(t.to_double()) << "," << io::format_double(y(t).to_double()) << "\n";
  }
  return kSuccess;
}

int cmd_table(const Request& req, std::ostream& out) {
  if (req.grid < 1) throw UsageError("--grid must be at least 1");
  const auto table = shared_table(req.m + 1);
  struct Row {
    Rational x;
    Rational bsq;
  };
  std::vector<Row> rows;
  for (int j = 0; j <= req.grid; ++j) {
    const Rational x = rat(2L * j - req.grid, req.grid);
    const bool endpoint = x == Rational(1) || x == Rational(-1);
    rows.push_back({x, endpoint ? endpoint_constant(req.m) : solve_interior(req.m, x, *table).Bsq});
  }
  if (resolve_format(req, "csv") == "json") {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back(Json{{"x", r.x.str()}, {"Bsq", r.bsq.str()}, {"B", std::sqrt(r.bsq.to_double())}});
    }
    emit_json(out, Json{{"m", req.m}, {"rows", arr}});
  } else {
    out << "x,Bsq,B\n";
    for (const auto& r : rows) out << r.x << "," << r.bsq << "," << io::format_double(std::sqrt(r.bsq.to_double())) << "\n";
  }
  return kSuccess;
}

int cmd_endpoint(const Request& req, std::ostream& out) {
  const Rational bsq = endpoint_constant(req.m);
  const auto y = endpoint_extremal(req.m, req.side);
  if (resolve_format(req, "json") == "json") {
    Json j;
    j["m"] = req.m;
    j["side"] = req.side;
    j["Bsq"] = bsq.str();
    j["B"] = std::sqrt(bsq.to_double());
    j["extremal"] = io::to_json(y);
    emit_json(out, j);
  } else {
    out << "m,side,Bsq,B\n" << req.m << "," << req.side << "," << bsq << "," << io::format_double(std::sqrt(bsq.to_double())) << "\n";
  }
  return kSuccess;
}

int cmd_oracle(const Request& req, std::ostream& out) {
  const Rational x = parse_x(req.x);
  const auto result = oracle::fem_solve(req.m, x.to_double(), req.nodes);
  std::optional<double> b_exact;
  if (req.exact) b_exact = solve_interior(req.m, x).B();
  if (resolve_format(req, "csv") == "json") {
    emit_json(out, io::to_json(result, b_exact));
  } else {
    out << io::oracle_csv_header() << "\n" << io::oracle_csv_row(result, b_exact) << "\n";
  }
  return kSuccess;
}

void apply_perturbation(LegendreTable& table, const std::string& spec) {
  // K:I:DELTA
  const auto first = spec.find(':');
  const auto second = first == std::string::npos ? std::string::npos : spec.find(':', first + 1);
  if (second == std::string::npos) throw UsageError("--perturb expects K:I:DELTA, got '" + spec + "'");
  int k = 0;
  int i = 0;
  try {
    k = std::stoi(spec.substr(0, first));
    i = std::stoi(spec.substr(first + 1, second - first - 1));
  } catch (const std::exception&) {
    throw UsageError("--perturb expects integer K and I, got '" + spec + "'");
  }
  if (k < 0 || k > table.max_degree || i < 0 || i > k) {
    throw UsageError("--perturb index out of range: '" + spec + "'");
  }
  const Rational delta = parse_x(spec.substr(second + 1));
  auto coeffs = table.P[static_cast<std::size_t>(k)].coefficients();
  coeffs[static_cast<std::size_t>(i)] += delta;
  table.P[static_cast<std::size_t>(k)] = RationalPolynomial(std::move(coeffs));
}

int cmd_verify(const Request& req, std::ostream& out) {
  if (req.max_m < 1) throw UsageError("--max-m must be at least 1");
  LegendreTable table = build_table(std::max(12, req.max_m + 1));
  if (!req.perturb.empty()) apply_perturbation(table, req.perturb);

  Report report;
  try {
    report = run_verification(req.max_m, table);
  } catch (const std::exception& e) {
    // A corrupted table can break the construction itself.
    report.checks.push_back({"verify.construction", false, e.what()});
  }
  std::size_t passed = 0;
  for (const auto& c : report.checks) {
    if (c.passed) {
      ++passed;
      out << "PASS " << c.name << "\n";
    } else {
      out << "FAIL " << c.name << ": " << c.counterexample << "\n";
    }
  }
  for (const auto& note : report.notes) out << "NOTE " << note << "\n";
  out << "verify: " << passed << "/" << report.checks.size() << " checks passed\n";
  return report.passed() ? kSuccess : kVerificationFailure;
}

int cmd_legendre_dump(const Request& req, std::ostream& out) {
  if (req.max_degree < 2) throw UsageError("--max must be at least 2");
  emit_json(out, io::to_json(build_table(req.max_degree)));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Exact sharp constants for Poincare-type inequalities with vanishing moments", "poincare"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", req.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  const auto positive = CLI::PositiveNumber;

  auto* constant = app.add_subcommand("constant", "Sharp constant and extremal at an interior point");
  constant->add_option("--m", req.m, "Number of vanishing moments")->required()->check(positive);
  constant->add_option("--x", req.x, "Point in (-1,1), as p/q or exact decimal")->required();

  auto* family = app.add_subcommand("family", "B_m(x)^2 as a polynomial in x");
  family->add_option("--m", req.m, "Number of vanishing moments")->required()->check(positive);

  auto* extremal_cmd = app.add_subcommand("extremal", "Samples of the extremal function as CSV");
  extremal_cmd->add_option("--m", req.m, "Number of vanishing moments")->required()->check(positive);
  extremal_cmd->add_option("--x", req.x, "Point in (-1,1), as p/q or exact decimal")->required();
  extremal_cmd->add_option("--samples", req.samples, "Uniform samples on [-1,1] (kink always added)");

  auto* table = app.add_subcommand("table", "Exact B_m(x)^2 on a uniform grid of [-1,1]");
  table->add_option("--m", req.m, "Number of vanishing moments")->required()->check(positive);
  table->add_option("--grid", req.grid, "Number of intervals K (K+1 points)");

  auto* endpoint = app.add_subcommand("endpoint", "Sharp constant and extremal at x = +-1");
  endpoint->add_option("--m", req.m, "Number of vanishing moments")->required()->check(positive);
  endpoint->add_option("--side", req.side, "+1 or -1")->check(CLI::IsMember({1, -1}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Finite-element estimate of B_m(x)");
  oracle_cmd->add_option("--m", req.m, "Number of vanishing moments")->required()->check(positive);
  oracle_cmd->add_option("--x", req.x, "Point in (-1,1)")->required();
  oracle_cmd->add_option("--nodes", req.nodes, "Uniform grid nodes");
  oracle_cmd->add_flag("--exact", req.exact, "Compare against the exact constant");

  auto* verify = app.add_subcommand("verify", "Run the exact invariant suite");
  verify->add_option("--max-m", req.max_m, "Largest m to check")->check(positive);
  verify->add_option("--perturb", req.perturb, "K:I:DELTA, add DELTA to coefficient I of P_K first");

  auto* legendre = app.add_subcommand("legendre", "Legendre table utilities");
  legendre->require_subcommand(1);
  auto* dump = legendre->add_subcommand("dump", "Emit the Legendre table as JSON");
  dump->add_option("--max", req.max_degree, "Largest degree");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kArgumentError;
  }

  CLI::App* active = nullptr;
  for (auto* sub : {constant, family, extremal_cmd, table, endpoint, oracle_cmd, verify, legendre}) {
    if (sub->parsed()) active = sub;
  }

  try {
    if (active == constant) return cmd_constant(req, out);
    if (active == family) return cmd_family(req, out);
    if (active == extremal_cmd) return cmd_extremal(req, out);
    if (active == table) return cmd_table(req, out);
    if (active == endpoint) return cmd_endpoint(req, out);
    if (active == oracle_cmd) return cmd_oracle(req, out);
    if (active == verify) return cmd_verify(req, out);
    if (active == legendre) return cmd_legendre_dump(req, out);
  } catch (const oracle::NumericalFailure& e) {
    err << "error: " << e.what() << " (condition hint " << io::format_double(e.condition_hint()) << ")\n";
    return kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kArgumentError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n\n" << active->help();
    return kArgumentError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kArgumentError;
  }
  err << app.help();
  return kArgumentError;
}

}  // namespace poincare::cli
