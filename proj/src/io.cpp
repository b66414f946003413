#include "poincare/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace poincare::io {

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf.data(), end);
}

Json to_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

Json to_json(const KinkFunction<Rational>& f) {
  return Json{{"kink", f.kink().str()}, {"left", to_json(f.left())}, {"right", to_json(f.right())}};
}

Json to_json(const SharpSolution& sol) {
  Json out;
  out["m"] = sol.m;
  out["x"] = sol.x.str();
  out["a"] = sol.a.str();
  out["alpha"] = sol.alpha.str();
  out["beta"] = sol.beta.str();
  out["c"] = sol.c.str();
  out["Bsq"] = sol.Bsq.str();
  out["B"] = sol.B();
  out["Q"] = to_json(sol.Q);
  out["extremal"] = to_json(extremal(sol));
  return out;
}

Json to_json(const SharpFamily& fam) {
  Json out;
  out["m"] = fam.m;
  out["Bsq"] = to_json(fam.Bsq_poly);
  out["a"] = to_json(fam.a_poly);
  out["alpha"] = to_json(fam.alpha_poly);
  out["beta"] = to_json(fam.beta_poly);
  return out;
}

Json to_json(const LegendreTable& table) {
  Json out;
  out["max_degree"] = table.max_degree;
  Json legendre = Json::array();
  Json companion = Json::object();
  Json gamma = Json::array();
  for (int k = 0; k <= table.max_degree; ++k) {
    legendre.push_back(to_json(table.legendre(k)));
    gamma.push_back(to_json(table.gamma_coefficient(k)));
    if (k >= 2) companion[std::to_string(k)] = to_json(table.companion(k));
  }
  out["P"] = std::move(legendre);
  out["p_low"] = std::move(companion);
  out["gamma"] = std::move(gamma);
  return out;
}

Json to_json(const oracle::OracleResult& result, const std::optional<double>& b_exact) {
  Json out;
  out["m"] = result.m;
  out["x"] = result.x;
  out["nodes"] = result.nodes;
  out["grid_size"] = result.grid_size;
  out["energy"] = result.energy;
  out["b_estimate"] = result.b_estimate;
  if (b_exact) {
    out["b_exact"] = *b_exact;
    out["rel_error"] = std::abs(result.b_estimate - *b_exact) / *b_exact;
  }
  out["max_residual"] = result.max_residual();
  out["constraint_residuals"] = result.constraint_residuals;
  out["condition_hint"] = result.condition_hint;
  return out;
}

RationalPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw std::invalid_argument("polynomial coefficient must be a \"p/q\" string");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return RationalPolynomial(std::move(coeffs));
}

std::string oracle_csv_header() { return "m,x,nodes,energy,b_estimate,b_exact,rel_error,max_residual"; }

std::string oracle_csv_row(const oracle::OracleResult& result, const std::optional<double>& b_exact) {
  std::string row = std::to_string(result.m) + "," + format_double(result.x) + "," + std::to_string(result.nodes) +
                    "," + format_double(result.energy) + "," + format_double(result.b_estimate) + ",";
  if (b_exact) {
    row += format_double(*b_exact) + "," + format_double(std::abs(result.b_estimate - *b_exact) / *b_exact);
  } else {
    row += ",";
  }
  row += "," + format_double(result.max_residual());
  return row;
}

}  // namespace poincare::io
