#ifndef POINCARE_IO_HPP
#define POINCARE_IO_HPP

#include <string>

#include "json.hpp"
#include "poincare/kink_function.hpp"
#include "poincare/legendre.hpp"
#include "poincare/oracle.hpp"
#include "poincare/sharp.hpp"

namespace poincare::io {

using Json = nlohmann::ordered_json;

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// Ascending-degree array of "p/q" strings.
Json to_json(const RationalPolynomial& p);
Json to_json(const KinkFunction<Rational>& f);
Json to_json(const SharpSolution& sol);
Json to_json(const SharpFamily& fam);
Json to_json(const LegendreTable& table);
Json to_json(const oracle::OracleResult& result, const std::optional<double>& b_exact);

/// Inverse of to_json(RationalPolynomial); throws std::invalid_argument.
RationalPolynomial polynomial_from_json(const Json& j);

/// m,x,nodes,energy,b_estimate,b_exact,rel_error,max_residual
std::string oracle_csv_header();
std::string oracle_csv_row(const oracle::OracleResult& result, const std::optional<double>& b_exact);

}  // namespace poincare::io

#endif  // POINCARE_IO_HPP
