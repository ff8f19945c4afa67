#pragma once

#include "stringy/expression.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <variant>
#include <vector>

namespace stringy {

using Json = nlohmann::ordered_json;

// {"num": "...", "den": "..."}
Json to_json(const Rational& r);
// [{"p": int, "q": int, "coeff": "num/den"}], canonical term order.
Json to_json(const UVPolynomial& p);
// {"terms": [{"numerator": [...], "denominator_factors": [k, ...]}]}
Json to_json(const StringyExpression& e);

struct Table {
  using Cell = std::variant<long long, Rational, std::string>;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string render_cell(const Table::Cell& cell);

// Space-aligned columns, one header line.
std::string render_table_text(const Table& table);
// Header row plus data rows; fields are quoted when they contain a comma,
// quote, or newline.
std::string render_table_csv(const Table& table);
// {"columns": [...], "rows": [[...]]}
Json to_json(const Table& table);

}  // namespace stringy
