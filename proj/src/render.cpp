#include "stringy/render.hpp"

#include <algorithm>
#include <sstream>

namespace stringy {

Json to_json(const Rational& r) {
  return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

Json to_json(const UVPolynomial& p) {
  std::vector<std::pair<Bidegree, Rational>> terms(p.coeffs().begin(), p.coeffs().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int ta = a.first.p + a.first.q, tb = b.first.p + b.first.q;
    if (ta != tb) return ta > tb;
    return a.first.p > b.first.p;
  });
  Json list = Json::array();
  for (const auto& [b, c] : terms)
    list.push_back(Json{{"p", b.p}, {"q", b.q}, {"coeff", c.str()}});
  return list;
}

Json to_json(const StringyExpression& e) {
  Json terms = Json::array();
  for (const auto& term : e.terms()) {
    terms.push_back(Json{{"numerator", to_json(term.numerator)},
                         {"denominator_factors", term.denominator_exponents}});
  }
  return Json{{"terms", terms}};
}

std::string render_cell(const Table::Cell& cell) {
  if (const auto* n = std::get_if<long long>(&cell)) return std::to_string(*n);
  if (const auto* r = std::get_if<Rational>(&cell)) return r->str();
  return std::get<std::string>(cell);
}

std::string render_table_text(const Table& table) {
  std::vector<size_t> widths(table.columns.size());
  for (size_t i = 0; i < table.columns.size(); ++i) widths[i] = table.columns[i].size();
  std::vector<std::vector<std::string>> rendered;
  rendered.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (size_t i = 0; i < row.size(); ++i) {
      cells.push_back(render_cell(row[i]));
      widths[i] = std::max(widths[i], cells.back().size());
    }
    rendered.push_back(std::move(cells));
  }
  std::ostringstream os;
  auto emit_row = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
      line += cells[i];
      if (i + 1 < cells.size())
        line += std::string(widths[i] - cells[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  };
  emit_row(table.columns);
  for (const auto& cells : rendered) emit_row(cells);
  return os.str();
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_table_csv(const Table& table) {
  std::ostringstream os;
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) os << ",";
      os << csv_escape(cells[i]);
    }
    os << "\n";
  };
  emit_row(table.columns);
  for (const auto& row : table.rows) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (const auto& cell : row) cells.push_back(render_cell(cell));
    emit_row(cells);
  }
  return os.str();
}

Json to_json(const Table& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    Json cells = Json::array();
    for (const auto& cell : row) {
      if (const auto* n = std::get_if<long long>(&cell))
        cells.push_back(*n);
      else if (const auto* r = std::get_if<Rational>(&cell))
        cells.push_back(to_json(*r));
      else
        cells.push_back(std::get<std::string>(cell));
    }
    rows.push_back(std::move(cells));
  }
  return Json{{"columns", table.columns}, {"rows", rows}};
}

}  // namespace stringy
