#include "stringy/global.hpp"
#include "stringy/render.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace stringy;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw CLI::ValidationError("--format", "must be one of text, json, csv");
}

bool color_enabled() {
  const char* env = std::getenv("STRINGY_COLOR");
  return env != nullptr && std::string(env) == "1";
}

std::string value(const std::string& text) {
  if (color_enabled()) return "\x1b[1m" + text + "\x1b[0m";
  return text;
}

void require_not_csv(Format format) {
  if (format == Format::Csv)
    throw CLI::ValidationError("--format", "csv is only available for tables");
}

void print_json(const Json& j) { std::cout << j.dump() << "\n"; }

long long cell_int(const Integer& n) { return n.get_si(); }

// "n,ell[:count]" entries joined by ';'.
std::vector<std::pair<Singularity, long>> parse_singularities(const std::string& text, int r) {
  std::vector<std::pair<Singularity, long>> result;
  std::istringstream stream(text);
  std::string entry;
  while (std::getline(stream, entry, ';')) {
    if (entry.empty()) continue;
    long count = 1;
    std::string params = entry;
    if (auto colon = entry.find(':'); colon != std::string::npos) {
      params = entry.substr(0, colon);
      try {
        count = std::stol(entry.substr(colon + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed singularity count in '" + entry + "'");
      }
    }
    auto comma = params.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("malformed singularity '" + entry +
                                  "': expected n,ell[:count]");
    int n = 0, ell = 0;
    try {
      n = std::stoi(params.substr(0, comma));
      ell = std::stoi(params.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed singularity '" + entry +
                                  "': expected n,ell[:count]");
    }
    if (count < 0) throw std::invalid_argument("singularity count must be nonnegative");
    result.emplace_back(Singularity::make(r, n, ell), count);
  }
  return result;
}

std::vector<long> parse_degrees(const std::string& text) {
  std::vector<long> degrees;
  std::istringstream stream(text);
  std::string entry;
  while (std::getline(stream, entry, ',')) {
    if (entry.empty()) continue;
    try {
      degrees.push_back(std::stol(entry));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed degree '" + entry + "'");
    }
  }
  if (degrees.empty()) throw std::invalid_argument("at least one degree is required");
  return degrees;
}

void run_local(int r, int n, int ell, Format format) {
  require_not_csv(format);
  const auto s = Singularity::make(r, n, ell);
  const auto series = poincare_series_A(s);
  const Integer mu = milnor_number(s);
  std::vector<Integer> hodge;
  for (int p = 0; p <= r - 1; ++p) hodge.push_back(link_hodge(s, p));
  const UVPolynomial punctured = e_punctured(s);

  if (format == Format::Json) {
    Json weights = Json::array();
    for (long w : s.weights()) weights.push_back(w);
    Json link = Json::array();
    for (const auto& h : hodge) link.push_back(cell_int(h));
    print_json(Json{{"r", r},
                    {"n", n},
                    {"ell", ell},
                    {"d", s.degree()},
                    {"weights", weights},
                    {"milnor_number", cell_int(mu)},
                    {"poincare_series", series.str()},
                    {"link_hodge", link},
                    {"E_punctured", to_json(punctured)}});
    return;
  }
  std::cout << "r = " << value(std::to_string(r)) << "\n";
  std::cout << "n = " << value(std::to_string(n)) << "\n";
  std::cout << "ell = " << value(std::to_string(ell)) << "\n";
  std::cout << "d = " << value(std::to_string(s.degree())) << "\n";
  std::ostringstream ws;
  ws << "(";
  const auto weights = s.weights();
  for (size_t i = 0; i < weights.size(); ++i) {
    if (i > 0) ws << ", ";
    ws << weights[i];
  }
  ws << ")";
  std::cout << "weights = " << value(ws.str()) << "\n";
  std::cout << "milnor_number = " << value(mu.get_str()) << "\n";
  std::cout << "poincare_series = " << value(series.str()) << "\n";
  std::ostringstream lh;
  lh << "(";
  for (size_t i = 0; i < hodge.size(); ++i) {
    if (i > 0) lh << ", ";
    lh << hodge[i].get_str();
  }
  lh << ")";
  std::cout << "link_hodge = " << value(lh.str()) << "\n";
  std::cout << "E_punctured = " << value(punctured.str()) << "\n";
}

void run_estr(int r, int n, int ell, const std::string& method, Format format) {
  require_not_csv(format);
  const auto s = Singularity::make(r, n, ell);
  StringyExpression expr;
  Rational euler;
  if (method == "closed") {
    expr = closed_estr(s);
    euler = estr_euler(s, EulerMethod::Closed);
  } else if (method == "assembled") {
    expr = assemble_estr(s);
    euler = expr.limit_at_one();
  } else if (method == "both") {
    expr = assemble_estr(s);
    const StringyExpression closed = closed_estr(s);
    euler = expr.limit_at_one();
    if (!expr.equals(closed) || euler != estr_euler(s, EulerMethod::Closed))
      throw std::domain_error("closed and assembled stringy E-functions disagree");
  } else {
    throw CLI::ValidationError("--method", "must be one of assembled, closed, both");
  }
  const Integer index = ind_str(euler);
  const auto poly = expr.as_polynomial();

  if (format == Format::Json) {
    Json out;
    out["E_str"] = to_json(expr);
    if (poly) out["E_str_polynomial"] = to_json(*poly);
    out["e_str"] = to_json(euler);
    out["ind_str"] = cell_int(index);
    print_json(out);
    return;
  }
  std::cout << "E_str = " << value(poly ? poly->str() : expr.str()) << "\n";
  std::cout << "e_str = " << value(euler.str()) << "\n";
  std::cout << "ind_str = " << value(index.get_str()) << "\n";
}

void run_fermat(int ell, int dim, Format format) {
  require_not_csv(format);
  const auto f = FermatSpec::make(ell, dim);
  const UVPolynomial e_poly = fermat_E(f);
  const Integer euler = fermat_euler(f);
  if (format == Format::Json) {
    print_json(Json{{"E", to_json(e_poly)}, {"e", cell_int(euler)}});
    return;
  }
  std::cout << "E = " << value(e_poly.str()) << "\n";
  std::cout << "e = " << value(euler.get_str()) << "\n";
}

void run_eulerian(int kappa, int lambda, int nu, int xi, Format format) {
  require_not_csv(format);
  const Integer closed = eulerian_closed(kappa, lambda, nu, xi);
  const Rational recurrence = eulerian_recurrence(kappa, lambda, nu, xi);
  if (recurrence != Rational(closed))
    throw std::domain_error("eulerian recurrence and closed form disagree");
  if (format == Format::Json) {
    print_json(Json{{"S", closed.get_str()}});
    return;
  }
  std::cout << "S = " << value(closed.get_str()) << "\n";
}

void run_ci(int N, const std::string& degrees_text, const std::string& sing_text,
            Format format) {
  require_not_csv(format);
  CompleteIntersectionSpec spec;
  spec.N = N;
  spec.degrees = parse_degrees(degrees_text);
  spec.singularities = parse_singularities(sing_text, spec.dim());
  const Rational euler = estr_ci(spec);
  if (format == Format::Json) {
    print_json(Json{{"e_str", to_json(euler)}});
    return;
  }
  std::cout << "e_str = " << value(euler.str()) << "\n";
}

void run_goryunov(int N, int kappa, Format format) {
  require_not_csv(format);
  const Rational euler = goryunov_estr(N, kappa);
  const Integer index = ind_str(euler);
  if (format == Format::Json) {
    print_json(Json{{"e_str", to_json(euler)},
                    {"ind_str", cell_int(index)},
                    {"nodes", goryunov_node_count(N, kappa).get_str()}});
    return;
  }
  std::cout << "e_str = " << value(euler.str()) << "\n";
  std::cout << "ind_str = " << value(index.get_str()) << "\n";
}

void run_segre_knorrer(long n, Format format) {
  require_not_csv(format);
  const Rational euler = segre_knorrer_estr(n);
  if (format == Format::Json) {
    print_json(Json{{"e_str", to_json(euler)}});
    return;
  }
  std::cout << "e_str = " << value(euler.str()) << "\n";
}

void run_arrangement(int N, int r, int d, long t_top, Format format) {
  require_not_csv(format);
  const Rational euler = arrangement_estr(ArrangementSpec::make(N, r, d, t_top));
  if (format == Format::Json) {
    print_json(Json{{"e_str", to_json(euler)}});
    return;
  }
  std::cout << "e_str = " << value(euler.str()) << "\n";
}

void print_table(const Table& table, Format format) {
  switch (format) {
    case Format::Text:
      std::cout << render_table_text(table);
      return;
    case Format::Csv:
      std::cout << render_table_csv(table);
      return;
    case Format::Json:
      print_json(to_json(table));
      return;
  }
}

Table conjrem_table(int r, long n_max) {
  Table table;
  table.columns = {"n", "e_str", "ind_str"};
  for (long n = 1; n <= n_max; ++n) {
    const Rational e = conjrem_estr(r, n);
    table.rows.push_back({static_cast<long long>(n), e, Rational(ind_str(e))});
  }
  return table;
}

Table solids_table_view() {
  Table table;
  table.columns = {"solid", "N", "t3", "t4", "e_str_double", "e_str_triple"};
  for (const auto& row : solids_table())
    table.rows.push_back({row.name, static_cast<long long>(row.N),
                          static_cast<long long>(row.t3), static_cast<long long>(row.t4),
                          row.estr_double, row.estr_triple});
  return table;
}

Table segre_knorrer_table() {
  Table table;
  table.columns = {"n", "e_str", "annotation"};
  for (long n = 4; n <= 15; ++n) {
    // The n = 7 entry of the published table prints 96/4; the formula value
    // is 96/13.
    std::string annotation = n == 7 ? "paper_discrepancy" : "";
    table.rows.push_back({static_cast<long long>(n), segre_knorrer_estr(n), annotation});
  }
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String-theoretic E-functions, Euler numbers, and indices of "
               "hypersurface singularities x1^(n+1) + x2^ell + ... + x(r+1)^ell = 0, "
               "with global invariants of varieties carrying them"};
  app.require_subcommand(1);
  std::string format_name = "text";

  int r = 0, n_int = 0, ell = 0, dim = 0, N = 0, kappa = 0, lambda = 0, nu = 0, xi = 0, d = 0;
  long n_long = 0, n_max = 20, t_top = 0;
  std::string method = "assembled", degrees_text, sing_text;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "output format: text, json, csv")
        ->default_val("text");
  };

  auto* local = app.add_subcommand("local", "local invariants of one singularity");
  local->add_option("--r", r, "dimension of the hypersurface")->required();
  local->add_option("--n", n_int, "exponent parameter: first coordinate power is n+1")->required();
  local->add_option("--ell", ell, "exponent of the remaining coordinates")->required();
  add_format(local);

  auto* estr = app.add_subcommand("estr", "stringy E-function, Euler number, index");
  estr->add_option("--r", r, "dimension of the hypersurface")->required();
  estr->add_option("--n", n_int, "exponent parameter: first coordinate power is n+1")->required();
  estr->add_option("--ell", ell, "exponent of the remaining coordinates")->required();
  estr->add_option("--method", method, "assembled, closed, or both (both cross-checks)")
      ->default_val("assembled");
  add_format(estr);

  auto* fermat = app.add_subcommand("fermat", "E-polynomial and Euler number of a Fermat hypersurface");
  fermat->add_option("--ell", ell, "degree")->required();
  fermat->add_option("--dim", dim, "dimension")->required();
  add_format(fermat);

  auto* eulerian = app.add_subcommand("eulerian", "non-central Eulerian number S(kappa, lambda | nu, xi)");
  eulerian->add_option("--kappa", kappa)->required();
  eulerian->add_option("--lambda", lambda)->required();
  eulerian->add_option("--nu", nu)->required();
  eulerian->add_option("--xi", xi)->required();
  add_format(eulerian);

  auto* ci = app.add_subcommand("ci", "stringy Euler number of a singular complete intersection");
  ci->add_option("--N", N, "ambient projective dimension")->required();
  ci->add_option("--degrees", degrees_text, "comma-separated degrees, e.g. 3,2,2")->required();
  ci->add_option("--sing", sing_text, "singularities as n,ell[:count] joined by ';'")
      ->default_val("");
  add_format(ci);

  auto* goryunov = app.add_subcommand(
      "goryunov", "stringy Euler number of a quartic in P^N with 2^kappa*C(N+1,kappa+1) nodes");
  goryunov->add_option("--N", N, "ambient projective dimension")->required();
  goryunov->add_option("--kappa", kappa, "0 <= kappa <= N")->required();
  add_format(goryunov);

  auto* segre = app.add_subcommand(
      "segre-knorrer", "stringy Euler number of the singular intersection of two quadrics in P^n");
  segre->add_option("--n", n_long, "ambient projective dimension, n >= 4")->required();
  add_format(segre);

  auto* arrangement = app.add_subcommand(
      "arrangement", "stringy Euler number of a d-fold cover of P^r branched along N+1 hyperplanes");
  arrangement->add_option("--N", N, "ambient projective dimension of the cover")->required();
  arrangement->add_option("--r", r, "dimension of the cover")->required();
  arrangement->add_option("--d", d, "covering degree, 2 <= d <= r")->required();
  arrangement->add_option("--t", t_top, "number of points on r+1 hyperplanes")->required();
  add_format(arrangement);

  auto* table = app.add_subcommand("table", "built-in value tables");
  table->require_subcommand(1);
  auto* t_conjrem = table->add_subcommand("conjrem", "e_str and index for ell = 2");
  t_conjrem->add_option("--r", r, "dimension of the hypersurface")->required();
  t_conjrem->add_option("--n-max", n_max, "largest n")->default_val(20);
  add_format(t_conjrem);
  auto* t_solids = table->add_subcommand("solids", "double and triple solids of the plane arrangements");
  add_format(t_solids);
  auto* t_segre = table->add_subcommand("segre-knorrer", "quadric intersections, n = 4..15");
  add_format(t_segre);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format format = parse_format(format_name);
    if (*local) run_local(r, n_int, ell, format);
    if (*estr) run_estr(r, n_int, ell, method, format);
    if (*fermat) run_fermat(ell, dim, format);
    if (*eulerian) run_eulerian(kappa, lambda, nu, xi, format);
    if (*ci) run_ci(N, degrees_text, sing_text, format);
    if (*goryunov) run_goryunov(N, kappa, format);
    if (*segre) run_segre_knorrer(n_long, format);
    if (*arrangement) run_arrangement(N, r, d, t_top, format);
    if (*table) {
      if (*t_conjrem) print_table(conjrem_table(r, n_max), format);
      if (*t_solids) print_table(solids_table_view(), format);
      if (*t_segre) print_table(segre_knorrer_table(), format);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
