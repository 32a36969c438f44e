// Command-line front end: validates algebra definition files, reports the
// classical invariants, computes derivation algebras, and cross-checks the
// solver against brute-force enumeration over small prime fields.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibniz/algebra_io.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace leibniz;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;

json field_json(const Field &f) { return f.name(); }

json subspace_json(const Subspace &s) {
  json basis = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    json row = json::array();
    for (const Scalar &x : s.basis_row(i))
      row.push_back(x.str());
    basis.push_back(row);
  }
  return json{{"dim", s.dim()}, {"basis", basis}};
}

json matrix_json(const Matrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

json report_shell(const std::string &command, const std::string &input,
                  const LeibnizAlgebra &a) {
  return json{{"command", command},
              {"input", input},
              {"field", field_json(a.field())},
              {"dim", a.dim()},
              {"results", json::object()}};
}

void print_subspace(std::ostream &os, const std::string &label,
                    const Subspace &s,
                    const std::vector<std::string> &names) {
  os << label << ": dim " << s.dim();
  if (s.dim() > 0 && s.dim() < s.ambient_dim()) {
    os << "  {";
    for (std::size_t i = 0; i < s.dim(); ++i)
      os << (i ? ", " : " ") << format_combination(s.basis_row(i), names);
    os << " }";
  } else if (s.dim() == s.ambient_dim() && s.dim() > 0) {
    os << "  (whole space)";
  }
  os << "\n";
}

void print_matrix(std::ostream &os, const Matrix &m,
                  const std::string &indent) {
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      width[j] = std::max(width[j], m(i, j).str().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::string s = m(i, j).str();
      os << " " << std::string(width[j] - s.size(), ' ') << s;
    }
    os << " ]\n";
  }
}

LeibnizAlgebra load(const std::string &path) {
  return parse_algebra_file(path);
}

int run_validate(const std::string &path, bool as_json) {
  LeibnizAlgebra algebra = parse_algebra_unchecked(read_text_file(path));
  auto bad = algebra.leibniz_counterexample();
  if (as_json) {
    json doc = report_shell("validate", path, algebra);
    if (bad) {
      json names = json::array();
      for (std::size_t i : *bad)
        names.push_back(algebra.basis_names()[i]);
      doc["results"] = {{"ok", false}, {"counterexample", names}};
    } else {
      doc["results"] = {{"ok", true}, {"counterexample", nullptr}};
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "field: " << algebra.field().name()
              << "  dim: " << algebra.dim() << "\n";
    if (bad) {
      const auto &n = algebra.basis_names();
      std::cout << "left Leibniz identity: FAILED at basis triple ("
                << n[(*bad)[0]] << ", " << n[(*bad)[1]] << ", "
                << n[(*bad)[2]] << ")\n";
    } else {
      std::cout << "left Leibniz identity: ok\n";
    }
  }
  return bad ? exit_invalid : exit_ok;
}

int run_analyze(const std::string &path, bool as_json) {
  LeibnizAlgebra a = load(path);
  const auto &names = a.basis_names();

  Subspace kernel = a.leibniz_kernel();
  Subspace left = a.center(Side::left);
  Subspace right = a.center(Side::right);
  Subspace center = a.center(Side::two_sided);
  std::vector<Subspace> lower = a.lower_central_series();
  std::vector<Subspace> upper = a.upper_central_series();
  std::optional<std::size_t> cls = a.nilpotency_class();
  bool extraspecial = a.is_extraspecial();
  bool lie = a.is_lie();

  if (as_json) {
    json doc = report_shell("analyze", path, a);
    json lower_dims = json::array(), upper_dims = json::array();
    for (const Subspace &s : lower)
      lower_dims.push_back(s.dim());
    for (const Subspace &s : upper)
      upper_dims.push_back(s.dim());
    doc["results"] = {
        {"is_lie", lie},
        {"leibniz_kernel", subspace_json(kernel)},
        {"left_center", subspace_json(left)},
        {"right_center", subspace_json(right)},
        {"center", subspace_json(center)},
        {"lower_central_series_dims", lower_dims},
        {"nilpotency_class", cls ? json(*cls) : json(nullptr)},
        {"upper_central_series_dims", upper_dims},
        {"extraspecial", extraspecial}};
    std::cout << doc.dump(2) << "\n";
    return exit_ok;
  }

  std::cout << "field: " << a.field().name() << "  dim: " << a.dim()
            << "  basis:";
  for (const std::string &n : names)
    std::cout << " " << n;
  std::cout << "\n";
  std::cout << "lie algebra: " << (lie ? "yes" : "no") << "\n";
  print_subspace(std::cout, "leibniz kernel", kernel, names);
  print_subspace(std::cout, "left center", left, names);
  print_subspace(std::cout, "right center", right, names);
  print_subspace(std::cout, "center", center, names);
  std::cout << "lower central series dims:";
  for (const Subspace &s : lower)
    std::cout << " " << s.dim();
  std::cout << "\n";
  if (cls)
    std::cout << "nilpotency class: " << *cls << "\n";
  else
    std::cout << "nilpotency class: none (series stabilizes at dim "
              << lower.back().dim() << ")\n";
  std::cout << "upper central series dims:";
  for (const Subspace &s : upper)
    std::cout << " " << s.dim();
  std::cout << "\n";
  std::cout << "extraspecial: " << (extraspecial ? "yes" : "no") << "\n";
  return exit_ok;
}

int run_der(const std::string &path, bool as_json) {
  LeibnizAlgebra a = load(path);
  DerivationAlgebra der(a);
  DerivationAnalysis report = analyze(der);
  const LeibnizAlgebra &lie = der.lie_algebra();

  if (as_json) {
    json doc = report_shell("der", path, a);
    json basis = json::array();
    for (const Matrix &m : der.basis())
      basis.push_back(matrix_json(m));
    json sc = json::array();
    for (std::size_t x = 0; x < der.dim(); ++x) {
      json plane = json::array();
      for (std::size_t y = 0; y < der.dim(); ++y) {
        json row = json::array();
        for (std::size_t z = 0; z < der.dim(); ++z)
          row.push_back(der.structure_constant(x, y, z).str());
        plane.push_back(row);
      }
      sc.push_back(plane);
    }
    doc["results"] = {{"dim", der.dim()},
                      {"basis", basis},
                      {"lie_structure_constants", sc},
                      {"abelian", report.is_abelian},
                      {"center", subspace_json(report.center)},
                      {"derived", subspace_json(report.derived)}};
    std::cout << doc.dump(2) << "\n";
    return exit_ok;
  }

  std::cout << "field: " << a.field().name() << "  dim: " << a.dim() << "\n";
  std::cout << "dim Der(L): " << der.dim() << "\n";
  std::cout << "derivation basis (column j = image of basis vector j):\n";
  for (std::size_t i = 0; i < der.dim(); ++i) {
    std::cout << "  d" << i + 1 << ":\n";
    print_matrix(std::cout, der.basis()[i], "    ");
  }
  std::cout << "nonzero brackets:\n";
  bool any = false;
  for (std::size_t x = 0; x < der.dim(); ++x)
    for (std::size_t y = 0; y < der.dim(); ++y) {
      Vec v = lie.bracket_basis(x, y);
      if (is_zero_vector(v))
        continue;
      any = true;
      std::cout << "  [d" << x + 1 << ", d" << y + 1
                << "] = " << format_combination(v, lie.basis_names()) << "\n";
    }
  if (!any)
    std::cout << "  (none)\n";
  std::cout << "abelian: " << (report.is_abelian ? "yes" : "no") << "\n";
  std::cout << "center of Der: dim " << report.center.dim() << "\n";
  std::cout << "derived subalgebra [Der,Der]: dim " << report.derived.dim()
            << "\n";
  return exit_ok;
}

int run_oracle(const std::string &path, std::uint64_t limit, bool as_json) {
  LeibnizAlgebra a = load(path);
  if (a.field().kind() != FieldKind::prime_field) {
    std::cerr << "oracle: requires a finite prime field, got "
              << a.field().name() << "\n";
    return exit_usage;
  }
  OracleReport r = compare(a, limit);
  if (as_json) {
    json doc = report_shell("oracle", path, a);
    doc["results"] = {{"derivation_count", r.derivation_count},
                      {"derivation_dim", r.derivation_dim},
                      {"solver_dim", r.solver_dim},
                      {"derivations_match", r.derivations_match},
                      {"leib_kernel_match", r.leib_kernel_match},
                      {"left_center_match", r.left_center_match},
                      {"right_center_match", r.right_center_match},
                      {"center_match", r.center_match},
                      {"annihilators_match", r.annihilators_match},
                      {"match", r.match}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "field: " << a.field().name() << "  dim: " << a.dim()
              << "\n";
    std::cout << "enumerated derivations: " << r.derivation_count << " (= p^"
              << r.derivation_dim << ")\n";
    std::cout << "solver dim Der(L): " << r.solver_dim << "\n";
    auto yn = [](bool b) { return b ? "yes" : "NO"; };
    std::cout << "derivations match: " << yn(r.derivations_match) << "\n";
    std::cout << "leibniz kernel match: " << yn(r.leib_kernel_match) << "\n";
    std::cout << "left center match: " << yn(r.left_center_match) << "\n";
    std::cout << "right center match: " << yn(r.right_center_match) << "\n";
    std::cout << "center match: " << yn(r.center_match) << "\n";
    std::cout << "annihilators match: " << yn(r.annihilators_match) << "\n";
    std::cout << "overall: " << (r.match ? "match" : "MISMATCH") << "\n";
  }
  return r.match ? exit_ok : exit_invalid;
}

Field parse_field_flag(const std::string &text) {
  if (text == "Q")
    return Field::rationals();
  if (text.rfind("GF:", 0) == 0) {
    try {
      return Field::gf(std::stoull(text.substr(3)));
    } catch (const std::invalid_argument &e) {
      throw ParseError(0, e.what());
    } catch (...) {
      throw ParseError(0, "bad field '" + text + "'");
    }
  }
  throw ParseError(0, "bad field '" + text + "' (expected Q or GF:p)");
}

int run_catalog(const std::string &kind_name, const std::string &field_text,
                const std::string &lambda_text, std::size_t abelian_dim,
                const std::string &output) {
  auto kind = catalog_kind_from_name(kind_name);
  if (!kind) {
    std::cerr << "catalog: unknown algebra '" << kind_name
              << "' (expected lei4, lei5, cyclic2, abelian, heisenberg)\n";
    return exit_usage;
  }
  Field field = parse_field_flag(field_text);
  std::optional<CatalogEntry> entry;
  switch (*kind) {
  case CatalogKind::lei4:
  case CatalogKind::lei5: {
    Scalar lambda = field.parse(lambda_text.empty() ? "1" : lambda_text);
    entry = *kind == CatalogKind::lei4 ? lei4(field, lambda)
                                       : lei5(field, lambda);
    break;
  }
  case CatalogKind::cyclic2:
    entry = cyclic_nilpotent_dim2(field);
    break;
  case CatalogKind::abelian:
    entry = abelian(field, abelian_dim);
    break;
  case CatalogKind::heisenberg:
    entry = heisenberg(field);
    break;
  }
  std::string text = serialize_algebra(entry->algebra);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "catalog: cannot write '" << output << "'\n";
      return exit_usage;
    }
    out << text;
  }
  return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact-arithmetic toolkit for structure-constant Leibniz "
               "algebras and their derivation Lie algebras"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false;
  std::uint64_t limit = oracle_default_limit;

  CLI::App *validate =
      app.add_subcommand("validate", "Check the left Leibniz identity");
  validate->add_option("file", path, "algebra definition file")->required();
  validate->add_flag("--json", as_json, "machine-readable output");

  CLI::App *analyze_cmd = app.add_subcommand(
      "analyze", "Kernel, centers, central series, class, extraspecial");
  analyze_cmd->add_option("file", path, "algebra definition file")->required();
  analyze_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App *der = app.add_subcommand(
      "der", "Derivation algebra: basis, Lie structure, decomposition");
  der->add_option("file", path, "algebra definition file")->required();
  der->add_flag("--json", as_json, "machine-readable output");

  CLI::App *oracle = app.add_subcommand(
      "oracle", "Brute-force cross-check over a finite prime field");
  oracle->add_option("file", path, "algebra definition file")->required();
  oracle->add_flag("--json", as_json, "machine-readable output");
  oracle->add_option("--limit", limit,
                     "enumeration budget (candidate matrices)");

  std::string kind_name, field_text, lambda_text, output;
  std::size_t abelian_dim = 3;
  CLI::App *catalog = app.add_subcommand(
      "catalog", "Write a built-in algebra as a definition file");
  catalog->add_option("kind", kind_name,
                      "lei4 | lei5 | cyclic2 | abelian | heisenberg")
      ->required();
  catalog->add_option("--field", field_text, "Q or GF:p")->required();
  catalog->add_option("--lambda", lambda_text,
                      "family parameter for lei4/lei5 (default 1)");
  catalog->add_option("--dim", abelian_dim,
                      "dimension for the abelian algebra (default 3)");
  catalog->add_option("-o,--output", output,
                      "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? exit_ok : exit_usage;
  }

  try {
    if (validate->parsed())
      return run_validate(path, as_json);
    if (analyze_cmd->parsed())
      return run_analyze(path, as_json);
    if (der->parsed())
      return run_der(path, as_json);
    if (oracle->parsed())
      return run_oracle(path, limit, as_json);
    if (catalog->parsed())
      return run_catalog(kind_name, field_text, lambda_text, abelian_dim,
                         output);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const IdentityViolationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const SearchSpaceTooLargeError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const LambdaZeroError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
