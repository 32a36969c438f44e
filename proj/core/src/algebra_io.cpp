#include "leibniz/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace leibniz {

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string &s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok)
    out.push_back(tok);
  return out;
}

bool valid_name(const std::string &s) {
  if (s.empty())
    return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
      return false;
  return true;
}

bool all_digits(const std::string &s) {
  if (s.empty())
    return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

struct Parser {
  std::optional<Field> field;
  std::optional<std::size_t> dim;
  std::vector<std::string> names;
  std::optional<AlgebraBuilder> builder;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> assigned;
  bool saw_basis = false;

  std::size_t name_index(const std::string &name, std::size_t line) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name)
        return i;
    throw ParseError(line, "unknown basis name '" + name + "'");
  }

  void ensure_builder(std::size_t line) {
    if (!field)
      throw ParseError(line, "'field' must be declared first");
    if (!dim)
      throw ParseError(line, "'dim' must be declared before brackets");
    if (!builder) {
      if (names.empty())
        for (std::size_t i = 0; i < *dim; ++i)
          names.push_back("e" + std::to_string(i + 1));
      builder.emplace(*field, names);
    }
  }

  void handle_field(const std::vector<std::string> &tok, std::size_t line) {
    if (field)
      throw ParseError(line, "duplicate 'field' declaration");
    if (tok.size() == 2 && tok[1] == "Q") {
      field = Field::rationals();
      return;
    }
    if (tok.size() == 3 && tok[1] == "GF") {
      if (!all_digits(tok[2]))
        throw ParseError(line, "bad prime '" + tok[2] + "'");
      try {
        field = Field::gf(std::stoull(tok[2]));
      } catch (const std::invalid_argument &e) {
        throw ParseError(line, e.what()); // non-prime modulus
      } catch (...) {
        throw ParseError(line, "bad prime '" + tok[2] + "'");
      }
      return;
    }
    throw ParseError(line, "expected 'field Q' or 'field GF <p>'");
  }

  void handle_dim(const std::vector<std::string> &tok, std::size_t line) {
    if (dim)
      throw ParseError(line, "duplicate 'dim' declaration");
    if (tok.size() != 2 || !all_digits(tok[1]))
      throw ParseError(line, "expected 'dim <n>'");
    try {
      dim = std::stoull(tok[1]);
    } catch (...) {
      throw ParseError(line, "bad dimension '" + tok[1] + "'");
    }
  }

  void handle_basis(const std::vector<std::string> &tok, std::size_t line) {
    if (!dim)
      throw ParseError(line, "'basis' requires 'dim' first");
    if (saw_basis)
      throw ParseError(line, "duplicate 'basis' declaration");
    if (builder)
      throw ParseError(line, "'basis' must precede bracket lines");
    if (tok.size() != *dim + 1)
      throw ParseError(line, "expected " + std::to_string(*dim) +
                                 " basis names");
    names.assign(tok.begin() + 1, tok.end());
    for (const std::string &n : names)
      if (!valid_name(n))
        throw ParseError(line, "invalid basis name '" + n + "'");
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j])
          throw ParseError(line, "repeated basis name '" + names[i] + "'");
    saw_basis = true;
  }

  Vec parse_rhs(const std::string &rhs, std::size_t line) {
    Vec value = zero_vector(*field, *dim);
    std::size_t pos = 0;
    bool first = true;
    while (true) {
      std::size_t plus = rhs.find('+', pos);
      std::string term = strip(plus == std::string::npos
                                   ? rhs.substr(pos)
                                   : rhs.substr(pos, plus - pos));
      if (term.empty())
        throw ParseError(line, first ? "empty right-hand side"
                                     : "empty term after '+'");
      Scalar coeff = field->one();
      std::string name = term;
      if (std::size_t star = term.find('*'); star != std::string::npos) {
        try {
          coeff = field->parse(strip(term.substr(0, star)));
        } catch (const ParseError &e) {
          throw ParseError(line, e.what());
        }
        name = strip(term.substr(star + 1));
      }
      std::size_t idx = name_index(name, line);
      value[idx] += coeff;
      first = false;
      if (plus == std::string::npos)
        break;
      pos = plus + 1;
    }
    return value;
  }

  void handle_bracket(const std::string &line_text, std::size_t line) {
    ensure_builder(line);
    std::size_t close = line_text.find(']');
    if (line_text.empty() || line_text[0] != '[' || close == std::string::npos)
      throw ParseError(line, "expected '[<name>,<name>] = ...'");
    std::string inside = line_text.substr(1, close - 1);
    std::size_t comma = inside.find(',');
    if (comma == std::string::npos)
      throw ParseError(line, "expected two comma-separated basis names");
    std::size_t i = name_index(strip(inside.substr(0, comma)), line);
    std::size_t j = name_index(strip(inside.substr(comma + 1)), line);
    std::string rest = strip(line_text.substr(close + 1));
    if (rest.empty() || rest[0] != '=')
      throw ParseError(line, "expected '=' after bracket");
    auto key = std::make_pair(i, j);
    if (auto it = assigned.find(key); it != assigned.end())
      throw ParseError(line, "bracket [" + names[i] + "," + names[j] +
                                 "] already assigned on line " +
                                 std::to_string(it->second));
    assigned.emplace(key, line);
    builder->set_bracket(i, j, parse_rhs(strip(rest.substr(1)), line));
  }
};

LeibnizAlgebra parse_impl(std::string_view text, bool check_identity) {
  Parser p;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::string line = std::string(raw);
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    line = strip(line);
    if (line.empty())
      continue;

    if (line[0] == '[') {
      p.handle_bracket(line, line_no);
      continue;
    }
    std::vector<std::string> tok = split_ws(line);
    if (tok[0] == "field")
      p.handle_field(tok, line_no);
    else if (tok[0] == "dim")
      p.handle_dim(tok, line_no);
    else if (tok[0] == "basis")
      p.handle_basis(tok, line_no);
    else
      throw ParseError(line_no, "unrecognized directive '" + tok[0] + "'");
  }
  if (!p.field)
    throw ParseError(0, "missing 'field' declaration");
  if (!p.dim)
    throw ParseError(0, "missing 'dim' declaration");
  p.ensure_builder(0);
  return check_identity ? p.builder->checked() : p.builder->unchecked();
}

} // namespace

LeibnizAlgebra parse_algebra(std::string_view text) {
  return parse_impl(text, true);
}

LeibnizAlgebra parse_algebra_unchecked(std::string_view text) {
  return parse_impl(text, false);
}

std::string read_text_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

LeibnizAlgebra parse_algebra_file(const std::string &path) {
  return parse_algebra(read_text_file(path));
}

std::string serialize_algebra(const LeibnizAlgebra &algebra) {
  std::ostringstream out;
  const Field &f = algebra.field();
  if (f.kind() == FieldKind::rationals)
    out << "field Q\n";
  else
    out << "field GF " << f.characteristic() << "\n";
  out << "dim " << algebra.dim() << "\n";
  out << "basis";
  for (const std::string &n : algebra.basis_names())
    out << " " << n;
  out << "\n";
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = 0; j < algebra.dim(); ++j) {
      Vec v = algebra.bracket_basis(i, j);
      if (is_zero_vector(v))
        continue;
      out << "[" << algebra.basis_names()[i] << ","
          << algebra.basis_names()[j] << "] =";
      bool first = true;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
          continue;
        out << (first ? " " : " + ");
        if (!v[k].is_one())
          out << v[k].str() << "*";
        out << algebra.basis_names()[k];
        first = false;
      }
      out << "\n";
    }
  return out.str();
}

std::string format_combination(const Vec &v,
                               const std::vector<std::string> &names) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero())
      continue;
    std::string coeff = v[k].str();
    if (out.empty()) {
      if (coeff == "1")
        out = names[k];
      else if (coeff == "-1")
        out = "-" + names[k];
      else
        out = coeff + "*" + names[k];
      continue;
    }
    if (!coeff.empty() && coeff[0] == '-') {
      std::string mag = coeff.substr(1);
      out += mag == "1" ? " - " + names[k] : " - " + mag + "*" + names[k];
    } else {
      out += coeff == "1" ? " + " + names[k] : " + " + coeff + "*" + names[k];
    }
  }
  return out.empty() ? "0" : out;
}

} // namespace leibniz
