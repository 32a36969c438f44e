#include "leibniz/catalog.hpp"

#include <stdexcept>

namespace leibniz {

std::string catalog_kind_name(CatalogKind kind) {
  switch (kind) {
  case CatalogKind::lei4:
    return "lei4";
  case CatalogKind::lei5:
    return "lei5";
  case CatalogKind::cyclic2:
    return "cyclic2";
  case CatalogKind::abelian:
    return "abelian";
  case CatalogKind::heisenberg:
    return "heisenberg";
  }
  return "?";
}

std::optional<CatalogKind> catalog_kind_from_name(std::string_view name) {
  if (name == "lei4")
    return CatalogKind::lei4;
  if (name == "lei5")
    return CatalogKind::lei5;
  if (name == "cyclic2")
    return CatalogKind::cyclic2;
  if (name == "abelian")
    return CatalogKind::abelian;
  if (name == "heisenberg")
    return CatalogKind::heisenberg;
  return std::nullopt;
}

namespace {

void require_nonzero_lambda(const Scalar &lambda) {
  if (lambda.is_zero())
    throw LambdaZeroError("the family parameter lambda must be nonzero");
}

Vec a3_times(const Field &f, const Scalar &coeff) {
  Vec v = zero_vector(f, 3);
  v[2] = coeff;
  return v;
}

} // namespace

CatalogEntry lei4(const Field &field, const Scalar &lambda) {
  require_nonzero_lambda(lambda);
  AlgebraBuilder b(field, {"a1", "a2", "a3"});
  b.set_bracket(0, 0, a3_times(field, field.one()));
  b.set_bracket(1, 1, a3_times(field, lambda));
  return CatalogEntry{b.checked(), CatalogKind::lei4, lambda,
                      lei4_param_admissible(field, lambda)};
}

CatalogEntry lei5(const Field &field, const Scalar &lambda) {
  require_nonzero_lambda(lambda);
  AlgebraBuilder b(field, {"a1", "a2", "a3"});
  b.set_bracket(0, 0, a3_times(field, field.one()));
  b.set_bracket(0, 1, a3_times(field, field.one()));
  b.set_bracket(1, 1, a3_times(field, lambda));
  return CatalogEntry{b.checked(), CatalogKind::lei5, lambda, std::nullopt};
}

CatalogEntry cyclic_nilpotent_dim2(const Field &field) {
  AlgebraBuilder b(field, {"b", "c"});
  b.set_bracket(0, 0, unit_vector(field, 2, 1));
  return CatalogEntry{b.checked(), CatalogKind::cyclic2, std::nullopt,
                      std::nullopt};
}

CatalogEntry abelian(const Field &field, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    names.push_back("e" + std::to_string(i + 1));
  AlgebraBuilder b(field, std::move(names));
  return CatalogEntry{b.checked(), CatalogKind::abelian, std::nullopt,
                      std::nullopt};
}

CatalogEntry heisenberg(const Field &field) {
  AlgebraBuilder b(field, {"e1", "e2", "e3"});
  b.set_bracket(0, 1, a3_times(field, field.one()));
  b.set_bracket(1, 0, a3_times(field, -field.one()));
  return CatalogEntry{b.checked(), CatalogKind::heisenberg, std::nullopt,
                      std::nullopt};
}

bool lei4_param_admissible(const Field &field, const Scalar &lambda) {
  require_nonzero_lambda(lambda);
  if (lambda.field() != field)
    throw MixedFieldsError("lambda must be an element of the given field");
  return !is_square(-lambda);
}

std::vector<NamedDerivation> expected_der_basis(CatalogKind kind,
                                                const Field &field) {
  if (kind != CatalogKind::lei4 && kind != CatalogKind::lei5)
    throw std::invalid_argument(
        "expected derivation bases exist only for lei4 and lei5");
  auto single = [&](std::size_t r, std::size_t c) {
    Matrix m(field, 3, 3);
    m(r, c) = field.one();
    return m;
  };
  std::vector<NamedDerivation> result;
  result.push_back({"z", single(2, 0)}); // a1 -> a3
  result.push_back({"w", single(2, 1)}); // a2 -> a3
  if (field.characteristic() != 2)
    return result;
  if (kind == CatalogKind::lei4) {
    result.push_back({"u", single(0, 0)}); // a1 -> a1
    result.push_back({"v", single(1, 1)}); // a2 -> a2
  } else {
    Matrix u(field, 3, 3); // a1 -> a1, a2 -> a2
    u(0, 0) = field.one();
    u(1, 1) = field.one();
    result.push_back({"u", u});
  }
  return result;
}

} // namespace leibniz
