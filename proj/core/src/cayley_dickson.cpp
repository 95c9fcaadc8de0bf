#include "moufang/cayley_dickson.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "moufang/errors.hpp"

namespace moufang {

namespace {

template <std::size_t N>
std::vector<double> multiply_fixed(const std::vector<double>& x, const std::vector<double>& y) {
  std::array<double, N> a, b;
  std::copy_n(x.begin(), N, a.begin());
  std::copy_n(y.begin(), N, b.begin());
  const auto p = cd_multiply<N>(a, b);
  return {p.begin(), p.end()};
}

}  // namespace

double CompositionAlgebraElement::norm() const {
  double s = 0.0;
  for (double c : components) s += c * c;
  return std::sqrt(s);
}

CompositionAlgebraElement cd_product(const CompositionAlgebraElement& a, const CompositionAlgebraElement& b) {
  if (a.dim() != b.dim())
    throw UsageError("cd_product: dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()) + ")");
  switch (a.dim()) {
    case 4:
      return {multiply_fixed<4>(a.components, b.components)};
    case 8:
      return {multiply_fixed<8>(a.components, b.components)};
    default:
      throw UsageError("cd_product: dimension must be 4 or 8, got " + std::to_string(a.dim()));
  }
}

CompositionAlgebraElement basis_element(std::size_t dim, std::size_t index) {
  if (index >= dim) throw UsageError("basis index out of range");
  CompositionAlgebraElement e{std::vector<double>(dim, 0.0)};
  e.components[index] = 1.0;
  return e;
}

std::vector<std::vector<TableEntry>> multiplication_table(std::size_t dim) {
  std::vector<std::vector<TableEntry>> table(dim, std::vector<TableEntry>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const auto p = cd_product(basis_element(dim, i), basis_element(dim, j));
      for (std::size_t k = 0; k < dim; ++k) {
        if (p.components[k] != 0.0) table[i][j] = {p.components[k] > 0 ? 1 : -1, k};
      }
    }
  return table;
}

}  // namespace moufang
