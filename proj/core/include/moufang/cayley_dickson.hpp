#pragma once

// Cayley-Dickson doubling from the reals:
//   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),
// conjugation negating every non-real component. With this rule the
// quaternion basis satisfies e1 e2 = e3, and the octonions are pairs of
// quaternions with e4 = (0, 1).

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace moufang {

template <std::size_t N, class S>
std::array<S, N> cd_conjugate(const std::array<S, N>& a) {
  std::array<S, N> out;
  out[0] = a[0];
  for (std::size_t i = 1; i < N; ++i) out[i] = -a[i];
  return out;
}

template <std::size_t N, class S>
std::array<S, N> cd_multiply(const std::array<S, N>& x, const std::array<S, N>& y) {
  static_assert(N >= 1 && (N & (N - 1)) == 0, "Cayley-Dickson dimension must be a power of two");
  if constexpr (N == 1) {
    return {x[0] * y[0]};
  } else {
    constexpr std::size_t H = N / 2;
    std::array<S, H> a, b, c, d;
    for (std::size_t i = 0; i < H; ++i) {
      a[i] = x[i];
      b[i] = x[H + i];
      c[i] = y[i];
      d[i] = y[H + i];
    }
    const auto ac = cd_multiply<H>(a, c);
    const auto db = cd_multiply<H>(cd_conjugate<H>(d), b);
    const auto da = cd_multiply<H>(d, a);
    const auto bc = cd_multiply<H>(b, cd_conjugate<H>(c));
    std::array<S, N> out;
    for (std::size_t i = 0; i < H; ++i) {
      out[i] = ac[i] - db[i];
      out[H + i] = da[i] + bc[i];
    }
    return out;
  }
}

/// Element of the quaternions (4 components) or octonions (8 components).
struct CompositionAlgebraElement {
  std::vector<double> components;

  std::size_t dim() const { return components.size(); }
  double norm() const;
};

/// Throws UsageError on a dimension mismatch or a dimension other than 4 or 8.
CompositionAlgebraElement cd_product(const CompositionAlgebraElement& a, const CompositionAlgebraElement& b);

CompositionAlgebraElement basis_element(std::size_t dim, std::size_t index);

/// Multiplication table: entry [i][j] = (sign, k) with e_i e_j = sign * e_k.
struct TableEntry {
  int sign = 1;
  std::size_t index = 0;
};
std::vector<std::vector<TableEntry>> multiplication_table(std::size_t dim);

}  // namespace moufang
