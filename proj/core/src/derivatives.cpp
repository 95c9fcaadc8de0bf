#include "moufang/derivatives.hpp"

#include <numeric>
#include <vector>

namespace moufang {

namespace {

Matrix jacobian(const LoopChart& loop, std::span<const double> g, std::span<const double> h, Argument arg) {
  const std::size_t n = loop.dim();
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const auto jets = lift_map(chart_map(loop), DerivativeRequest{arg, all, 1})(g, h);
  Matrix j(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s) j(i, s) = jets[i].first[s];
  return j;
}

}  // namespace

Matrix jacobian_g(const LoopChart& loop, std::span<const double> g, std::span<const double> h) {
  return jacobian(loop, g, h, Argument::first);
}

Matrix jacobian_h(const LoopChart& loop, std::span<const double> g, std::span<const double> h) {
  return jacobian(loop, g, h, Argument::second);
}

CrossJet cross_jet(const LoopChart& loop, std::span<const double> g, std::span<const double> h) {
  const std::size_t n = loop.dim();
  CrossJet out{Matrix(n), Matrix(n), Tensor3(n)};
  std::vector<HyperDual> gs(n), hs(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t q = 0; q < n; ++q) {
        gs[q] = HyperDual(g[q]);
        hs[q] = HyperDual(h[q]);
      }
      gs[j].d1 = 1.0;
      hs[k].d2 = 1.0;
      const auto y = loop.multiply(std::span<const HyperDual>(gs), std::span<const HyperDual>(hs));
      for (std::size_t i = 0; i < n; ++i) {
        if (k == 0) out.jac_g(i, j) = y[i].d1;
        if (j == 0) out.jac_h(i, k) = y[i].d2;
        out.mixed(i, j, k) = y[i].d12;
      }
    }
  return out;
}

}  // namespace moufang
