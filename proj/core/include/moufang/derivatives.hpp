#pragma once

// Exact Jacobians and cross second partials of a loop multiplication.

#include <span>

#include "moufang/loop.hpp"
#include "moufang/tensor.hpp"

namespace moufang {

/// J^i_s = d(gh)^i / dg^s.
Matrix jacobian_g(const LoopChart& loop, std::span<const double> g, std::span<const double> h);

/// J^i_s = d(gh)^i / dh^s.
Matrix jacobian_h(const LoopChart& loop, std::span<const double> g, std::span<const double> h);

/// Both Jacobians and the cross partials mixed(i, j, k) = d^2 (gh)^i / dg^j dh^k,
/// from one sweep of hyper-dual evaluations.
struct CrossJet {
  Matrix jac_g;
  Matrix jac_h;
  Tensor3 mixed;
};
CrossJet cross_jet(const LoopChart& loop, std::span<const double> g, std::span<const double> h);

}  // namespace moufang
