#pragma once

// Auxiliary functions u, v, w of a loop chart and everything built from them.
//
//   u^s_j(g) = d m^s(h, g) / dh^j at h = e   (generator of left translations)
//   v^s_j(g) = d m^s(g, h) / dh^j at h = e   (generator of right translations)
//   w        = -(u + v)
//
// Vector fields L_x = x^j u^s_j d_s, R_x = x^j v^s_j d_s, M_x = x^j w^s_j d_s.
// Secondary functions (antisymmetric in j, k):
//   u^s_jk = u^p_k d_p u^s_j - u^p_j d_p u^s_k        ([L_x, L_y] = -x^j y^k u^s_jk d_s)
// and likewise v_jk, w_jk; y_jk = (u_jk + v_jk + w_jk) / 6. Mixed commutators:
//   lr^s_jk = u^p_j d_p v^s_k - v^p_k d_p u^s_j      ([L_x, R_y] = x^j y^k lr^s_jk d_s)
//   rl^s_jk = v^p_j d_p u^s_k - u^p_k d_p v^s_j      ([R_x, L_y] = x^j y^k rl^s_jk d_s)

#include <span>
#include <vector>

#include "moufang/loop.hpp"
#include "moufang/tensor.hpp"

namespace moufang {

enum class Sign : int { plus = 1, minus = -1 };

inline double factor(Sign s) { return static_cast<double>(static_cast<int>(s)); }
inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// Sign conventions left open by the theory: the bracket sign of the structure
/// constants and the sign of the C-terms in the u_jk/v_jk/w_jk decomposition.
/// Defaults are the values calibration selects.
struct ConventionLedger {
  Sign bracket_sign = Sign::plus;
  Sign lemma_sign = Sign::minus;

  bool operator==(const ConventionLedger&) const = default;
};

struct TangentVector {
  std::vector<double> components;

  std::size_t size() const { return components.size(); }
  double operator[](std::size_t i) const { return components[i]; }
};

struct AuxTensors {
  Matrix u, v, w;
};

struct SecondaryTensors {
  Tensor3 u_jk, v_jk, w_jk, y_jk;
  Tensor3 lr_jk, rl_jk;
};

struct PointTensors {
  AuxTensors aux;
  SecondaryTensors secondary;
};

/// C^i_jk = sigma * (a^i_kj - a^i_jk), a^i_jk = d^2 m^i / dg^j dh^k at (e, e).
struct StructureConstants {
  Tensor3 c;
};

AuxTensors aux_tensors(const LoopChart& loop, std::span<const double> g);

SecondaryTensors secondary_tensors(const LoopChart& loop, std::span<const double> g);

/// Aux and secondary tensors from a single pass of second-order jets.
PointTensors point_tensors(const LoopChart& loop, std::span<const double> g);

StructureConstants structure_constants(const LoopChart& loop, Sign bracket_sign = Sign::plus);

enum class Translation { left, right, middle };

/// L_x, R_x or M_x at g: x^j times column j of u, v or w.
TangentVector field_eval(const LoopChart& loop, Translation which, const TangentVector& x,
                         std::span<const double> g);

/// Y(x; y) at g: -x^j y^k Y^s_jk(g).
TangentVector yamagutian_eval(const LoopChart& loop, const TangentVector& x, const TangentVector& y,
                              std::span<const double> g);

}  // namespace moufang
