#pragma once

// Residual tensors of the differential identities of a Moufang loop, all in
// coefficient form. Every residual vanishes identically on a Moufang loop.

#include <span>

#include "moufang/loop.hpp"
#include "moufang/tensor.hpp"
#include "moufang/tensors.hpp"

namespace moufang {

/// Everything the two-point identities need at (g, h): both Jacobians of the
/// product and the point tensors at g, h and gh.
struct PairTensors {
  LoopPoint g, h, gh;
  Matrix jac_g, jac_h;
  PointTensors at_g, at_h, at_gh;
};

PairTensors pair_tensors(const LoopChart& loop, std::span<const double> g, std::span<const double> h);

struct MatrixTriple {
  Matrix a, b, c;
};

struct TensorTriple {
  Tensor3 a, b, c;
};

double max_abs(const MatrixTriple& t);
double max_abs(const TensorTriple& t);

/// First-order equations
///   a: w(g) Jg + u(h) Jh + u(gh)
///   b: v(g) Jg + w(h) Jh + v(gh)
///   c: u(g) Jg + v(h) Jh + w(gh)
/// where X(g) Jg means J^i_s X^s_j with J = d(gh)/dg.
MatrixTriple residual_gle(const PairTensors& p);
MatrixTriple residual_gle(const LoopChart& loop, std::span<const double> g, std::span<const double> h);

/// u + v + w at a point.
Matrix residual_constraint(const AuxTensors& aux);

/// Commutator relations between left and right translation fields:
///   a: u_jk + C.u - 2 lr      ([L_x,L_y] = L_[x,y] - 2[L_x,R_y])
///   b: v_jk - C.v - 2 rl      ([R_x,R_y] = R_[y,x] - 2[R_x,L_y])
///   c: lr - rl                ([L_x,R_y] = [R_x,L_y])
/// with (C.a)^s_jk = C^p_jk a^s_p.
TensorTriple residual_mc(const PointTensors& t, const StructureConstants& c);
TensorTriple residual_mc(const LoopChart& loop, std::span<const double> g, const StructureConstants& c);

/// Decomposition of the commutators through the Yamagutian:
///   a: u_jk - 2y + (1/3) C.(u + 2v)
///   b: lr   -  y - (1/3) C.(u - v)
///   c: v_jk - 2y - (1/3) C.(2u + v)
TensorTriple residual_lryam(const PointTensors& t, const StructureConstants& c);
TensorTriple residual_lryam(const LoopChart& loop, std::span<const double> g, const StructureConstants& c);

/// Secondary functions in terms of y_jk, with the C-terms scaled by `lemma_sign`
/// relative to their printed form:
///   a: u_jk - 2y - s (1/3) C.(u + 2v)
///   b: v_jk - 2y + s (1/3) C.(2u + v)
///   c: w_jk - 2y - s (1/3) C.(u - v)
TensorTriple residual_lemma(const PointTensors& t, const StructureConstants& c, Sign lemma_sign);
TensorTriple residual_lemma(const LoopChart& loop, std::span<const double> g, const StructureConstants& c,
                            Sign lemma_sign);

/// Second-order equations
///   a: w_jk(g) Jg + u_jk(h) Jh - u_jk(gh)
///   b: v_jk(g) Jg + w_jk(h) Jh - v_jk(gh)
///   c: u_jk(g) Jg + v_jk(h) Jh - w_jk(gh)
TensorTriple residual_gle2(const PairTensors& p);
TensorTriple residual_gle2(const LoopChart& loop, std::span<const double> g, std::span<const double> h);

/// Integrability condition Y_jk(g) Jg + Y_jk(h) Jh - Y_jk(gh). The h-term is
/// contracted with d(gh)/dh.
Tensor3 residual_integrability(const PairTensors& p);
Tensor3 residual_integrability(const LoopChart& loop, std::span<const double> g, std::span<const double> h);

/// max |2 R - G| for each second-order residual G against the integrability
/// residual R.
struct EquivalenceGap {
  double a = 0.0, b = 0.0, c = 0.0;
};
EquivalenceGap theorem_equivalence_gap(const PairTensors& p);

}  // namespace moufang
