#include "moufang/residuals.hpp"

#include <algorithm>

#include "moufang/derivatives.hpp"

namespace moufang {

namespace {

Tensor3 third(const Tensor3& t) { return (1.0 / 3.0) * t; }

}  // namespace

PairTensors pair_tensors(const LoopChart& loop, std::span<const double> g, std::span<const double> h) {
  PairTensors p;
  p.g = LoopPoint({g.begin(), g.end()});
  p.h = LoopPoint({h.begin(), h.end()});
  p.gh = loop.multiply(p.g, p.h);
  p.jac_g = jacobian_g(loop, g, h);
  p.jac_h = jacobian_h(loop, g, h);
  p.at_g = point_tensors(loop, g);
  p.at_h = point_tensors(loop, h);
  p.at_gh = point_tensors(loop, p.gh);
  return p;
}

double max_abs(const MatrixTriple& t) { return std::max({max_abs(t.a), max_abs(t.b), max_abs(t.c)}); }
double max_abs(const TensorTriple& t) { return std::max({max_abs(t.a), max_abs(t.b), max_abs(t.c)}); }

MatrixTriple residual_gle(const PairTensors& p) {
  const AuxTensors& g = p.at_g.aux;
  const AuxTensors& h = p.at_h.aux;
  const AuxTensors& gh = p.at_gh.aux;
  return {matmul(p.jac_g, g.w) + matmul(p.jac_h, h.u) + gh.u,
          matmul(p.jac_g, g.v) + matmul(p.jac_h, h.w) + gh.v,
          matmul(p.jac_g, g.u) + matmul(p.jac_h, h.v) + gh.w};
}

MatrixTriple residual_gle(const LoopChart& loop, std::span<const double> g, std::span<const double> h) {
  return residual_gle(pair_tensors(loop, g, h));
}

Matrix residual_constraint(const AuxTensors& aux) { return aux.u + aux.v + aux.w; }

TensorTriple residual_mc(const PointTensors& t, const StructureConstants& c) {
  const SecondaryTensors& s = t.secondary;
  return {s.u_jk + contract_bracket(c.c, t.aux.u) - 2.0 * s.lr_jk,
          s.v_jk - contract_bracket(c.c, t.aux.v) - 2.0 * s.rl_jk,
          s.lr_jk - s.rl_jk};
}

TensorTriple residual_mc(const LoopChart& loop, std::span<const double> g, const StructureConstants& c) {
  return residual_mc(point_tensors(loop, g), c);
}

TensorTriple residual_lryam(const PointTensors& t, const StructureConstants& c) {
  const SecondaryTensors& s = t.secondary;
  const Tensor3 cu = contract_bracket(c.c, t.aux.u);
  const Tensor3 cv = contract_bracket(c.c, t.aux.v);
  return {s.u_jk - 2.0 * s.y_jk + third(cu + 2.0 * cv),
          s.lr_jk - s.y_jk - third(cu - cv),
          s.v_jk - 2.0 * s.y_jk - third(2.0 * cu + cv)};
}

TensorTriple residual_lryam(const LoopChart& loop, std::span<const double> g, const StructureConstants& c) {
  return residual_lryam(point_tensors(loop, g), c);
}

TensorTriple residual_lemma(const PointTensors& t, const StructureConstants& c, Sign lemma_sign) {
  const SecondaryTensors& s = t.secondary;
  const double sigma = factor(lemma_sign);
  const Tensor3 cu = contract_bracket(c.c, t.aux.u);
  const Tensor3 cv = contract_bracket(c.c, t.aux.v);
  return {s.u_jk - 2.0 * s.y_jk - sigma * third(cu + 2.0 * cv),
          s.v_jk - 2.0 * s.y_jk + sigma * third(2.0 * cu + cv),
          s.w_jk - 2.0 * s.y_jk - sigma * third(cu - cv)};
}

TensorTriple residual_lemma(const LoopChart& loop, std::span<const double> g, const StructureConstants& c,
                            Sign lemma_sign) {
  return residual_lemma(point_tensors(loop, g), c, lemma_sign);
}

TensorTriple residual_gle2(const PairTensors& p) {
  const SecondaryTensors& g = p.at_g.secondary;
  const SecondaryTensors& h = p.at_h.secondary;
  const SecondaryTensors& gh = p.at_gh.secondary;
  return {push_forward(p.jac_g, g.w_jk) + push_forward(p.jac_h, h.u_jk) - gh.u_jk,
          push_forward(p.jac_g, g.v_jk) + push_forward(p.jac_h, h.w_jk) - gh.v_jk,
          push_forward(p.jac_g, g.u_jk) + push_forward(p.jac_h, h.v_jk) - gh.w_jk};
}

TensorTriple residual_gle2(const LoopChart& loop, std::span<const double> g, std::span<const double> h) {
  return residual_gle2(pair_tensors(loop, g, h));
}

Tensor3 residual_integrability(const PairTensors& p) {
  return push_forward(p.jac_g, p.at_g.secondary.y_jk) + push_forward(p.jac_h, p.at_h.secondary.y_jk) -
         p.at_gh.secondary.y_jk;
}

Tensor3 residual_integrability(const LoopChart& loop, std::span<const double> g, std::span<const double> h) {
  return residual_integrability(pair_tensors(loop, g, h));
}

EquivalenceGap theorem_equivalence_gap(const PairTensors& p) {
  const Tensor3 twice = 2.0 * residual_integrability(p);
  const TensorTriple second = residual_gle2(p);
  return {max_abs(twice - second.a), max_abs(twice - second.b), max_abs(twice - second.c)};
}

}  // namespace moufang
