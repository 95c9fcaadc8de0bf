#include "moufang/tensors.hpp"

#include "moufang/derivatives.hpp"
#include "moufang/errors.hpp"

namespace moufang {

namespace {

// Antisymmetrized transport  T^s_jk = a^p_k d_p b^s_j - a^p_j d_p b^s_k,
// with db(s, j, p) = d_p b^s_j. Exactly antisymmetric in (j, k).
Tensor3 antisymmetrized(const Matrix& a, const Tensor3& db) {
  const std::size_t n = a.dim();
  Tensor3 half(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t p = 0; p < n; ++p) acc += a(p, k) * db(s, j, p);
        half(s, j, k) = acc;
      }
  Tensor3 out(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out(s, j, k) = half(s, j, k) - half(s, k, j);
  return out;
}

// (X_j applied to b_k) - (Y_k applied to a_j):  a^p_j d_p b^s_k - b^p_k d_p a^s_j.
Tensor3 mixed_commutator(const Matrix& a, const Tensor3& da, const Matrix& b, const Tensor3& db) {
  const std::size_t n = a.dim();
  Tensor3 out(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        double lhs = 0.0;
        double rhs = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
          lhs += a(p, j) * db(s, k, p);
          rhs += b(p, k) * da(s, j, p);
        }
        out(s, j, k) = lhs - rhs;
      }
  return out;
}

void check_tangent(const LoopChart& loop, const TangentVector& x) {
  if (x.size() != loop.dim())
    throw UsageError("tangent vector has length " + std::to_string(x.size()) + ", loop dimension is " +
                     std::to_string(loop.dim()));
}

}  // namespace

AuxTensors aux_tensors(const LoopChart& loop, std::span<const double> g) {
  const LoopPoint e = LoopPoint::identity(loop.dim());
  AuxTensors t{jacobian_g(loop, e, g), jacobian_h(loop, g, e), Matrix()};
  t.w = -(t.u + t.v);
  return t;
}

PointTensors point_tensors(const LoopChart& loop, std::span<const double> g) {
  const std::size_t n = loop.dim();
  const LoopPoint e = LoopPoint::identity(n);

  // Left slot at e: u = d m(h, g)/dh, du(s, j, p) = d^2 m^s(h, g) / dh^j dg^p.
  const CrossJet left = cross_jet(loop, e, g);
  // Right slot at e: v = d m(g, h)/dh, dv(s, j, p) = d^2 m^s(g, h) / dg^p dh^j.
  const CrossJet right = cross_jet(loop, g, e);

  PointTensors out;
  AuxTensors& aux = out.aux;
  aux.u = left.jac_g;
  aux.v = right.jac_h;
  aux.w = -(aux.u + aux.v);

  const Tensor3& du = left.mixed;
  Tensor3 dv(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) dv(s, j, p) = right.mixed(s, p, j);
  const Tensor3 dw = -(du + dv);

  SecondaryTensors& sec = out.secondary;
  sec.u_jk = antisymmetrized(aux.u, du);
  sec.v_jk = antisymmetrized(aux.v, dv);
  sec.w_jk = antisymmetrized(aux.w, dw);
  sec.y_jk = (1.0 / 6.0) * (sec.u_jk + sec.v_jk + sec.w_jk);
  sec.lr_jk = mixed_commutator(aux.u, du, aux.v, dv);
  sec.rl_jk = mixed_commutator(aux.v, dv, aux.u, du);
  return out;
}

SecondaryTensors secondary_tensors(const LoopChart& loop, std::span<const double> g) {
  return point_tensors(loop, g).secondary;
}

StructureConstants structure_constants(const LoopChart& loop, Sign bracket_sign) {
  const std::size_t n = loop.dim();
  const LoopPoint e = LoopPoint::identity(n);
  const Tensor3 a = cross_jet(loop, e, e).mixed;
  const double sigma = factor(bracket_sign);
  StructureConstants sc{Tensor3(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sc.c(i, j, k) = sigma * (a(i, k, j) - a(i, j, k));
  return sc;
}

TangentVector field_eval(const LoopChart& loop, Translation which, const TangentVector& x,
                         std::span<const double> g) {
  check_tangent(loop, x);
  const AuxTensors aux = aux_tensors(loop, g);
  const Matrix& m = which == Translation::left ? aux.u : which == Translation::right ? aux.v : aux.w;
  const std::size_t n = loop.dim();
  TangentVector out{std::vector<double>(n, 0.0)};
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < n; ++j) out.components[s] += x[j] * m(s, j);
  return out;
}

TangentVector yamagutian_eval(const LoopChart& loop, const TangentVector& x, const TangentVector& y,
                              std::span<const double> g) {
  check_tangent(loop, x);
  check_tangent(loop, y);
  const Tensor3 yam = secondary_tensors(loop, g).y_jk;
  const std::size_t n = loop.dim();
  TangentVector out{std::vector<double>(n, 0.0)};
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.components[s] -= x[j] * y[k] * yam(s, j, k);
  return out;
}

}  // namespace moufang
