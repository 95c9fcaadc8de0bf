#include <doctest.h>

#include <cmath>
#include <random>

#include "moufang/errors.hpp"
#include "moufang/tensors.hpp"
#include "support/oracles.hpp"

using namespace moufang;
using moufang::testing::random_ball;
using moufang::testing::Vec;

namespace {

bool antisymmetric_exact(const Tensor3& t) {
  for (std::size_t s = 0; s < t.dim(); ++s)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (std::size_t k = 0; k < t.dim(); ++k)
        if (t(s, j, k) != -t(s, k, j)) return false;
  return true;
}

TangentVector basis(std::size_t n, std::size_t j) {
  TangentVector x{std::vector<double>(n, 0.0)};
  x.components[j] = 1.0;
  return x;
}

}  // namespace

TEST_SUITE("moufang-tensors") {
  TEST_CASE("boundary values at the identity") {
    for (const auto& spec : builtin_examples()) {
      CAPTURE(spec);
      const auto loop = builtin(spec);
      const std::size_t n = loop->dim();
      const AuxTensors t = aux_tensors(*loop, LoopPoint::identity(n));
      CHECK(max_abs(t.u - Matrix::identity(n)) <= 1e-14);
      CHECK(max_abs(t.v - Matrix::identity(n)) <= 1e-14);
      CHECK(max_abs(t.w + 2.0 * Matrix::identity(n)) <= 1e-14);
    }
  }

  TEST_CASE("abelian tensors are constant and secondaries vanish") {
    const auto loop = builtin("abelian:n=4");
    const std::vector<double> g{0.3, -0.1, 0.2, 0.05};
    const AuxTensors t = aux_tensors(*loop, g);
    CHECK(t.u == Matrix::identity(4));
    CHECK(t.v == Matrix::identity(4));
    CHECK(t.w == -2.0 * Matrix::identity(4));
    const SecondaryTensors s = secondary_tensors(*loop, g);
    for (const Tensor3* x : {&s.u_jk, &s.v_jk, &s.w_jk, &s.y_jk, &s.lr_jk, &s.rl_jk}) CHECK(max_abs(*x) == 0.0);
    CHECK(max_abs(structure_constants(*loop).c) == 0.0);
  }

  TEST_CASE("affine auxiliary functions match hand differentiation") {
    const auto loop = builtin("affine");
    const double a = 0.25, b = -0.4;
    const std::vector<double> g{a, b};
    const AuxTensors t = aux_tensors(*loop, g);
    // m(h, g) = (h_a + a, h_b + e^{h_a} b): d/dh at h = 0 -> [[1, 0], [b, 1]].
    CHECK(t.u(0, 0) == 1.0);
    CHECK(t.u(0, 1) == 0.0);
    CHECK(t.u(1, 0) == doctest::Approx(b));
    CHECK(t.u(1, 1) == 1.0);
    // m(g, h) = (a + h_a, b + e^a h_b) -> [[1, 0], [0, e^a]].
    CHECK(t.v(0, 0) == 1.0);
    CHECK(t.v(0, 1) == 0.0);
    CHECK(t.v(1, 0) == 0.0);
    CHECK(t.v(1, 1) == doctest::Approx(std::exp(a)));

    // Finite-difference cross-check of u through the product map.
    const Vec col0 = moufang::testing::fd4_partial(
        [&](const Vec& h) { return loop->multiply(std::span<const double>(h), std::span<const double>(g)); },
        Vec{0.0, 0.0}, 0);
    CHECK(col0[1] == doctest::Approx(b).epsilon(1e-10));
  }

  TEST_CASE("affine structure constants") {
    const auto c = structure_constants(*builtin("affine")).c;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) {
          const double expected = (i == 1 && j == 0 && k == 1) ? -1.0 : (i == 1 && j == 1 && k == 0) ? 1.0 : 0.0;
          CHECK(c(i, j, k) == expected);
        }
    const auto flipped = structure_constants(*builtin("affine"), Sign::minus).c;
    CHECK(flipped == -c);
  }

  TEST_CASE("quaternion structure constants are -2 epsilon") {
    const auto c = structure_constants(*builtin("quaternion")).c;
    CHECK(antisymmetric_exact(c));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          CHECK(std::abs(c(i, j, k) + 2.0 * moufang::testing::levi_civita(i, j, k)) <= 1e-10);

    // C^i_jk x^j y^k = -(xy - yx)_i for pure imaginary x, y: (xy - yx) = 2 x cross y.
    const Vec x{0.3, -0.2, 0.5}, y{-0.1, 0.4, 0.2};
    const Vec cr = moufang::testing::cross3(x, y);
    for (std::size_t i = 0; i < 3; ++i) {
      double contracted = 0.0;
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) contracted += c(i, j, k) * x[j] * y[k];
      CHECK(contracted == doctest::Approx(-2.0 * cr[i]).epsilon(1e-12));
    }
  }

  TEST_CASE("octonion structure constants are exactly antisymmetric and nonzero") {
    const auto c = structure_constants(*builtin("octonion")).c;
    CHECK(antisymmetric_exact(c));
    CHECK(max_abs(c) == doctest::Approx(2.0));
  }

  TEST_CASE("secondary tensors: antisymmetry and the Yamaguti sum") {
    std::mt19937_64 rng(8);
    for (const auto& spec : builtin_examples()) {
      CAPTURE(spec);
      const auto loop = builtin(spec);
      for (int trial = 0; trial < 10; ++trial) {
        const auto g = random_ball(rng, loop->dim(), 0.2);
        const SecondaryTensors s = secondary_tensors(*loop, g);
        CHECK(antisymmetric_exact(s.u_jk));
        CHECK(antisymmetric_exact(s.v_jk));
        CHECK(antisymmetric_exact(s.w_jk));
        CHECK(antisymmetric_exact(s.y_jk));
        CHECK(max_abs(6.0 * s.y_jk - (s.u_jk + s.v_jk + s.w_jk)) <= 1e-12);
      }
    }
  }

  TEST_CASE("affine u_jk is fixed by the commutator of the translation fields") {
    // U_a = d_a + b d_b, U_b = d_b: [U_a, U_b] = -d_b, and [U_j, U_k] = -u_jk.
    const auto loop = builtin("affine");
    for (const std::vector<double>& g : {std::vector<double>{0.0, 0.0}, std::vector<double>{0.2, -0.3}}) {
      const Tensor3 u = secondary_tensors(*loop, g).u_jk;
      CHECK(u(0, 0, 1) == doctest::Approx(0.0));
      CHECK(u(1, 0, 1) == doctest::Approx(1.0));
      CHECK(u(1, 1, 0) == doctest::Approx(-1.0));
    }
  }

  TEST_CASE("commutator coefficients agree with finite-difference brackets of the fields") {
    std::mt19937_64 rng(31);
    for (const char* spec : {"affine", "quaternion", "octonion", "broken:eps=0.01"}) {
      CAPTURE(spec);
      const auto loop = builtin(spec);
      const std::size_t n = loop->dim();
      const auto g = random_ball(rng, n, 0.2);
      const SecondaryTensors s = secondary_tensors(*loop, g);
      auto field = [&](Translation which, std::size_t j) {
        return [&, which, j](const Vec& p) { return field_eval(*loop, which, basis(n, j), p).components; };
      };
      double worst = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const Vec ll = moufang::testing::fd_field_bracket(field(Translation::left, j), field(Translation::left, k), g);
          const Vec rr =
              moufang::testing::fd_field_bracket(field(Translation::right, j), field(Translation::right, k), g);
          const Vec mm =
              moufang::testing::fd_field_bracket(field(Translation::middle, j), field(Translation::middle, k), g);
          const Vec lr =
              moufang::testing::fd_field_bracket(field(Translation::left, j), field(Translation::right, k), g);
          const Vec rl =
              moufang::testing::fd_field_bracket(field(Translation::right, j), field(Translation::left, k), g);
          for (std::size_t q = 0; q < n; ++q) {
            worst = std::max(worst, std::abs(ll[q] + s.u_jk(q, j, k)));
            worst = std::max(worst, std::abs(rr[q] + s.v_jk(q, j, k)));
            worst = std::max(worst, std::abs(mm[q] + s.w_jk(q, j, k)));
            worst = std::max(worst, std::abs(lr[q] - s.lr_jk(q, j, k)));
            worst = std::max(worst, std::abs(rl[q] - s.rl_jk(q, j, k)));
          }
        }
      CHECK(worst <= 1e-9);
    }
  }

  TEST_CASE("field_eval") {
    const auto oct = builtin("octonion");
    const TangentVector x{{0.3, -0.1, 0.2, 0.0, 0.5, -0.4, 0.1}};
    const LoopPoint e = LoopPoint::identity(7);
    CHECK(field_eval(*oct, Translation::left, x, e).components == x.components);

    const std::vector<double> g{0.1, 0.05, -0.1, 0.02, 0.0, 0.03, -0.07};
    const auto l = field_eval(*oct, Translation::left, x, g).components;
    const auto r = field_eval(*oct, Translation::right, x, g).components;
    const auto m = field_eval(*oct, Translation::middle, x, g).components;
    for (std::size_t i = 0; i < 7; ++i) CHECK(std::abs(m[i] + l[i] + r[i]) <= 1e-15);

    const auto ab = builtin("abelian:n=2");
    const TangentVector y{{0.5, -1.5}};
    const auto mab = field_eval(*ab, Translation::middle, y, std::vector<double>{0.3, 0.1}).components;
    CHECK(mab == std::vector<double>{-1.0, 3.0});

    CHECK_THROWS_AS(field_eval(*ab, Translation::left, x, std::vector<double>{0.0, 0.0}), UsageError);
  }

  TEST_CASE("Yamagutian evaluation") {
    std::mt19937_64 rng(4);
    const auto oct = builtin("octonion");
    const auto g = random_ball(rng, 7, 0.2);
    const TangentVector x{random_ball(rng, 7, 1.0)};
    const auto yxx = yamagutian_eval(*oct, x, x, g).components;
    for (double c : yxx) CHECK(std::abs(c) <= 1e-15);

    const auto ab = builtin("abelian:n=3");
    const TangentVector a{{1, 2, 3}}, b{{-1, 0, 2}};
    for (double c : yamagutian_eval(*ab, a, b, std::vector<double>{0.1, 0.2, 0.3}).components) CHECK(c == 0.0);

    // On a group [L_x, R_y] = 0, so 6 Y(x;y) = 2 (L_[x,y] - R_[x,y]) with [x,y]^p = C^p_jk x^j y^k.
    const auto affine = builtin("affine");
    const auto c = structure_constants(*affine).c;
    const std::vector<double> p{0.3, -0.2};
    const TangentVector u{{0.7, -0.4}}, v{{0.2, 0.9}};
    TangentVector br{{0.0, 0.0}};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k) br.components[i] += c(i, j, k) * u[j] * v[k];
    const auto yam = yamagutian_eval(*affine, u, v, p).components;
    const auto lb = field_eval(*affine, Translation::left, br, p).components;
    const auto rb = field_eval(*affine, Translation::right, br, p).components;
    for (std::size_t i = 0; i < 2; ++i) CHECK(6.0 * yam[i] == doctest::Approx(2.0 * (lb[i] - rb[i])).epsilon(1e-12));
  }
}
