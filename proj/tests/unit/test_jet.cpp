#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "moufang/derivatives.hpp"
#include "moufang/jet.hpp"
#include "moufang/loop.hpp"
#include "support/oracles.hpp"

using namespace moufang;
using moufang::testing::close_rel;

namespace {

// f(x) = x^2 and f(x) = sqrt(x) as one-argument chart maps.
struct Square {
  template <class S>
  std::vector<S> operator()(std::span<const S> x, std::span<const S>) const {
    return {x[0] * x[0]};
  }
};
struct Root {
  template <class S>
  std::vector<S> operator()(std::span<const S> x, std::span<const S>) const {
    return {checked_sqrt(x[0])};
  }
};

// The loop product seen as a map of the concatenated argument (g, h), so that
// a single request can mix g- and h-directions.
auto joint_map(const LoopChart& loop) {
  return [&loop](auto x, auto) {
    const std::size_t n = loop.dim();
    return loop.multiply(x.subspan(0, n), x.subspan(n, n));
  };
}

std::vector<std::size_t> iota_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

const std::vector<double> kNone;

}  // namespace

TEST_SUITE("jet-calculus") {
  TEST_CASE("lift_map reproduces polynomial and root derivatives") {
    const std::vector<double> three{3.0};
    const auto sq = lift_map(Square{}, {Argument::first, {0}, 1})(three, kNone);
    CHECK(sq[0].value == 9.0);
    CHECK(sq[0].first[0] == 6.0);

    const auto sq2 = lift_map(Square{}, {Argument::first, {0}, 2})(three, kNone);
    CHECK(sq2[0].second_at(0, 0) == 2.0);

    const std::vector<double> one{1.0};
    const auto r = lift_map(Root{}, {Argument::first, {0}, 1})(one, kNone);
    CHECK(r[0].value == 1.0);
    CHECK(r[0].first[0] == 0.5);
  }

  TEST_CASE("sqrt of a nonpositive value reports the evaluation point") {
    const std::vector<double> x{-0.25};
    try {
      lift_map(Root{}, {Argument::first, {0}, 1})(x, kNone);
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      REQUIRE(e.point().size() == 1);
      CHECK(e.point()[0] == -0.25);
    }
    const std::vector<double> zero{0.0};
    CHECK_THROWS_AS(lift_map(Root{}, {Argument::first, {0}, 2})(zero, kNone), DomainError);
  }

  TEST_CASE("derivative requests are validated") {
    const std::vector<double> x{1.0};
    CHECK_THROWS_AS(lift_map(Square{}, {Argument::first, {1}, 1})(x, kNone), UsageError);
    CHECK_THROWS_AS(lift_map(Square{}, {Argument::first, {0}, 3}), UsageError);
    CHECK_THROWS_AS(fd_oracle(Square{}, x, kNone, {Argument::first, {0}, 1}, 0.5), UsageError);
    CHECK_THROWS_AS(fd_oracle(Square{}, x, kNone, {Argument::first, {0}, 1}, -1e-5), UsageError);
  }

  TEST_CASE("affine cross partial d2 m^b / da1 db2 at the identity is 1") {
    const auto affine = builtin("affine");
    const std::vector<double> origin(4, 0.0);
    // (a1, b1, a2, b2) -> indices 0 and 3.
    const auto jets = lift_map(joint_map(*affine), {Argument::first, {0, 3}, 2})(origin, kNone);
    CHECK(jets[1].second_at(0, 1) == 1.0);
    CHECK(jets[0].second_at(0, 1) == 0.0);

    const auto fd = fd_oracle(joint_map(*affine), origin, kNone, {Argument::first, {0, 3}, 2});
    CHECK(fd[1].second_at(0, 1) == doctest::Approx(1.0).epsilon(1e-6));

    const LoopPoint e = LoopPoint::identity(2);
    CHECK(cross_jet(*affine, e, e).mixed(1, 0, 1) == 1.0);
  }

  TEST_CASE("fd_oracle matches analytic derivatives") {
    const std::vector<double> three{3.0};
    const auto sq = fd_oracle(Square{}, three, kNone, {Argument::first, {0}, 1});
    CHECK(std::abs(sq[0].first[0] - 6.0) <= 1e-9);

    const std::vector<double> small{0.01};
    const auto r = fd_oracle(Root{}, small, kNone, {Argument::first, {0}, 1}, 1e-5);
    CHECK(close_rel(r[0].first[0], 5.0, 1e-5, 0.0));
  }

  TEST_CASE("Jacobians of the abelian and affine loops") {
    const auto abelian = builtin("abelian:n=3");
    const std::vector<double> g{0.1, -0.2, 0.05}, h{0.3, 0.0, -0.1};
    CHECK(jacobian_g(*abelian, g, h) == Matrix::identity(3));
    CHECK(jacobian_h(*abelian, g, h) == Matrix::identity(3));

    const auto affine = builtin("affine");
    const double a1 = 0.3, b1 = -0.2, a2 = 0.15, b2 = 0.4;
    const std::vector<double> ga{a1, b1}, ha{a2, b2};
    const Matrix jg = jacobian_g(*affine, ga, ha);
    CHECK(jg(0, 0) == 1.0);
    CHECK(jg(0, 1) == 0.0);
    CHECK(jg(1, 0) == doctest::Approx(std::exp(a1) * b2).epsilon(1e-15));
    CHECK(jg(1, 1) == 1.0);
    const Matrix jh = jacobian_h(*affine, ga, ha);
    CHECK(jh(0, 0) == 1.0);
    CHECK(jh(0, 1) == 0.0);
    CHECK(jh(1, 0) == 0.0);
    CHECK(jh(1, 1) == doctest::Approx(std::exp(a1)).epsilon(1e-15));
  }

  TEST_CASE("Jacobians at a unit are the identity on every builtin") {
    std::mt19937_64 rng(7);
    for (const auto& spec : builtin_examples()) {
      CAPTURE(spec);
      const auto loop = builtin(spec);
      const LoopPoint e = LoopPoint::identity(loop->dim());
      const auto g = moufang::testing::random_ball(rng, loop->dim(), 0.2);
      CHECK(max_abs(jacobian_g(*loop, g, e) - Matrix::identity(loop->dim())) <= 1e-15);
      CHECK(max_abs(jacobian_h(*loop, e, g) - Matrix::identity(loop->dim())) <= 1e-15);
    }
  }

  TEST_CASE("constant jets reproduce plain arithmetic exactly") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
      const double a = u(rng), b = u(rng);
      const HyperDual x(a), y(b);
      CHECK((x + y).value == a + b);
      CHECK((x - y).value == a - b);
      CHECK((x * y).value == a * b);
      CHECK((x / y).value == a / b);
      CHECK(checked_sqrt(x).value == std::sqrt(a));
      CHECK(exp(x).value == std::exp(a));
      const HyperDual q = checked_sqrt(x / y) * exp(y);
      CHECK(q.d1 == 0.0);
      CHECK(q.d2 == 0.0);
      CHECK(q.d12 == 0.0);
      const Dual<double> dx(a), dy(b);
      CHECK((dx / dy).value == a / b);
      CHECK((dx * dy).deriv == 0.0);
    }
  }

  TEST_CASE("zero active directions reproduce plain evaluation bit-for-bit") {
    std::mt19937_64 rng(3);
    for (const auto& spec : builtin_examples()) {
      CAPTURE(spec);
      const auto loop = builtin(spec);
      for (int trial = 0; trial < 20; ++trial) {
        const auto g = moufang::testing::random_ball(rng, loop->dim(), 0.2);
        const auto h = moufang::testing::random_ball(rng, loop->dim(), 0.2);
        const auto plain = loop->multiply(std::span<const double>(g), std::span<const double>(h));
        for (int order : {1, 2}) {
          const auto jets = lift_map(chart_map(*loop), {Argument::first, {}, order})(g, h);
          for (std::size_t i = 0; i < plain.size(); ++i) CHECK(jets[i].value == plain[i]);
        }
      }
    }
  }

  TEST_CASE("mixed second partials are exactly symmetric") {
    std::mt19937_64 rng(5);
    for (const auto& spec : builtin_examples()) {
      CAPTURE(spec);
      const auto loop = builtin(spec);
      const std::size_t n = loop->dim();
      const auto lifted = lift_map(joint_map(*loop), {Argument::first, iota_indices(2 * n), 2});
      for (int trial = 0; trial < 50; ++trial) {
        auto x = moufang::testing::random_ball(rng, n, 0.2);
        const auto h = moufang::testing::random_ball(rng, n, 0.2);
        x.insert(x.end(), h.begin(), h.end());
        const auto jets = lifted(x, kNone);
        bool symmetric = true;
        for (const auto& j : jets)
          for (std::size_t a = 0; a < 2 * n; ++a)
            for (std::size_t b = 0; b < a; ++b) symmetric = symmetric && j.second_at(a, b) == j.second_at(b, a);
        CHECK(symmetric);
      }
    }
  }

  TEST_CASE("jets agree with the finite-difference oracle on octonion multiplication") {
    const auto oct = builtin("octonion");
    std::mt19937_64 rng(13);
    const auto idx = iota_indices(7);
    for (int trial = 0; trial < 100; ++trial) {
      const auto g = moufang::testing::random_ball(rng, 7, 0.2);
      const auto h = moufang::testing::random_ball(rng, 7, 0.2);
      for (Argument arg : {Argument::first, Argument::second}) {
        const auto jet = lift_map(chart_map(*oct), {arg, idx, 2})(g, h);
        const auto fd1 = fd_oracle(chart_map(*oct), g, h, {arg, idx, 1});
        const auto fd2 = fd_oracle(chart_map(*oct), g, h, {arg, idx, 2});
        bool ok = true;
        for (std::size_t i = 0; i < 7; ++i) {
          for (std::size_t a = 0; a < 7; ++a) {
            ok = ok && close_rel(jet[i].first[a], fd1[i].first[a], 1e-6, 1e-8);
            for (std::size_t b = 0; b < 7; ++b)
              ok = ok && close_rel(jet[i].second_at(a, b), fd2[i].second_at(a, b), 1e-6, 1e-8);
          }
        }
        CHECK(ok);
      }
    }
  }
}
