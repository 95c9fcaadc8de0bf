#pragma once

// Forward-mode jets.
//
// Dual<T> carries one directional derivative. HyperDual carries two seeded
// directions and their mixed second derivative; every arithmetic rule treats
// the two directions symmetrically, so swapping the seeds swaps d1/d2 and
// leaves d12 bit-identical. The value component of every rule is computed
// exactly as the plain double operation would be.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "moufang/errors.hpp"

namespace moufang {

template <class T>
struct Dual {
  T value{};
  T deriv{};

  constexpr Dual() = default;
  constexpr Dual(double c) : value(c), deriv(0.0) {}  // NOLINT: constants lift implicitly
  constexpr Dual(T v, T d) : value(v), deriv(d) {}

  friend constexpr Dual operator+(const Dual& a, const Dual& b) {
    return {a.value + b.value, a.deriv + b.deriv};
  }
  friend constexpr Dual operator-(const Dual& a, const Dual& b) {
    return {a.value - b.value, a.deriv - b.deriv};
  }
  friend constexpr Dual operator-(const Dual& a) { return {-a.value, -a.deriv}; }
  friend constexpr Dual operator*(const Dual& a, const Dual& b) {
    return {a.value * b.value, a.deriv * b.value + a.value * b.deriv};
  }
  friend constexpr Dual operator/(const Dual& a, const Dual& b) {
    T q = a.value / b.value;
    return {q, (a.deriv - q * b.deriv) / b.value};
  }
  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
};

struct HyperDual {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d12 = 0.0;

  constexpr HyperDual() = default;
  constexpr HyperDual(double c) : value(c) {}  // NOLINT: constants lift implicitly
  constexpr HyperDual(double v, double a, double b, double ab) : value(v), d1(a), d2(b), d12(ab) {}

  friend constexpr HyperDual operator+(const HyperDual& a, const HyperDual& b) {
    return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2, a.d12 + b.d12};
  }
  friend constexpr HyperDual operator-(const HyperDual& a, const HyperDual& b) {
    return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2, a.d12 - b.d12};
  }
  friend constexpr HyperDual operator-(const HyperDual& a) { return {-a.value, -a.d1, -a.d2, -a.d12}; }
  friend constexpr HyperDual operator*(const HyperDual& a, const HyperDual& b) {
    return {a.value * b.value, a.d1 * b.value + a.value * b.d1, a.d2 * b.value + a.value * b.d2,
            (a.d12 * b.value + a.value * b.d12) + (a.d1 * b.d2 + a.d2 * b.d1)};
  }
  friend constexpr HyperDual operator/(const HyperDual& a, const HyperDual& b) {
    const double q = a.value / b.value;
    const double q1 = (a.d1 - q * b.d1) / b.value;
    const double q2 = (a.d2 - q * b.d2) / b.value;
    const double q12 = (a.d12 - q * b.d12 - (q1 * b.d2 + q2 * b.d1)) / b.value;
    return {q, q1, q2, q12};
  }
  HyperDual& operator+=(const HyperDual& o) { return *this = *this + o; }
  HyperDual& operator-=(const HyperDual& o) { return *this = *this - o; }
  HyperDual& operator*=(const HyperDual& o) { return *this = *this * o; }
};

inline double value_of(double x) { return x; }
template <class T>
double value_of(const Dual<T>& x) {
  return value_of(x.value);
}
inline double value_of(const HyperDual& x) { return x.value; }

inline double exp(double x) { return std::exp(x); }
template <class T>
Dual<T> exp(const Dual<T>& x) {
  using moufang::exp;
  T e = exp(x.value);
  return {e, x.deriv * e};
}
inline HyperDual exp(const HyperDual& x) {
  const double e = std::exp(x.value);
  return {e, e * x.d1, e * x.d2, e * (x.d12 + x.d1 * x.d2)};
}

namespace detail {
inline double sqrt_unchecked(double x) { return std::sqrt(x); }
template <class T>
Dual<T> sqrt_unchecked(const Dual<T>& x) {
  T s = sqrt_unchecked(x.value);
  return {s, x.deriv / (s + s)};
}
inline HyperDual sqrt_unchecked(const HyperDual& x) {
  const double s = std::sqrt(x.value);
  const double two_s = s + s;
  return {s, x.d1 / two_s, x.d2 / two_s, (x.d12 - (x.d1 * x.d2) / (two_s * s)) / two_s};
}
}  // namespace detail

/// Square root restricted to its smooth range; a nonpositive argument raises
/// DomainError (the caller attaches the evaluation point).
template <class S>
S checked_sqrt(const S& x) {
  if (!(value_of(x) > 0.0))
    throw DomainError("sqrt of nonpositive value " + std::to_string(value_of(x)));
  return detail::sqrt_unchecked(x);
}

enum class Argument { first, second };

struct DerivativeRequest {
  Argument argument = Argument::first;
  std::vector<std::size_t> indices;
  int order = 1;
};

/// Value plus derivatives along the requested directions. `second` is a
/// row-major k x k matrix over direction pairs; both orders are computed.
struct Jet2Scalar {
  double value = 0.0;
  std::vector<double> first;
  std::vector<double> second;

  double second_at(std::size_t a, std::size_t b) const { return second[a * first.size() + b]; }
};

void validate(const DerivativeRequest& request, std::size_t argument_dim);

namespace detail {

std::vector<double> concat(std::span<const double> g, std::span<const double> h);

template <class S, class Map>
std::vector<S> eval_seeded(const Map& map, std::span<const double> g, std::span<const double> h,
                           Argument arg, auto&& seed) {
  std::vector<S> gs(g.begin(), g.end());
  std::vector<S> hs(h.begin(), h.end());
  seed(arg == Argument::first ? gs : hs);
  return map(std::span<const S>(gs), std::span<const S>(hs));
}

}  // namespace detail

/// A chart map lifted to jets. The wrapped map is any callable
/// `map(span<const S> g, span<const S> h) -> vector<S>` for S in
/// {double, Dual<double>, HyperDual}.
template <class Map>
class LiftedMap {
 public:
  LiftedMap(Map map, DerivativeRequest request) : map_(std::move(map)), request_(std::move(request)) {
    if (request_.order != 1 && request_.order != 2)
      throw UsageError("derivative order must be 1 or 2, got " + std::to_string(request_.order));
  }

  const DerivativeRequest& request() const { return request_; }

  std::vector<Jet2Scalar> operator()(std::span<const double> g, std::span<const double> h) const {
    validate(request_, request_.argument == Argument::first ? g.size() : h.size());
    try {
      return request_.order == 1 ? first_order(g, h) : second_order(g, h);
    } catch (const DomainError& e) {
      if (!e.point().empty()) throw;
      throw DomainError(e.what(), detail::concat(g, h));
    }
  }

 private:
  std::vector<Jet2Scalar> first_order(std::span<const double> g, std::span<const double> h) const {
    const auto& idx = request_.indices;
    const std::size_t k = idx.size();
    std::vector<Jet2Scalar> out;
    auto init = [&](std::size_t m) {
      out.assign(m, Jet2Scalar{});
      for (auto& j : out) j.first.assign(k, 0.0);
    };
    if (k == 0) {
      auto y = detail::eval_seeded<Dual<double>>(map_, g, h, request_.argument, [](auto&) {});
      init(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) out[i].value = y[i].value;
      return out;
    }
    for (std::size_t a = 0; a < k; ++a) {
      auto y = detail::eval_seeded<Dual<double>>(map_, g, h, request_.argument,
                                                 [&](auto& xs) { xs[idx[a]].deriv = 1.0; });
      if (a == 0) init(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) {
        out[i].value = y[i].value;
        out[i].first[a] = y[i].deriv;
      }
    }
    return out;
  }

  std::vector<Jet2Scalar> second_order(std::span<const double> g, std::span<const double> h) const {
    const auto& idx = request_.indices;
    const std::size_t k = idx.size();
    std::vector<Jet2Scalar> out;
    auto init = [&](std::size_t m) {
      out.assign(m, Jet2Scalar{});
      for (auto& j : out) {
        j.first.assign(k, 0.0);
        j.second.assign(k * k, 0.0);
      }
    };
    if (k == 0) {
      auto y = detail::eval_seeded<HyperDual>(map_, g, h, request_.argument, [](auto&) {});
      init(y.size());
      for (std::size_t i = 0; i < y.size(); ++i) out[i].value = y[i].value;
      return out;
    }
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        auto y = detail::eval_seeded<HyperDual>(map_, g, h, request_.argument, [&](auto& xs) {
          xs[idx[a]].d1 += 1.0;
          xs[idx[b]].d2 += 1.0;
        });
        if (a == 0 && b == 0) init(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) {
          out[i].value = y[i].value;
          if (b == 0) out[i].first[a] = y[i].d1;
          out[i].second[a * k + b] = y[i].d12;
        }
      }
    return out;
  }

  Map map_;
  DerivativeRequest request_;
};

template <class Map>
LiftedMap<Map> lift_map(Map map, DerivativeRequest request) {
  return LiftedMap<Map>(std::move(map), std::move(request));
}

inline constexpr double kFdStepOrder1 = 1e-5;
inline constexpr double kFdStepOrder2 = 1e-4;

/// Central-difference estimate of what lift_map computes. `step` <= 0 selects
/// the default for the requested order; otherwise it must lie in (0, 1e-2].
template <class Map>
std::vector<Jet2Scalar> fd_oracle(const Map& map, std::span<const double> g, std::span<const double> h,
                                  const DerivativeRequest& request, double step = 0.0) {
  if (request.order != 1 && request.order != 2)
    throw UsageError("derivative order must be 1 or 2, got " + std::to_string(request.order));
  validate(request, request.argument == Argument::first ? g.size() : h.size());
  if (step == 0.0) step = request.order == 1 ? kFdStepOrder1 : kFdStepOrder2;
  if (!(step > 0.0 && step <= 1e-2)) throw UsageError("finite-difference step must lie in (0, 1e-2]");

  const auto& idx = request.indices;
  const std::size_t k = idx.size();
  std::vector<double> gv(g.begin(), g.end());
  std::vector<double> hv(h.begin(), h.end());
  std::vector<double>& x = request.argument == Argument::first ? gv : hv;

  auto eval = [&]() {
    try {
      return map(std::span<const double>(gv), std::span<const double>(hv));
    } catch (const DomainError& e) {
      if (!e.point().empty()) throw;
      throw DomainError(e.what(), detail::concat(gv, hv));
    }
  };
  auto shifted = [&](std::size_t a, double da, std::size_t b, double db) {
    const double xa = x[idx[a]];
    const double xb = x[idx[b]];
    x[idx[a]] += da;
    x[idx[b]] += db;
    auto y = eval();
    x[idx[a]] = xa;
    x[idx[b]] = xb;
    return y;
  };

  const auto center = eval();
  std::vector<Jet2Scalar> out(center.size());
  for (std::size_t i = 0; i < center.size(); ++i) {
    out[i].value = center[i];
    out[i].first.assign(k, 0.0);
    if (request.order == 2) out[i].second.assign(k * k, 0.0);
  }
  for (std::size_t a = 0; a < k; ++a) {
    const auto plus = shifted(a, step, a, 0.0);
    const auto minus = shifted(a, -step, a, 0.0);
    for (std::size_t i = 0; i < center.size(); ++i) {
      out[i].first[a] = (plus[i] - minus[i]) / (2.0 * step);
      if (request.order == 2) out[i].second[a * k + a] = (plus[i] - 2.0 * center[i] + minus[i]) / (step * step);
    }
  }
  if (request.order == 2) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        if (a == b) continue;
        if (idx[a] == idx[b]) {
          for (std::size_t i = 0; i < center.size(); ++i) out[i].second[a * k + b] = out[i].second[a * k + a];
          continue;
        }
        const auto pp = shifted(a, step, b, step);
        const auto pm = shifted(a, step, b, -step);
        const auto mp = shifted(a, -step, b, step);
        const auto mm = shifted(a, -step, b, -step);
        for (std::size_t i = 0; i < center.size(); ++i)
          out[i].second[a * k + b] = ((pp[i] - pm[i]) - (mp[i] - mm[i])) / (4.0 * step * step);
      }
  }
  return out;
}

}  // namespace moufang
