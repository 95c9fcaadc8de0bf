#pragma once

// Local analytic loops in charts centered at the identity (the origin).

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moufang/jet.hpp"

namespace moufang {

/// Chart coordinates of a loop element; the identity is the origin.
struct LoopPoint {
  std::vector<double> coords;

  LoopPoint() = default;
  explicit LoopPoint(std::vector<double> c) : coords(std::move(c)) {}
  static LoopPoint identity(std::size_t n) { return LoopPoint(std::vector<double>(n, 0.0)); }

  std::size_t size() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  operator std::span<const double>() const { return coords; }  // NOLINT

  bool operator==(const LoopPoint&) const = default;
};

/// A dimension plus a smooth multiplication on chart coordinates, evaluable
/// over double, Dual<double> and HyperDual. Immutable after construction.
class LoopChart {
 public:
  virtual ~LoopChart() = default;

  /// The loop-spec string this chart was built from.
  virtual const std::string& spec() const = 0;
  virtual std::size_t dim() const = 0;
  /// True for the unit-sphere charts of composition algebras (|coords| < 1).
  virtual bool is_sphere_chart() const { return false; }

  /// Throws DomainError if `p` lies outside the chart.
  virtual void check_domain(std::span<const double> p) const;

  std::vector<double> multiply(std::span<const double> g, std::span<const double> h) const;
  std::vector<Dual<double>> multiply(std::span<const Dual<double>> g, std::span<const Dual<double>> h) const;
  std::vector<HyperDual> multiply(std::span<const HyperDual> g, std::span<const HyperDual> h) const;

  LoopPoint multiply(const LoopPoint& g, const LoopPoint& h) const {
    return LoopPoint(multiply(std::span<const double>(g.coords), std::span<const double>(h.coords)));
  }

 protected:
  virtual void apply(std::span<const double> g, std::span<const double> h, std::span<double> out) const = 0;
  virtual void apply(std::span<const Dual<double>> g, std::span<const Dual<double>> h,
                     std::span<Dual<double>> out) const = 0;
  virtual void apply(std::span<const HyperDual> g, std::span<const HyperDual> h,
                     std::span<HyperDual> out) const = 0;

 private:
  template <class S>
  std::vector<S> multiply_checked(std::span<const S> g, std::span<const S> h) const;
};

using LoopChartPtr = std::shared_ptr<const LoopChart>;

/// Builds a chart from a loop-spec string:
///   abelian:n=<k>   (R^k, +), 1 <= k <= 7
///   affine          m((a1,b1),(a2,b2)) = (a1+a2, b1+e^{a1} b2)
///   quaternion      unit quaternions, orthographic chart on the imaginary part
///   octonion        unit octonions, same chart
///   broken:eps=<e>  octonion chart with e*(g^1)^2 (h^1)^2 added to the first output
/// Throws UsageError for unknown names or malformed parameters.
LoopChartPtr builtin(std::string_view spec);

/// The names accepted by builtin(), with default parameters filled in.
std::vector<std::string> builtin_examples();

/// Orthographic sphere chart product for k = 2 (quaternions, R^3) or k = 3
/// (octonions, R^7).
std::vector<double> sphere_chart_multiply(int k, std::span<const double> x, std::span<const double> y);

/// m(m(g,h), m(k,g)) - m(g, m(m(h,k), g)), componentwise.
std::vector<double> moufang_residual(const LoopChart& loop, std::span<const double> g, std::span<const double> h,
                                     std::span<const double> k);

/// Adapts a chart to the callable shape lift_map and fd_oracle expect.
inline auto chart_map(const LoopChart& loop) {
  return [&loop](auto g, auto h) { return loop.multiply(g, h); };
}

}  // namespace moufang
