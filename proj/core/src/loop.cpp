#include "moufang/loop.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <optional>

#include "moufang/cayley_dickson.hpp"
#include "moufang/errors.hpp"

namespace moufang {

void LoopChart::check_domain(std::span<const double> p) const {
  for (double x : p)
    if (!std::isfinite(x)) throw DomainError("non-finite chart coordinate", {p.begin(), p.end()});
}

template <class S>
std::vector<S> LoopChart::multiply_checked(std::span<const S> g, std::span<const S> h) const {
  if (g.size() != dim() || h.size() != dim())
    throw UsageError("loop '" + spec() + "' expects points of dimension " + std::to_string(dim()));
  std::vector<double> gv(g.size()), hv(h.size());
  for (std::size_t i = 0; i < g.size(); ++i) gv[i] = value_of(g[i]);
  for (std::size_t i = 0; i < h.size(); ++i) hv[i] = value_of(h[i]);
  check_domain(gv);
  check_domain(hv);
  std::vector<S> out(dim());
  try {
    apply(g, h, out);
  } catch (const DomainError& e) {
    if (!e.point().empty()) throw;
    throw DomainError(e.what(), detail::concat(gv, hv));
  }
  return out;
}

std::vector<double> LoopChart::multiply(std::span<const double> g, std::span<const double> h) const {
  return multiply_checked(g, h);
}
std::vector<Dual<double>> LoopChart::multiply(std::span<const Dual<double>> g,
                                              std::span<const Dual<double>> h) const {
  return multiply_checked(g, h);
}
std::vector<HyperDual> LoopChart::multiply(std::span<const HyperDual> g, std::span<const HyperDual> h) const {
  return multiply_checked(g, h);
}

namespace {

// Forwards the three scalar overloads to one template `eval` in Derived.
template <class Derived>
class ChartBase : public LoopChart {
 public:
  explicit ChartBase(std::string spec) : spec_(std::move(spec)) {}
  const std::string& spec() const override { return spec_; }

 protected:
  void apply(std::span<const double> g, std::span<const double> h, std::span<double> out) const override {
    self().eval(g, h, out);
  }
  void apply(std::span<const Dual<double>> g, std::span<const Dual<double>> h,
             std::span<Dual<double>> out) const override {
    self().eval(g, h, out);
  }
  void apply(std::span<const HyperDual> g, std::span<const HyperDual> h, std::span<HyperDual> out) const override {
    self().eval(g, h, out);
  }

 private:
  const Derived& self() const { return static_cast<const Derived&>(*this); }
  std::string spec_;
};

class AbelianChart final : public ChartBase<AbelianChart> {
 public:
  AbelianChart(std::string spec, std::size_t n) : ChartBase(std::move(spec)), n_(n) {}
  std::size_t dim() const override { return n_; }

  template <class S>
  void eval(std::span<const S> g, std::span<const S> h, std::span<S> out) const {
    for (std::size_t i = 0; i < n_; ++i) out[i] = g[i] + h[i];
  }

 private:
  std::size_t n_;
};

class AffineChart final : public ChartBase<AffineChart> {
 public:
  using ChartBase::ChartBase;
  std::size_t dim() const override { return 2; }

  template <class S>
  void eval(std::span<const S> g, std::span<const S> h, std::span<S> out) const {
    out[0] = g[0] + h[0];
    out[1] = g[1] + exp(g[0]) * h[1];
  }
};

// Orthographic chart x -> (sqrt(1 - |x|^2), x) on the unit sphere of a
// composition algebra of dimension N; `eps` adds the non-Moufang perturbation.
template <std::size_t N>
class SphereChart final : public ChartBase<SphereChart<N>> {
 public:
  SphereChart(std::string spec, double eps) : ChartBase<SphereChart<N>>(std::move(spec)), eps_(eps) {}
  std::size_t dim() const override { return N - 1; }
  bool is_sphere_chart() const override { return true; }

  void check_domain(std::span<const double> p) const override {
    LoopChart::check_domain(p);
    double r2 = 0.0;
    for (double x : p) r2 += x * x;
    if (!(r2 < 1.0)) throw DomainError("point outside sphere chart (|x| >= 1)", {p.begin(), p.end()});
  }

  template <class S>
  void eval(std::span<const S> g, std::span<const S> h, std::span<S> out) const {
    const auto a = embed(g);
    const auto b = embed(h);
    const auto p = cd_multiply<N>(a, b);
    if (!(value_of(p[0]) > 0.0)) throw DomainError("chart exit: product has nonpositive real part");
    for (std::size_t i = 0; i + 1 < N; ++i) out[i] = p[i + 1];
    if (eps_ != 0.0) out[0] = out[0] + S(eps_) * (g[0] * g[0]) * (h[0] * h[0]);
  }

 private:
  template <class S>
  static std::array<S, N> embed(std::span<const S> x) {
    std::array<S, N> e;
    S r = S(1.0);
    for (std::size_t i = 0; i + 1 < N; ++i) {
      r = r - x[i] * x[i];
      e[i + 1] = x[i];
    }
    e[0] = checked_sqrt(r);
    return e;
  }

  double eps_;
};

struct ParsedSpec {
  std::string name;
  std::optional<std::string> key;
  std::optional<std::string> value;
};

ParsedSpec parse_spec(std::string_view spec) {
  ParsedSpec p;
  const auto colon = spec.find(':');
  p.name = std::string(spec.substr(0, colon));
  if (colon == std::string_view::npos) return p;
  const auto rest = spec.substr(colon + 1);
  const auto eq = rest.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 == rest.size())
    throw UsageError("malformed loop spec '" + std::string(spec) + "': expected name:key=value");
  p.key = std::string(rest.substr(0, eq));
  p.value = std::string(rest.substr(eq + 1));
  return p;
}

double parse_decimal(const std::string& text, std::string_view spec) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
  if (ec != std::errc() || ptr != last || !std::isfinite(v))
    throw UsageError("malformed value '" + text + "' in loop spec '" + std::string(spec) + "'");
  return v;
}

std::size_t parse_count(const std::string& text, std::string_view spec) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw UsageError("malformed integer '" + text + "' in loop spec '" + std::string(spec) + "'");
  return v;
}

void expect_key(const ParsedSpec& p, const char* key, std::string_view spec) {
  if (!p.key) throw UsageError("loop spec '" + std::string(spec) + "' requires parameter " + key);
  if (*p.key != key)
    throw UsageError("unknown parameter '" + *p.key + "' in loop spec '" + std::string(spec) + "'");
}

void expect_no_key(const ParsedSpec& p, std::string_view spec) {
  if (p.key) throw UsageError("loop '" + p.name + "' takes no parameters: '" + std::string(spec) + "'");
}

}  // namespace

LoopChartPtr builtin(std::string_view spec) {
  const ParsedSpec p = parse_spec(spec);
  std::string s(spec);
  if (p.name == "abelian") {
    expect_key(p, "n", spec);
    const std::size_t n = parse_count(*p.value, spec);
    if (n < 1 || n > 7) throw UsageError("abelian dimension must lie in [1, 7], got " + *p.value);
    return std::make_shared<AbelianChart>(std::move(s), n);
  }
  if (p.name == "affine") {
    expect_no_key(p, spec);
    return std::make_shared<AffineChart>(std::move(s));
  }
  if (p.name == "quaternion") {
    expect_no_key(p, spec);
    return std::make_shared<SphereChart<4>>(std::move(s), 0.0);
  }
  if (p.name == "octonion") {
    expect_no_key(p, spec);
    return std::make_shared<SphereChart<8>>(std::move(s), 0.0);
  }
  if (p.name == "broken") {
    expect_key(p, "eps", spec);
    return std::make_shared<SphereChart<8>>(std::move(s), parse_decimal(*p.value, spec));
  }
  throw UsageError("unknown loop '" + p.name + "' (expected abelian:n=<k>, affine, quaternion, octonion, "
                   "broken:eps=<e>)");
}

std::vector<std::string> builtin_examples() {
  return {"abelian:n=3", "affine", "quaternion", "octonion", "broken:eps=0.01"};
}

std::vector<double> sphere_chart_multiply(int k, std::span<const double> x, std::span<const double> y) {
  if (k == 2) return SphereChart<4>("quaternion", 0.0).multiply(x, y);
  if (k == 3) return SphereChart<8>("octonion", 0.0).multiply(x, y);
  throw UsageError("sphere chart order must be 2 or 3, got " + std::to_string(k));
}

std::vector<double> moufang_residual(const LoopChart& loop, std::span<const double> g, std::span<const double> h,
                                     std::span<const double> k) {
  const auto gh = loop.multiply(g, h);
  const auto kg = loop.multiply(k, g);
  const auto lhs = loop.multiply(std::span<const double>(gh), std::span<const double>(kg));
  const auto hk = loop.multiply(h, k);
  const auto hkg = loop.multiply(std::span<const double>(hk), g);
  const auto rhs = loop.multiply(g, std::span<const double>(hkg));
  std::vector<double> r(lhs.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = lhs[i] - rhs[i];
  return r;
}

}  // namespace moufang
