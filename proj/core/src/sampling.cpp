#include "moufang/sampling.hpp"

#include <cmath>
#include <random>

#include "moufang/errors.hpp"

namespace moufang {

namespace {

constexpr std::size_t kMaxCubeDraws = 1u << 16;

double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool fits_chart(const LoopChart& loop, const SampleTuple& t) {
  try {
    loop.multiply(t.g, t.h);
    moufang_residual(loop, t.g, t.h, t.k);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace

void validate(const SamplePlan& plan, const LoopChart& loop) {
  if (plan.count < 1) throw UsageError("sample count must be at least 1");
  if (!(plan.radius > 0.0) || !std::isfinite(plan.radius)) throw UsageError("sampling radius must be positive");
  if (loop.is_sphere_chart() && plan.radius > kMaxSphereRadius)
    throw UsageError("sampling radius for sphere charts must not exceed 0.3");
}

LoopPoint ball_point(std::size_t n, double radius, std::uint64_t seed, std::uint64_t index, std::uint64_t attempt,
                     std::uint64_t slot) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(attempt), static_cast<std::uint32_t>(slot)};
  std::mt19937_64 rng(seq);
  std::vector<double> x(n);
  for (std::size_t draw = 0; draw < kMaxCubeDraws; ++draw) {
    double r2 = 0.0;
    for (double& c : x) {
      c = radius * (2.0 * unit_interval(rng) - 1.0);
      r2 += c * c;
    }
    if (r2 <= radius * radius) return LoopPoint(std::move(x));
  }
  throw DomainError("ball rejection sampling did not converge");
}

std::vector<SampleTuple> draw_samples(const LoopChart& loop, const SamplePlan& plan) {
  validate(plan, loop);
  const std::size_t n = loop.dim();
  const std::size_t cap = 10 * plan.count;
  std::size_t attempts = 0;
  std::vector<SampleTuple> out;
  out.reserve(plan.count);
  for (std::size_t i = 0; i < plan.count; ++i) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      if (++attempts > cap)
        throw DomainError("sampling exceeded " + std::to_string(cap) + " attempts: too many chart exits");
      SampleTuple t{ball_point(n, plan.radius, plan.seed, i, attempt, 0),
                    ball_point(n, plan.radius, plan.seed, i, attempt, 1),
                    ball_point(n, plan.radius, plan.seed, i, attempt, 2)};
      if (fits_chart(loop, t)) {
        out.push_back(std::move(t));
        break;
      }
    }
  }
  return out;
}

}  // namespace moufang
