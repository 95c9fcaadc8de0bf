#pragma once

// Seeded sampling of points in a ball around the identity.
//
// Each sample i is drawn from its own generator, keyed by (seed, i, attempt),
// so a sample never depends on how many draws other samples consumed.

#include <cstdint>
#include <string>
#include <vector>

#include "moufang/loop.hpp"

namespace moufang {

inline constexpr double kDefaultRadius = 0.2;
inline constexpr double kMaxSphereRadius = 0.3;

struct SamplePlan {
  std::uint64_t seed = 42;
  std::size_t count = 100;
  double radius = kDefaultRadius;
  std::string loop_spec;
};

/// Throws UsageError when count < 1, radius <= 0, or radius exceeds the
/// sphere-chart bound.
void validate(const SamplePlan& plan, const LoopChart& loop);

struct SampleTuple {
  LoopPoint g, h, k;
};

/// One point uniform in the closed ball of `radius` in R^n, keyed by
/// (seed, index, attempt).
LoopPoint ball_point(std::size_t n, double radius, std::uint64_t seed, std::uint64_t index, std::uint64_t attempt,
                     std::uint64_t slot);

/// `plan.count` tuples inside the ball. Tuples whose products leave the chart
/// are redrawn; more than 10 * count total attempts raises DomainError.
std::vector<SampleTuple> draw_samples(const LoopChart& loop, const SamplePlan& plan);

}  // namespace moufang
