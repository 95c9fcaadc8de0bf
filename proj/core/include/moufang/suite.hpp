#pragma once

// Residual families over sampled points, and calibration of the sign
// conventions.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "moufang/loop.hpp"
#include "moufang/sampling.hpp"
#include "moufang/tensors.hpp"

namespace moufang {

inline constexpr double kDefaultTolerance = 1e-9;

enum class Family { gle, constraint, mc, lry, lemma, gle2, integrability, moufang };

std::string_view family_name(Family f);
std::vector<Family> all_families();
/// "all", or a comma-separated list of family names (case-insensitive).
std::vector<Family> parse_families(std::string_view csv);
/// Families evaluated on a pair (g, h); the others need only g (MOUFANG uses a triple).
bool is_pair_family(Family f);

struct FamilyResidual {
  Family family = Family::gle;
  std::vector<double> per_sample;  // max-abs residual entry per sample
  double max = 0.0;
  double mean = 0.0;
  LoopPoint argmax_g;
  LoopPoint argmax_h;  // empty for one-point families
  bool pass = false;
};

struct SuiteOptions {
  double tolerance = kDefaultTolerance;
  ConventionLedger ledger{};
  unsigned threads = 1;
};

struct SuiteResult {
  SamplePlan plan;
  SuiteOptions options;
  std::vector<FamilyResidual> families;

  bool pass() const;
  const FamilyResidual& family(Family f) const;
};

SuiteResult run_suite(const LoopChart& loop, const SamplePlan& plan, std::span<const Family> families,
                      const SuiteOptions& options = {});
SuiteResult run_suite(const SamplePlan& plan, std::span<const Family> families, const SuiteOptions& options = {});

/// Families whose verdict decides the calibration.
std::vector<Family> calibration_families();

struct CalibrationRow {
  ConventionLedger ledger;
  std::vector<double> max_per_loop;  // worst MC/LRY/LEMMA residual on each loop
  bool pass = false;
};

struct CalibrationResult {
  std::vector<std::string> loops;
  std::vector<CalibrationRow> rows;  // all four joint sign assignments
  std::optional<ConventionLedger> ledger;  // set iff exactly one row passes
};

/// Evaluates every joint sign assignment on every loop, with `plan` supplying
/// seed, count and radius (its loop_spec is ignored).
CalibrationResult calibration_table(std::span<const std::string> loops, const SamplePlan& plan,
                                    double tolerance = kDefaultTolerance);

class CalibrationError : public std::runtime_error {
 public:
  CalibrationError(const std::string& what, CalibrationResult table)
      : std::runtime_error(what), table_(std::move(table)) {}
  const CalibrationResult& table() const { return table_; }

 private:
  CalibrationResult table_;
};

/// The unique passing assignment; throws CalibrationError when zero or
/// several assignments pass.
ConventionLedger calibrate_conventions(std::span<const std::string> loops, const SamplePlan& plan,
                                       double tolerance = kDefaultTolerance);

}  // namespace moufang
