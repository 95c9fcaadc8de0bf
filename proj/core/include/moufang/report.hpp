#pragma once

// Machine-readable reports: verification results (JSON and CSV), tensor
// dumps, calibration tables and multiplication tables.

#include <span>
#include <string>
#include <string_view>

#include "moufang/loop.hpp"
#include "moufang/suite.hpp"

namespace moufang {

inline constexpr std::string_view kToolName = "moufang";
inline constexpr std::string_view kToolVersion = "1.0.0";

struct VerifyReport {
  SuiteResult suite;
  std::string ledger_source = "calibrated";  // how the sign conventions were obtained
  bool integrability_h_term_corrected = true;

  bool pass() const { return suite.pass(); }
};

enum class ReportFormat { json, csv };

ReportFormat parse_format(std::string_view s);

/// Numbers are written in shortest round-trip form (at most 17 significant
/// digits); keys appear in a fixed order.
std::string report_json(const VerifyReport& report);

/// Long format with columns record,key,index,value; the same numbers as the
/// JSON report, written with the same formatter.
std::string report_csv(const VerifyReport& report);

std::string render(const VerifyReport& report, ReportFormat format);

/// u, v, w, C and the secondary tensors at `point`, as nested arrays indexed
/// [i][j] or [i][j][k] with the upper index first.
std::string tensors_json(const LoopChart& loop, std::span<const double> point, const ConventionLedger& ledger = {});

std::string calibration_json(const CalibrationResult& result, const SamplePlan& plan, double tolerance);

/// Basis multiplication table of the quaternions (4) or octonions (8).
std::string table_json(std::size_t dim);

}  // namespace moufang
