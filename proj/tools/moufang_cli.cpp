// moufang: verify the differential identities of local analytic Moufang loops.
//
//   moufang verify    --loop octonion --families all --samples 200 --seed 42 --out report.json
//   moufang tensors   --loop quaternion --point 0,0,0
//   moufang calibrate --loops affine,quaternion
//   moufang table     --algebra octonion
//
// Exit codes: 0 pass, 1 identity or calibration failure, 2 usage or domain error.

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "moufang/errors.hpp"
#include "moufang/report.hpp"
#include "moufang/suite.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(s.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<double> parse_point(const std::string& s) {
  std::vector<double> out;
  for (const std::string& field : split_csv(s)) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
      throw moufang::UsageError("malformed coordinate '" + field + "' in --point");
    out.push_back(v);
  }
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw moufang::UsageError("cannot open output file '" + path + "'");
  f << text;
  if (!f) throw moufang::UsageError("failed writing output file '" + path + "'");
}

struct VerifyArgs {
  std::string loop;
  std::string families = "all";
  std::size_t samples = 100;
  double radius = moufang::kDefaultRadius;
  std::uint64_t seed = 42;
  double tol = moufang::kDefaultTolerance;
  std::string out = "-";
  std::string format = "json";
  std::string calibrate_with = "affine,quaternion";
  std::size_t calibration_samples = 20;
  unsigned threads = 1;
};

int run_verify(const VerifyArgs& a) {
  using namespace moufang;
  const auto loop = builtin(a.loop);
  const auto families = parse_families(a.families);
  const ReportFormat format = parse_format(a.format);
  const SamplePlan plan{a.seed, a.samples, a.radius, a.loop};
  validate(plan, *loop);

  ConventionLedger ledger;
  try {
    const auto loops = split_csv(a.calibrate_with);
    ledger = calibrate_conventions(loops, SamplePlan{a.seed, a.calibration_samples, kDefaultRadius, {}}, a.tol);
  } catch (const CalibrationError& e) {
    std::cerr << "moufang: " << e.what() << "\n";
    return kExitFail;
  }

  VerifyReport report{run_suite(*loop, plan, families, {a.tol, ledger, a.threads})};
  write_output(a.out, render(report, format));
  for (const auto& f : report.suite.families)
    std::fprintf(stderr, "%-14s max %.3e  mean %.3e  %s\n", std::string(family_name(f.family)).c_str(), f.max,
                 f.mean, f.pass ? "pass" : "FAIL");
  return report.pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of the differential identities of local analytic Moufang loops"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(moufang::kToolVersion));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Evaluate identity families over seeded samples");
  verify->add_option("--loop", va.loop, "Loop spec: abelian:n=<k>, affine, quaternion, octonion, broken:eps=<e>")
      ->required();
  verify->add_option("--families", va.families, "Comma-separated families or 'all'")->capture_default_str();
  verify->add_option("--samples", va.samples, "Number of sampled pairs")->capture_default_str();
  verify->add_option("--radius", va.radius, "Sampling ball radius")->capture_default_str();
  verify->add_option("--seed", va.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--tol", va.tol, "Absolute tolerance on residual entries")->capture_default_str();
  verify->add_option("--out", va.out, "Report path ('-' for stdout)")->capture_default_str();
  verify->add_option("--format", va.format, "json or csv")->capture_default_str();
  verify->add_option("--calibrate-with", va.calibrate_with, "Loops used to calibrate sign conventions")
      ->capture_default_str();
  verify->add_option("--calibration-samples", va.calibration_samples, "Samples per calibration loop")
      ->capture_default_str();
  verify->add_option("--threads", va.threads, "Worker threads for residual evaluation")->capture_default_str();

  std::string t_loop, t_point, t_out = "-";
  auto* tensors = app.add_subcommand("tensors", "Dump u, v, w, C and secondary tensors at a point");
  tensors->add_option("--loop", t_loop, "Loop spec")->required();
  tensors->add_option("--point", t_point, "Comma-separated chart coordinates")->required();
  tensors->add_option("--out", t_out, "Output path ('-' for stdout)");

  std::string c_loops, c_out = "-";
  std::size_t c_samples = 50;
  std::uint64_t c_seed = 42;
  double c_radius = moufang::kDefaultRadius;
  double c_tol = moufang::kDefaultTolerance;
  auto* calibrate = app.add_subcommand("calibrate", "Search the four joint sign assignments");
  calibrate->add_option("--loops", c_loops, "Comma-separated loop specs")->required();
  calibrate->add_option("--samples", c_samples, "Samples per loop")->capture_default_str();
  calibrate->add_option("--seed", c_seed, "Sampling seed")->capture_default_str();
  calibrate->add_option("--radius", c_radius, "Sampling ball radius")->capture_default_str();
  calibrate->add_option("--tol", c_tol, "Tolerance")->capture_default_str();
  calibrate->add_option("--out", c_out, "Output path ('-' for stdout)");

  std::string algebra = "octonion";
  auto* table = app.add_subcommand("table", "Print the basis multiplication table");
  table->add_option("--algebra", algebra, "quaternion or octonion")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(va);
    if (*tensors) {
      const auto loop = moufang::builtin(t_loop);
      const auto point = parse_point(t_point);
      if (point.size() != loop->dim())
        throw moufang::UsageError("--point has " + std::to_string(point.size()) + " coordinates, loop dimension is " +
                                  std::to_string(loop->dim()));
      write_output(t_out, moufang::tensors_json(*loop, point));
      return kExitPass;
    }
    if (*calibrate) {
      const auto loops = split_csv(c_loops);
      const moufang::SamplePlan plan{c_seed, c_samples, c_radius, {}};
      const auto result = moufang::calibration_table(loops, plan, c_tol);
      write_output(c_out, moufang::calibration_json(result, plan, c_tol));
      if (!result.ledger) {
        std::cerr << "moufang: calibration did not single out one sign assignment\n";
        return kExitFail;
      }
      return kExitPass;
    }
    if (*table) {
      if (algebra != "quaternion" && algebra != "octonion")
        throw moufang::UsageError("--algebra must be quaternion or octonion");
      write_output("-", moufang::table_json(algebra == "quaternion" ? 4 : 8));
      return kExitPass;
    }
  } catch (const moufang::UsageError& e) {
    std::cerr << "moufang: " << e.what() << "\n";
    return kExitUsage;
  } catch (const moufang::DomainError& e) {
    std::cerr << "moufang: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
