#include "moufang/suite.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <exception>
#include <thread>

#include "moufang/errors.hpp"
#include "moufang/residuals.hpp"

namespace moufang {

namespace {

constexpr std::array<Family, 8> kFamilies = {Family::gle,  Family::constraint, Family::mc,
                                             Family::lry,  Family::lemma,      Family::gle2,
                                             Family::integrability, Family::moufang};

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct SampleEvaluator {
  const LoopChart& loop;
  std::span<const Family> families;
  StructureConstants c;
  Sign lemma_sign;

  // Max-abs residual per requested family for one sample.
  std::vector<double> operator()(const SampleTuple& t) const {
    const bool need_pair = std::any_of(families.begin(), families.end(), is_pair_family);
    const bool need_point = std::any_of(families.begin(), families.end(), [](Family f) {
      return !is_pair_family(f) && f != Family::moufang;
    });
    std::optional<PairTensors> pair;
    std::optional<PointTensors> point;
    if (need_pair) pair = pair_tensors(loop, t.g, t.h);
    if (need_point && !pair) point = point_tensors(loop, t.g);
    const PointTensors& at_g = pair ? pair->at_g : *point;

    std::vector<double> out;
    out.reserve(families.size());
    for (Family f : families) {
      switch (f) {
        case Family::gle: out.push_back(max_abs(residual_gle(*pair))); break;
        case Family::constraint: out.push_back(max_abs(residual_constraint(at_g.aux))); break;
        case Family::mc: out.push_back(max_abs(residual_mc(at_g, c))); break;
        case Family::lry: out.push_back(max_abs(residual_lryam(at_g, c))); break;
        case Family::lemma: out.push_back(max_abs(residual_lemma(at_g, c, lemma_sign))); break;
        case Family::gle2: out.push_back(max_abs(residual_gle2(*pair))); break;
        case Family::integrability: out.push_back(max_abs(residual_integrability(*pair))); break;
        case Family::moufang: out.push_back(max_abs(moufang_residual(loop, t.g, t.h, t.k))); break;
      }
    }
    return out;
  }
};

// Runs fn(i) for i in [0, count) over `threads` workers; the first exception
// is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += threads) fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::gle: return "GLE";
    case Family::constraint: return "CONSTRAINT";
    case Family::mc: return "MC";
    case Family::lry: return "LRY";
    case Family::lemma: return "LEMMA";
    case Family::gle2: return "GLE2";
    case Family::integrability: return "INTEGRABILITY";
    case Family::moufang: return "MOUFANG";
  }
  return "?";
}

std::vector<Family> all_families() { return {kFamilies.begin(), kFamilies.end()}; }

std::vector<Family> parse_families(std::string_view csv) {
  if (upper(trim(csv)) == "ALL") return all_families();
  std::vector<Family> out;
  while (true) {
    const auto comma = csv.find(',');
    const std::string name = upper(trim(csv.substr(0, comma)));
    auto it = std::find_if(kFamilies.begin(), kFamilies.end(), [&](Family f) { return family_name(f) == name; });
    if (it == kFamilies.end()) throw UsageError("unknown identity family '" + name + "'");
    if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
    if (comma == std::string_view::npos) break;
    csv.remove_prefix(comma + 1);
  }
  return out;
}

bool is_pair_family(Family f) {
  return f == Family::gle || f == Family::gle2 || f == Family::integrability;
}

bool SuiteResult::pass() const {
  return std::all_of(families.begin(), families.end(), [](const FamilyResidual& r) { return r.pass; });
}

const FamilyResidual& SuiteResult::family(Family f) const {
  for (const auto& r : families)
    if (r.family == f) return r;
  throw UsageError("family " + std::string(family_name(f)) + " was not evaluated");
}

SuiteResult run_suite(const LoopChart& loop, const SamplePlan& plan, std::span<const Family> families,
                      const SuiteOptions& options) {
  if (families.empty()) throw UsageError("no identity families requested");
  if (!(options.tolerance > 0.0)) throw UsageError("tolerance must be positive");
  const auto samples = draw_samples(loop, plan);
  const SampleEvaluator eval{loop, families, structure_constants(loop, options.ledger.bracket_sign),
                             options.ledger.lemma_sign};

  std::vector<std::vector<double>> per_sample(samples.size());
  parallel_for(samples.size(), options.threads, [&](std::size_t i) { per_sample[i] = eval(samples[i]); });

  SuiteResult result{plan, options, {}};
  for (std::size_t f = 0; f < families.size(); ++f) {
    FamilyResidual r;
    r.family = families[f];
    r.per_sample.reserve(samples.size());
    std::size_t arg = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double x = per_sample[i][f];
      r.per_sample.push_back(x);
      sum += x;
      if (x > r.max) {
        r.max = x;
        arg = i;
      }
    }
    r.mean = sum / static_cast<double>(samples.size());
    r.argmax_g = samples[arg].g;
    if (is_pair_family(r.family) || r.family == Family::moufang) r.argmax_h = samples[arg].h;
    r.pass = r.max <= options.tolerance;
    result.families.push_back(std::move(r));
  }
  return result;
}

SuiteResult run_suite(const SamplePlan& plan, std::span<const Family> families, const SuiteOptions& options) {
  const auto loop = builtin(plan.loop_spec);
  return run_suite(*loop, plan, families, options);
}

std::vector<Family> calibration_families() { return {Family::mc, Family::lry, Family::lemma}; }

CalibrationResult calibration_table(std::span<const std::string> loops, const SamplePlan& plan, double tolerance) {
  if (loops.empty()) throw UsageError("calibration needs at least one loop");
  CalibrationResult result;
  result.loops.assign(loops.begin(), loops.end());
  for (Sign bracket : {Sign::plus, Sign::minus})
    for (Sign lemma : {Sign::plus, Sign::minus}) result.rows.push_back({{bracket, lemma}, {}, true});

  for (const std::string& spec : loops) {
    const auto loop = builtin(spec);
    SamplePlan p = plan;
    p.loop_spec = spec;
    const auto samples = draw_samples(*loop, p);
    const StructureConstants c_plus = structure_constants(*loop, Sign::plus);
    const StructureConstants c_minus = structure_constants(*loop, Sign::minus);

    std::vector<std::array<double, 4>> worst(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const PointTensors t = point_tensors(*loop, samples[i].g);
      for (std::size_t r = 0; r < result.rows.size(); ++r) {
        const ConventionLedger& led = result.rows[r].ledger;
        const StructureConstants& c = led.bracket_sign == Sign::plus ? c_plus : c_minus;
        worst[i][r] = std::max({max_abs(residual_mc(t, c)), max_abs(residual_lryam(t, c)),
                                max_abs(residual_lemma(t, c, led.lemma_sign))});
      }
    }
    for (std::size_t r = 0; r < result.rows.size(); ++r) {
      double m = 0.0;
      for (const auto& w : worst) m = std::max(m, w[r]);
      result.rows[r].max_per_loop.push_back(m);
      result.rows[r].pass = result.rows[r].pass && m <= tolerance;
    }
  }
  const auto passing = std::count_if(result.rows.begin(), result.rows.end(), [](const auto& r) { return r.pass; });
  if (passing == 1)
    result.ledger = std::find_if(result.rows.begin(), result.rows.end(), [](const auto& r) { return r.pass; })->ledger;
  return result;
}

ConventionLedger calibrate_conventions(std::span<const std::string> loops, const SamplePlan& plan, double tolerance) {
  CalibrationResult table = calibration_table(loops, plan, tolerance);
  if (table.ledger) return *table.ledger;
  const auto passing = std::count_if(table.rows.begin(), table.rows.end(), [](const auto& r) { return r.pass; });
  throw CalibrationError(passing == 0 ? "calibration failed: no sign assignment passes"
                                      : "calibration failed: " + std::to_string(passing) +
                                            " sign assignments pass (degenerate loop set)",
                         std::move(table));
}

}  // namespace moufang
