#include "moufang/report.hpp"

#include <json.hpp>

#include "moufang/cayley_dickson.hpp"
#include "moufang/errors.hpp"
#include "moufang/tensors.hpp"

namespace moufang {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json tensor_json(const Tensor3& t) {
  Json out = Json::array();
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Json mat = Json::array();
    for (std::size_t j = 0; j < t.dim(); ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < t.dim(); ++k) row.push_back(t(i, j, k));
      mat.push_back(std::move(row));
    }
    out.push_back(std::move(mat));
  }
  return out;
}

Json ledger_json(const ConventionLedger& l) {
  return Json{{"bracket_sign", static_cast<int>(l.bracket_sign)}, {"lemma_sign", static_cast<int>(l.lemma_sign)}};
}

std::string number(double x) { return Json(x).dump(); }

}  // namespace

ReportFormat parse_format(std::string_view s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  throw UsageError("unknown report format '" + std::string(s) + "' (expected json or csv)");
}

std::string report_json(const VerifyReport& report) {
  const SuiteResult& r = report.suite;
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["loop"] = r.plan.loop_spec;
  j["seed"] = r.plan.seed;
  j["radius"] = r.plan.radius;
  j["samples"] = r.plan.count;
  j["tolerance"] = r.options.tolerance;
  Json conv = ledger_json(r.options.ledger);
  conv["source"] = report.ledger_source;
  j["conventions"] = std::move(conv);
  j["corrections"] = Json{{"integrability_h_term_uses_dh", report.integrability_h_term_corrected}};
  Json fams = Json::array();
  for (const FamilyResidual& f : r.families) {
    Json fj;
    fj["name"] = family_name(f.family);
    fj["max"] = f.max;
    fj["mean"] = f.mean;
    fj["pass"] = f.pass;
    fj["argmax_g"] = f.argmax_g.coords;
    fj["argmax_h"] = f.argmax_h.coords;
    fams.push_back(std::move(fj));
  }
  j["families"] = std::move(fams);
  j["pass"] = report.pass();
  return j.dump(2) + "\n";
}

std::string report_csv(const VerifyReport& report) {
  const SuiteResult& r = report.suite;
  std::string out = "record,key,index,value\n";
  auto row = [&](std::string_view record, std::string_view key, std::string index, const std::string& value) {
    out.append(record).append(",").append(key).append(",").append(index).append(",").append(value).append("\n");
  };
  auto boolean = [](bool b) { return std::string(b ? "true" : "false"); };
  row("meta", "tool", "", std::string(kToolName));
  row("meta", "version", "", std::string(kToolVersion));
  row("meta", "loop", "", r.plan.loop_spec);
  row("meta", "seed", "", std::to_string(r.plan.seed));
  row("meta", "radius", "", number(r.plan.radius));
  row("meta", "samples", "", std::to_string(r.plan.count));
  row("meta", "tolerance", "", number(r.options.tolerance));
  row("meta", "bracket_sign", "", std::to_string(static_cast<int>(r.options.ledger.bracket_sign)));
  row("meta", "lemma_sign", "", std::to_string(static_cast<int>(r.options.ledger.lemma_sign)));
  row("meta", "ledger_source", "", report.ledger_source);
  row("meta", "integrability_h_term_uses_dh", "", boolean(report.integrability_h_term_corrected));
  for (const FamilyResidual& f : r.families) {
    const std::string_view name = family_name(f.family);
    row(name, "max", "", number(f.max));
    row(name, "mean", "", number(f.mean));
    row(name, "pass", "", boolean(f.pass));
    for (std::size_t i = 0; i < f.argmax_g.size(); ++i) row(name, "argmax_g", std::to_string(i), number(f.argmax_g[i]));
    for (std::size_t i = 0; i < f.argmax_h.size(); ++i) row(name, "argmax_h", std::to_string(i), number(f.argmax_h[i]));
  }
  row("meta", "pass", "", boolean(report.pass()));
  return out;
}

std::string render(const VerifyReport& report, ReportFormat format) {
  return format == ReportFormat::json ? report_json(report) : report_csv(report);
}

std::string tensors_json(const LoopChart& loop, std::span<const double> point, const ConventionLedger& ledger) {
  loop.check_domain(point);
  const PointTensors t = point_tensors(loop, point);
  const StructureConstants c = structure_constants(loop, ledger.bracket_sign);
  Json j;
  j["loop"] = loop.spec();
  j["dim"] = loop.dim();
  j["point"] = std::vector<double>(point.begin(), point.end());
  j["layout"] =
      "matrices are [i][j] = X^i_j (upper index first); 3-tensors are [i][j][k] = T^i_jk, "
      "antisymmetric in j,k";
  j["conventions"] = ledger_json(ledger);
  j["u"] = matrix_json(t.aux.u);
  j["v"] = matrix_json(t.aux.v);
  j["w"] = matrix_json(t.aux.w);
  j["C"] = tensor_json(c.c);
  j["u_jk"] = tensor_json(t.secondary.u_jk);
  j["v_jk"] = tensor_json(t.secondary.v_jk);
  j["w_jk"] = tensor_json(t.secondary.w_jk);
  j["Y_jk"] = tensor_json(t.secondary.y_jk);
  return j.dump(2) + "\n";
}

std::string calibration_json(const CalibrationResult& result, const SamplePlan& plan, double tolerance) {
  Json j;
  j["loops"] = result.loops;
  j["seed"] = plan.seed;
  j["samples"] = plan.count;
  j["radius"] = plan.radius;
  j["tolerance"] = tolerance;
  Json rows = Json::array();
  for (const CalibrationRow& row : result.rows) {
    Json rj = ledger_json(row.ledger);
    Json per_loop;
    for (std::size_t i = 0; i < result.loops.size(); ++i) per_loop[result.loops[i]] = row.max_per_loop[i];
    rj["max_residual"] = std::move(per_loop);
    rj["pass"] = row.pass;
    rows.push_back(std::move(rj));
  }
  j["assignments"] = std::move(rows);
  j["unique"] = result.ledger.has_value();
  j["ledger"] = result.ledger ? ledger_json(*result.ledger) : Json(nullptr);
  return j.dump(2) + "\n";
}

std::string table_json(std::size_t dim) {
  if (dim != 4 && dim != 8) throw UsageError("multiplication table dimension must be 4 or 8");
  const auto table = multiplication_table(dim);
  Json j;
  j["algebra"] = dim == 4 ? "quaternion" : "octonion";
  j["dim"] = dim;
  j["construction"] = "Cayley-Dickson: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)); e1 e2 = e3";
  Json rows = Json::array();
  for (const auto& r : table) {
    Json row = Json::array();
    for (const auto& e : r) row.push_back((e.sign > 0 ? "+e" : "-e") + std::to_string(e.index));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  return j.dump(2) + "\n";
}

}  // namespace moufang
