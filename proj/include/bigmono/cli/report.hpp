#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bigmono/arith/algebra.hpp"
#include "bigmono/gassner.hpp"

namespace bigmono::cli {

using Json = nlohmann::ordered_json;

/// How a record affects the exit code.
enum class Outcome
{
  Checked,
  /// Could not run (overflow or unmet precondition); never fails the run.
  Skipped,
  /// Informational comparison (theorem hypotheses unmet); never fails the run.
  Informational,
  Error
};

struct Record
{
  std::string name;
  Json parameters = Json::object();
  Json expected = Json::object(); // {value, provenance}
  Json computed = Json::object();
  bool match = false;
  double runtime_ms = 0;
  std::vector<std::string> findings;
  Outcome outcome = Outcome::Checked;
};

struct Report
{
  std::vector<Record> records;

  int exit_code() const
  {
    bool mismatch = false;
    for (const auto &r : records) {
      if (r.outcome == Outcome::Error)
        return 2;
      if (r.outcome == Outcome::Checked && !r.match)
        mismatch = true;
    }
    return mismatch ? 1 : 0;
  }
};

inline Json expected_value(Json value, const std::string &provenance)
{
  Json e = Json::object();
  e["value"] = std::move(value);
  e["provenance"] = provenance;
  return e;
}

inline std::string decimal(const BigInt &x) { return x.str(); }

/// Algebra element as its coefficient vector over F_p (component 0 first).
inline Json element_json(const arith::InvolutiveAlgebra &alg, const arith::AlgElem &x)
{
  return Json(alg.to_prime_coords(x));
}

inline Json vector_json(const arith::InvolutiveAlgebra &alg, const gassner::AlgVector &v)
{
  Json out = Json::array();
  for (const auto &x : v)
    out.push_back(element_json(alg, x));
  return out;
}

/// Row-major list of rows, each a list of coefficient vectors.
inline Json matrix_json(const arith::InvolutiveAlgebra &alg, const gassner::AlgMatrix &m)
{
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.push_back(vector_json(alg, m.row(i)));
  return out;
}

inline Json record_json(const Record &r, bool timing)
{
  Json j = Json::object();
  j["name"] = r.name;
  j["parameters"] = r.parameters;
  j["expected"] = r.expected;
  j["computed"] = r.computed;
  j["match"] = r.match;
  j["runtime_ms"] = timing ? std::round(r.runtime_ms * 1000.0) / 1000.0 : 0.0;
  j["findings"] = r.findings;
  return j;
}

inline Json report_json(const Report &rep, bool timing)
{
  Json j = Json::object();
  Json records = Json::array();
  for (const auto &r : rep.records)
    records.push_back(record_json(r, timing));
  j["records"] = std::move(records);
  return j;
}

inline std::string tsv_escape(std::string s)
{
  for (auto &c : s)
    if (c == '\t' || c == '\n' || c == '\r')
      c = ' ';
  return s;
}

inline std::string report_tsv(const Report &rep, bool timing)
{
  std::ostringstream out;
  out << "name\tparameters\texpected\tprovenance\tcomputed\tmatch\truntime_ms\tfindings\n";
  for (const auto &r : rep.records) {
    const Json j = record_json(r, timing);
    std::string findings;
    for (const auto &f : r.findings)
      findings += (findings.empty() ? "" : " | ") + f;
    out << tsv_escape(r.name) << '\t' << tsv_escape(r.parameters.dump()) << '\t'
        << tsv_escape(r.expected.contains("value") ? r.expected["value"].dump() : "") << '\t'
        << tsv_escape(r.expected.value("provenance", "")) << '\t' << tsv_escape(r.computed.dump())
        << '\t' << (r.match ? "true" : "false") << '\t' << j["runtime_ms"].dump() << '\t'
        << tsv_escape(findings) << '\n';
  }
  return out.str();
}

} // namespace bigmono::cli
