#include "poincare/report.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace poincare {

namespace {

using Json = nlohmann::ordered_json;

Json named(const NamedValues& v) {
  Json j = Json::object();
  for (const auto& [k, x] : v) j[k] = x;
  return j;
}

Json config_json(const SuiteConfig& c) {
  Json j;
  j["lmax"] = c.lmax;
  j["grid"] = c.grid;
  j["seed"] = c.seed;
  j["c"] = c.c;
  j["variant"] = to_string(c.variant);
  j["corrected_lambda"] = c.corrected_lambda;
  Json tol = Json::object();
  for (const auto& [k, v] : c.tolerances) tol[k] = v;
  j["tolerances"] = tol;
  return j;
}

std::string joined(const NamedValues& v) {
  std::string out;
  for (const auto& [k, x] : v) {
    if (!out.empty()) out += ';';
    out += k + "=" + format_double(x);
  }
  return out;
}

}  // namespace

ReportFormat parse_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  if (s == "text") return ReportFormat::Text;
  throw ValidationError("unknown format '" + s + "' (expected json, csv or text)");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_json(const VerificationReport& report) {
  Json j;
  j["suite"] = report.suite;
  j["config"] = config_json(report.config);
  Json recs = Json::array();
  for (const auto& r : report.records) {
    Json o;
    o["name"] = r.name;
    o["indices"] = named(r.indices);
    o["point"] = named(r.point);
    o["residual"] = r.residual;
    o["scale"] = r.scale;
    o["tolerance"] = r.tolerance;
    o["passed"] = r.passed;
    o["flagged"] = r.flagged;
    recs.push_back(std::move(o));
  }
  j["records"] = std::move(recs);
  const Summary s = report.summary();
  j["summary"] = {{"passed", s.passed}, {"failed", s.failed}, {"flagged", s.flagged}};
  return j.dump(1) + "\n";
}

std::string render_csv(const VerificationReport& report) {
  std::string out = "suite,name,indices,point,residual,scale,tolerance,passed,flagged\r\n";
  for (const auto& r : report.records) {
    out += csv_field(report.suite) + ',' + csv_field(r.name) + ',' + csv_field(joined(r.indices)) +
           ',' + csv_field(joined(r.point)) + ',' + format_double(r.residual) + ',' +
           format_double(r.scale) + ',' + format_double(r.tolerance) + ',' +
           (r.passed ? "true" : "false") + ',' + (r.flagged ? "true" : "false") + "\r\n";
  }
  return out;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  for (const auto& r : report.records) {
    os << (r.passed ? "PASS" : "FAIL") << (r.flagged ? " (flagged)" : "") << "  " << r.name;
    if (!r.indices.empty()) os << " [" << joined(r.indices) << "]";
    if (!r.point.empty()) os << " @ " << joined(r.point);
    os << "  residual=" << format_double(r.residual) << " tol=" << format_double(r.tolerance)
       << " scale=" << format_double(r.scale) << "\n";
  }
  const Summary s = report.summary();
  os << "suite " << report.suite << ": " << s.passed << " passed, " << s.failed << " failed, "
     << s.flagged << " flagged\n";
  return os.str();
}

std::string render(const VerificationReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Text: return render_text(report);
  }
  return {};
}

std::string flagged_note(const std::string& name) {
  if (name == "radial.residual") {
    return "printed radial solution leaves R1 = -R2 = (sqrt(2l(l+1)) - 2l(l+1)) r";
  }
  if (name == "commutators.lambda_algebra" || name == "commutators.lambda_casimir") {
    return "printed Lambda_1 has rows (0,1,0), (1,0,0), (0,1,0) and is not the spin-1 matrix";
  }
  if (name == "holomorphy.cauchy_riemann") {
    return "Z is holomorphic in theta - i tau; reported for information";
  }
  return {};
}

}  // namespace poincare
