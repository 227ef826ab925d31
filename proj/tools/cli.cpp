#include "cli.hpp"

#include "poincare/assembly.hpp"
#include "poincare/report.hpp"
#include "poincare/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace poincare::cli {

namespace {

using Json = nlohmann::ordered_json;

double parse_plain(const std::string& s) {
  if (s.empty()) throw ValidationError("empty number");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ValidationError("malformed number '" + s + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

// One named output: a scalar (size 1) or a vector of complex values.
struct Output {
  std::string name;
  std::vector<Complex> values;
};

Json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// Options shared by eval and table. Stored as strings so every numeric field
// accepts the pi forms.
struct PointArgs {
  std::map<std::string, std::string> values;
  bool dotted = false;
  std::string form = "sum";
};

struct Globals {
  std::string format;
  double c = 1.0;
  std::string variant = "corrected";
  std::string corrected_lambda = "true";
  int lmax = 4;
  int grid = 5;
  std::uint64_t seed = 42;
  std::vector<std::string> tolerances;
};

const std::vector<std::string>& point_option_names() {
  static const std::vector<std::string> names = {
      "l", "m", "n", "ldot", "theta", "tau", "phi", "epsilon", "chi", "vareps",
      "k", "helicity", "x", "t", "r", "C", "Cdot"};
  return names;
}

const std::map<std::string, std::set<std::string>>& eval_signatures() {
  static const std::map<std::string, std::set<std::string>> sig = {
      {"z", {"l", "m", "n", "theta", "tau"}},
      {"m", {"l", "m", "n", "phi", "epsilon", "theta", "tau", "chi", "vareps"}},
      {"associated", {"l", "m", "phi", "epsilon", "theta", "tau", "chi", "vareps"}},
      {"zonal", {"l", "theta", "tau"}},
      {"polarization", {"k"}},
      {"planewave", {"k", "helicity", "x", "t"}},
      {"radial", {"l", "ldot", "C", "Cdot", "r"}},
      {"assemble",
       {"k", "helicity", "l", "ldot", "C", "Cdot", "x", "t", "r", "phi", "epsilon", "theta", "tau",
        "chi", "vareps"}},
  };
  return sig;
}

const std::set<std::string>& table_functions() {
  static const std::set<std::string> f = {"z", "m", "associated", "zonal"};
  return f;
}

void require_signature(const std::string& fn, const PointArgs& a) {
  const auto& sig = eval_signatures();
  const auto it = sig.find(fn);
  if (it == sig.end()) throw ValidationError("unknown function '" + fn + "'");
  for (const auto& [name, v] : a.values) {
    if (!it->second.count(name)) {
      throw ValidationError("option --" + name + " does not apply to function " + fn);
    }
  }
}

double real_arg(const std::map<std::string, double>& v, const std::string& name, double dflt) {
  const auto it = v.find(name);
  return it == v.end() ? dflt : it->second;
}

double required_arg(const std::map<std::string, double>& v, const std::string& name) {
  const auto it = v.find(name);
  if (it == v.end()) throw ValidationError("missing --" + name);
  return it->second;
}

int int_arg(const std::map<std::string, double>& v, const std::string& name, int dflt) {
  const double x = real_arg(v, name, dflt);
  if (x != std::round(x)) throw ValidationError("--" + name + " must be an integer");
  return static_cast<int>(x);
}

const std::string* raw(const PointArgs& a, const std::string& name) {
  const auto it = a.values.find(name);
  return it == a.values.end() ? nullptr : &it->second;
}

Helicity parse_helicity(const PointArgs& a) {
  const std::string* s = raw(a, "helicity");
  if (!s) throw ValidationError("missing --helicity");
  if (*s == "1" || *s == "+1" || *s == "+") return Helicity::Plus;
  if (*s == "0") return Helicity::Zero;
  if (*s == "-1" || *s == "-") return Helicity::Minus;
  throw ValidationError("--helicity must be 1, 0 or -1");
}

WaveVector parse_k(const PointArgs& a) {
  const std::string* s = raw(a, "k");
  if (!s) throw ValidationError("missing --k");
  return WaveVector::make(parse_vector3(*s));
}

Complex complex_arg(const PointArgs& a, const std::string& name, Complex dflt) {
  const std::string* s = raw(a, name);
  return s ? parse_complex(*s) : dflt;
}

RadialVariant parse_variant(const std::string& s) {
  if (s == "paper") return RadialVariant::Paper;
  if (s == "corrected") return RadialVariant::Corrected;
  throw ValidationError("--variant must be paper or corrected");
}

ComplexEulerAngles angles_from(const std::map<std::string, double>& v) {
  return ComplexEulerAngles::make(real_arg(v, "phi", 0), real_arg(v, "epsilon", 0),
                                  real_arg(v, "theta", 0), real_arg(v, "tau", 0),
                                  real_arg(v, "chi", 0), real_arg(v, "vareps", 0));
}

// Scalar functions of the harmonic family at numeric arguments.
Complex harmonic_value(const std::string& fn, const std::map<std::string, double>& v,
                       const PointArgs& a) {
  const double theta = real_arg(v, "theta", 0.0), tau = real_arg(v, "tau", 0.0);
  if (fn == "z") {
    const auto idx = HarmonicIndex::make(required_arg(v, "l"), required_arg(v, "m"),
                                         required_arg(v, "n"), a.dotted);
    if (a.form == "sum") return z_sum(idx, theta, tau);
    if (a.form == "2f1") return z_2f1(idx, theta, tau);
    if (a.dotted || !idx.n.is_integer() || idx.n.twice() != 0 || !idx.l.is_integer()) {
      throw ValidationError("--form legendre needs integer l, n = 0 and no --dotted");
    }
    return section3_z(idx.l.twice() / 2, idx.m.twice() / 2, theta, tau);
  }
  if (fn == "m") {
    const auto idx = HarmonicIndex::make(required_arg(v, "l"), required_arg(v, "m"),
                                         required_arg(v, "n"), a.dotted);
    return generalized_m(idx, angles_from(v));
  }
  if (fn == "associated") {
    return associated_m(HalfInt::from_double(required_arg(v, "l")),
                        HalfInt::from_double(required_arg(v, "m")), angles_from(v), a.dotted);
  }
  if (fn == "zonal") {
    return zonal_z(HalfInt::from_double(required_arg(v, "l")), theta, tau, a.dotted);
  }
  throw ValidationError("unknown function '" + fn + "'");
}

std::map<std::string, double> numeric_args(const PointArgs& a) {
  static const std::set<std::string> scalars = {"l",   "m",       "n",     "ldot", "theta",
                                                "tau", "phi",     "epsilon", "chi", "vareps",
                                                "t"};
  std::map<std::string, double> out;
  for (const auto& [name, s] : a.values) {
    if (scalars.count(name)) out[name] = parse_real(s);
  }
  return out;
}

std::vector<Complex> to_vector(const Eigen::Ref<const Eigen::VectorXcd>& v) {
  return std::vector<Complex>(v.data(), v.data() + v.size());
}

std::vector<Output> evaluate(const std::string& fn, const PointArgs& a, const Globals& g) {
  require_signature(fn, a);
  const auto v = numeric_args(a);
  if (fn == "z" || fn == "m" || fn == "associated" || fn == "zonal") {
    static const std::map<std::string, std::string> label = {
        {"z", "Z"}, {"m", "M"}, {"associated", "M"}, {"zonal", "Z"}};
    return {{label.at(fn), {harmonic_value(fn, v, a)}}};
  }
  if (fn == "polarization") {
    const PolarizationTriple p = polarization_vectors(parse_k(a));
    return {{"eps_plus", to_vector(p.eps_plus)},
            {"eps_minus", to_vector(p.eps_minus)},
            {"eps_zero", to_vector(p.eps_zero)}};
  }
  const std::string* xs = raw(a, "x");
  const Vector3d x = xs ? parse_vector3(*xs) : Vector3d::Zero();
  const double t = real_arg(v, "t", 0.0);
  if (fn == "planewave") {
    return {{"psi", to_vector(plane_wave(parse_k(a), parse_helicity(a), x, t, g.c))}};
  }
  const RadialVariant variant = parse_variant(g.variant);
  const int l = int_arg(v, "l", 1);
  const RadialSolution radial =
      radial_solutions(l, complex_arg(a, "C", 0.0), complex_arg(a, "Cdot", 0.0), variant,
                       int_arg(v, "ldot", l));
  const Complex r = complex_arg(a, "r", 1.0);
  if (fn == "radial") {
    const Complex rs = std::conj(r);
    return {{"f_plus", {radial.value(1, r)}},
            {"f_zero", {radial.value(0, r)}},
            {"f_minus", {radial.value(-1, r)}},
            {"fdot_plus", {radial.value_dotted(1, rs)}},
            {"fdot_zero", {radial.value_dotted(0, rs)}},
            {"fdot_minus", {radial.value_dotted(-1, rs)}}};
  }
  ConfigurationPoint p;
  p.x = x;
  p.t = t;
  p.r = r;
  p.angles = angles_from(v).parameters();
  return {{"psi", to_vector(assemble(parse_k(a), parse_helicity(a), radial, p, a.dotted, g.c))}};
}

void csv_columns(const Output& o, std::vector<std::string>& header) {
  const bool scalar = o.values.size() == 1;
  for (std::size_t i = 0; i < o.values.size(); ++i) {
    const std::string base = scalar ? o.name : o.name + "_" + std::to_string(i + 1);
    header.push_back(base + "_re");
    header.push_back(base + "_im");
  }
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_field(cells[i]);
  }
  return line + "\r\n";
}

void print_eval(const std::string& fn, const std::vector<Output>& outs, ReportFormat f,
                std::ostream& out) {
  if (f == ReportFormat::Json) {
    Json values = Json::object();
    for (const auto& o : outs) {
      if (o.values.size() == 1) {
        values[o.name] = complex_json(o.values[0]);
      } else {
        Json arr = Json::array();
        for (Complex z : o.values) arr.push_back(complex_json(z));
        values[o.name] = arr;
      }
    }
    out << Json{{"function", fn}, {"values", values}}.dump(1) << "\n";
  } else if (f == ReportFormat::Csv) {
    std::vector<std::string> header, row;
    for (const auto& o : outs) {
      csv_columns(o, header);
      for (Complex z : o.values) {
        row.push_back(format_double(z.real()));
        row.push_back(format_double(z.imag()));
      }
    }
    out << csv_row(header) << csv_row(row);
  } else {
    for (const auto& o : outs) {
      out << o.name << " = ";
      if (o.values.size() == 1) {
        out << format_complex(o.values[0]);
      } else {
        out << "(";
        for (std::size_t i = 0; i < o.values.size(); ++i) {
          out << (i ? ", " : "") << format_complex(o.values[i]);
        }
        out << ")";
      }
      out << "\n";
    }
  }
}

const std::vector<std::string>& table_coordinates(const std::string& fn) {
  static const std::map<std::string, std::vector<std::string>> coords = {
      {"z", {"l", "m", "n", "theta", "tau"}},
      {"m", {"l", "m", "n", "phi", "epsilon", "theta", "tau", "chi", "vareps"}},
      {"associated", {"l", "m", "phi", "epsilon", "theta", "tau", "chi", "vareps"}},
      {"zonal", {"l", "theta", "tau"}},
  };
  return coords.at(fn);
}

int cmd_table(const std::string& fn, const PointArgs& a, const Globals& g, std::ostream& out) {
  if (!table_functions().count(fn)) {
    throw ValidationError("table supports z, m, associated and zonal, got '" + fn + "'");
  }
  require_signature(fn, a);
  const auto& coords = table_coordinates(fn);
  std::vector<std::vector<double>> axes;
  for (const auto& name : coords) {
    const std::string* s = raw(a, name);
    static const std::set<std::string> indices = {"l", "m", "n"};
    if (!s) {
      if (indices.count(name)) throw ValidationError("missing --" + name);
      axes.push_back({0.0});
    } else {
      axes.push_back(parse_range(*s));
    }
  }
  std::vector<std::vector<double>> rows;
  std::vector<Complex> values;
  std::vector<std::size_t> pos(coords.size(), 0);
  for (;;) {
    std::map<std::string, double> v;
    std::vector<double> row;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      v[coords[i]] = axes[i][pos[i]];
      row.push_back(axes[i][pos[i]]);
    }
    bool valid_index = true;
    try {
      const double l = v.at("l");
      const double m = v.count("m") ? v.at("m") : 0.0;
      const double n = v.count("n") ? v.at("n") : 0.0;
      HarmonicIndex::make(l, m, n);
    } catch (const ValidationError&) {
      valid_index = false;
    }
    if (valid_index) {
      values.push_back(harmonic_value(fn, v, a));
      rows.push_back(std::move(row));
    }
    std::size_t i = coords.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++pos[i] < axes[i].size()) {
        done = false;
        break;
      }
      pos[i] = 0;
    }
    if (done) break;
  }
  if (rows.empty()) throw ValidationError("table is empty: no valid index combination");
  const ReportFormat f = g.format.empty() ? ReportFormat::Csv : parse_format(g.format);
  if (f == ReportFormat::Json) {
    Json arr = Json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Json o;
      for (std::size_t i = 0; i < coords.size(); ++i) o[coords[i]] = rows[r][i];
      o["value"] = complex_json(values[r]);
      arr.push_back(std::move(o));
    }
    out << Json{{"function", fn}, {"rows", arr}}.dump(1) << "\n";
    return kExitOk;
  }
  std::vector<std::string> header(coords.begin(), coords.end());
  header.push_back("value_re");
  header.push_back("value_im");
  if (f == ReportFormat::Csv) {
    out << csv_row(header);
  } else {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? " " : "") << header[i];
    out << "\n";
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::string> cells;
    for (double x : rows[r]) cells.push_back(format_double(x));
    cells.push_back(format_double(values[r].real()));
    cells.push_back(format_double(values[r].imag()));
    if (f == ReportFormat::Csv) {
      out << csv_row(cells);
    } else {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? " " : "") << cells[i];
      out << "\n";
    }
  }
  return kExitOk;
}

SuiteConfig suite_config(const Globals& g) {
  SuiteConfig cfg;
  cfg.lmax = g.lmax;
  cfg.grid = g.grid;
  cfg.seed = g.seed;
  cfg.c = g.c;
  cfg.variant = parse_variant(g.variant);
  cfg.corrected_lambda = parse_bool(g.corrected_lambda);
  for (const auto& t : g.tolerances) {
    const auto [name, value] = parse_tolerance(t);
    cfg.tolerances[name] = value;
  }
  cfg.validate();
  return cfg;
}

int cmd_verify(const std::string& suite, const Globals& g, std::ostream& out,
               std::ostream& err) {
  const SuiteConfig cfg = suite_config(g);
  const ReportFormat f = g.format.empty() ? ReportFormat::Json : parse_format(g.format);
  const VerificationReport report = run_suite(suite, cfg);
  out << render(report, f);
  std::set<std::string> noted;
  for (const auto& r : report.records) {
    if (r.flagged && !r.passed && noted.insert(r.name).second) {
      const std::string note = flagged_note(r.name);
      err << "flagged: " << r.name << (note.empty() ? "" : ": " + note) << "\n";
    }
  }
  const Summary s = report.summary();
  err << "verify " << suite << ": " << s.passed << " passed, " << s.failed << " failed, "
      << s.flagged << " flagged\n";
  return s.failed == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

double parse_real(const std::string& in) {
  std::string s;
  for (char ch : in) {
    if (ch != ' ') s += ch;
  }
  const auto p = s.find("pi");
  if (p == std::string::npos) return parse_plain(s);
  std::string coef = s.substr(0, p);
  std::string rest = s.substr(p + 2);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  double factor = 1.0;
  if (coef == "-") {
    factor = -1.0;
  } else if (!coef.empty() && coef != "+") {
    factor = parse_plain(coef);
  }
  double v = factor * kPi;
  if (!rest.empty()) {
    if (rest[0] != '/') throw ValidationError("malformed number '" + in + "'");
    const double d = parse_plain(rest.substr(1));
    if (d == 0.0) throw ValidationError("division by zero in '" + in + "'");
    v /= d;
  }
  return v;
}

std::vector<double> parse_range(const std::string& s) {
  const auto parts = split(s, ':');
  if (parts.size() == 1) return {parse_real(parts[0])};
  if (parts.size() != 3) throw ValidationError("range must be a:b:N, got '" + s + "'");
  const double a = parse_real(parts[0]), b = parse_real(parts[1]);
  const double nd = parse_plain(parts[2]);
  if (nd != std::round(nd) || nd < 1) {
    throw ValidationError("range count must be a positive integer in '" + s + "'");
  }
  const int n = static_cast<int>(nd);
  if (n == 1) return {a};
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(i == n - 1 ? b : a + (b - a) * i / (n - 1));
  return out;
}

Vector3d parse_vector3(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw ValidationError("expected three comma-separated values: '" + s + "'");
  return {parse_real(parts[0]), parse_real(parts[1]), parse_real(parts[2])};
}

Complex parse_complex(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return {parse_real(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
  throw ValidationError("expected re or re,im: '" + s + "'");
}

std::pair<std::string, double> parse_tolerance(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0) throw ValidationError("--tol expects NAME=VALUE");
  const double v = parse_plain(s.substr(eq + 1));
  if (v < 0.0) throw ValidationError("tolerance must be non-negative");
  return {s.substr(0, eq), v};
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ValidationError("expected true or false, got '" + s + "'");
}

std::string format_complex(Complex z) {
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g%c%.17gi", re, std::signbit(im) ? '-' : '+',
                std::abs(im));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lorentz and Poincare group harmonics, photon wave functions and checks"};
  app.name("poincare");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--c", g.c, "speed of light")->check(CLI::PositiveNumber);
  app.add_option("--variant", g.variant, "radial variant")
      ->check(CLI::IsMember({"paper", "corrected"}));
  app.add_option("--corrected-lambda", g.corrected_lambda, "spin-1 Lambda_1 (true) or printed")
      ->check(CLI::IsMember({"true", "false"}));
  app.add_option("--lmax", g.lmax, "largest l in the suites")->check(CLI::Range(0, 6));
  app.add_option("--grid", g.grid, "points per axis of the (theta, tau) grid")
      ->check(CLI::Range(2, 200));
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--tol", g.tolerances, "tolerance override NAME=VALUE")->take_all();

  std::string function, suite;
  PointArgs point;
  std::map<std::string, std::string> raw_opts;

  auto add_point_options = [&](CLI::App* sub) {
    sub->add_flag("--dotted", point.dotted, "conjugate series / negative-energy branch");
    for (const auto& name : point_option_names()) {
      sub->add_option("--" + name, raw_opts[name]);
    }
  };
  CLI::App* eval = app.add_subcommand("eval", "evaluate one function");
  eval->add_option("function", function, "z, m, associated, zonal, polarization, planewave, "
                                         "radial or assemble")
      ->required();
  eval->add_option("--form", point.form, "z formula: sum, 2f1 or legendre")
      ->check(CLI::IsMember({"sum", "2f1", "legendre"}));
  add_point_options(eval);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "all or one suite name")->required();

  CLI::App* table = app.add_subcommand("table", "tabulate a function over a grid");
  table->add_option("function", function, "z, m, associated or zonal")->required();
  add_point_options(table);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (const auto& name : point_option_names()) {
    CLI::App* sub = eval->parsed() ? eval : table;
    if (sub->count("--" + name) > 0) point.values[name] = raw_opts[name];
  }

  try {
    if (verify->parsed()) return cmd_verify(suite, g, out, err);
    if (table->parsed()) return cmd_table(function, point, g, out);
    require_speed_of_light(g.c);
    const ReportFormat f = g.format.empty() ? ReportFormat::Text : parse_format(g.format);
    print_eval(function, evaluate(function, point, g), f, out);
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace poincare::cli
