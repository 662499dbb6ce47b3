#include "cli.hpp"

#include "symm/analytic_g.hpp"
#include "symm/errors.hpp"
#include "symm/euler_products.hpp"
#include "symm/exact_moments.hpp"
#include "symm/mollifier.hpp"
#include "symm/numeric_core.hpp"
#include "symm/padic_valuation.hpp"
#include "symm/self_similar.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace symm::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Record {
  json inputs = json::object();
  json result;
  std::optional<double> err_estimate;
  json details = json::object();
};

std::string real_str(const Real& x, int digits) { return x.str(digits); }

Symmetry arg_sym(const std::string& s) {
  try {
    return parse_symmetry(s);
  } catch (const Error&) {
    throw UsageError("unknown symmetry class '" + s + "' (expected U, O or Sp)");
  }
}

std::uint64_t arg_uint(const std::string& s, const char* name) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(std::string(name) + " must be a nonnegative integer, got '" + s + "'");
  }
  return v;
}

std::int64_t arg_int(const std::string& s, const char* name) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(std::string(name) + " must be an integer, got '" + s + "'");
  }
  return v;
}

Rational arg_rational(const std::string& s, const char* name) {
  try {
    return parse_rational(s);
  } catch (const Error&) {
    throw UsageError(std::string(name) + " must be a rational number, got '" + s + "'");
  }
}

RationalPolynomial arg_poly(const std::string& s, const char* name) {
  try {
    return RationalPolynomial::parse(s);
  } catch (const Error&) {
    throw UsageError(std::string(name) + " must be a comma-separated coefficient list, got '" + s + "'");
  }
}

double arg_double(const std::string& s, const char* name) {
  return arg_rational(s, name).convert_to<double>();
}

// ---- plots ----------------------------------------------------------------

std::string fmt(double v, int decimals = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::vector<double> ticks(double lo, double hi, int target = 6) {
  const double span = hi - lo;
  if (!(span > 0)) return {lo};
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (span / step <= target) break;
  }
  std::vector<double> out;
  for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
    out.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  }
  return out;
}

std::string render_svg(std::uint64_t p, const std::vector<CpSample>& samples) {
  constexpr double W = 720, H = 440, L = 70, R = 20, T = 40, B = 50;
  double x0 = samples.front().x, x1 = samples.back().x;
  double y0 = samples.front().cp, y1 = y0;
  for (const auto& s : samples) {
    y0 = std::min(y0, s.cp);
    y1 = std::max(y1, s.cp);
  }
  if (y1 - y0 < 1e-12) {
    y0 -= 0.5;
    y1 += 0.5;
  }
  const double pad = (y1 - y0) * 0.05;
  y0 -= pad;
  y1 += pad;
  auto sx = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto sy = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
     << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"16\">c_"
     << p << "(x)</text>\n"
     << "<g stroke=\"black\" stroke-width=\"1\">\n"
     << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\"/>\n"
     << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\"/>\n";
  for (double t : ticks(x0, x1)) {
    os << "<line x1=\"" << fmt(sx(t), 2) << "\" y1=\"" << H - B << "\" x2=\"" << fmt(sx(t), 2)
       << "\" y2=\"" << H - B + 5 << "\"/>\n";
  }
  for (double t : ticks(y0, y1)) {
    os << "<line x1=\"" << L - 5 << "\" y1=\"" << fmt(sy(t), 2) << "\" x2=\"" << L << "\" y2=\""
       << fmt(sy(t), 2) << "\"/>\n";
  }
  os << "</g>\n<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double t : ticks(x0, x1)) {
    os << "<text x=\"" << fmt(sx(t), 2) << "\" y=\"" << H - B + 18 << "\" text-anchor=\"middle\">"
       << tick_label(t) << "</text>\n";
  }
  for (double t : ticks(y0, y1)) {
    os << "<text x=\"" << L - 8 << "\" y=\"" << fmt(sy(t) + 4, 2) << "\" text-anchor=\"end\">"
       << tick_label(t) << "</text>\n";
  }
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">x</text>\n"
     << "</g>\n<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" points=\"";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i) os << ' ';
    os << fmt(sx(samples[i].x), 3) << ',' << fmt(sy(samples[i].cp), 3);
  }
  os << "\"/>\n</svg>\n";
  return os.str();
}

std::string render_csv(const std::vector<CpSample>& samples) {
  std::ostringstream os;
  os << "x,cp\n";
  char buf[96];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.x, s.cp);
    os << buf;
  }
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw DomainError("failed writing '" + path + "'");
}

// ---- output ---------------------------------------------------------------

json to_json(const std::string& command, const Record& r, std::optional<double> elapsed_ms) {
  json j;
  j["command"] = command;
  j["inputs"] = r.inputs;
  j["result"] = r.result;
  if (r.err_estimate) j["err_estimate"] = *r.err_estimate;
  if (!r.details.empty()) j["details"] = r.details;
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j;
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string to_csv(const json& j) {
  std::vector<std::pair<std::string, std::string>> cells;
  flatten(j, "", cells);
  std::string header, row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) {
      header += ',';
      row += ',';
    }
    header += csv_field(cells[i].first);
    row += csv_field(cells[i].second);
  }
  return header + "\n" + row + "\n";
}

// ---- commands -------------------------------------------------------------

struct Args {
  std::vector<std::string> pos;
  bool factor = false;
  bool exact = false;
  std::string eps;
  std::string svg, csv_path;
  bool closed = false, limit = false;
  int digits = 16;
  std::string cutoff;
  std::string ak;
  std::string P, Q, theta;
};

Record cmd_gk(const Args& a) {
  Record r;
  const Symmetry sym = arg_sym(a.pos[0]);
  const std::uint64_t k = arg_uint(a.pos[1], "k");
  r.inputs = {{"sym", std::string(to_string(sym))}, {"k", k}};
  if (k == 0) {
    if (sym != Symmetry::U) throw DomainError("g_k is defined for k >= 1");
    r.result = "1";
    r.details["warning"] = "k = 0 lies outside the exact product; the unitary value g_0 = 1 is used";
    return r;
  }
  const MomentConstant mc = moment_constant(sym, k);
  r.result = mc.value.str();
  r.details["b_exponent"] = mc.b_exponent;
  if (a.factor) {
    r.details["factorization"] = mc.factored.to_string();
    r.details["largest_prime"] = mc.factored.exponents.empty() ? "1" : mc.factored.largest_prime().str();
  }
  return r;
}

Record cmd_vp(const Args& a) {
  Record r;
  const Symmetry sym = arg_sym(a.pos[0]);
  const std::uint64_t p = arg_uint(a.pos[1], "p");
  const std::uint64_t k = arg_uint(a.pos[2], "k");
  r.inputs = {{"sym", std::string(to_string(sym))}, {"p", p}, {"k", k}};
  const std::uint64_t v = vp_closed(sym, p, k);
  r.result = std::to_string(v);
  if (sym != Symmetry::Sp && p != 2) {
    try {
      r.details["zero_window"] = zero_window(sym, p, k);
    } catch (const OutOfRegime&) {
      r.details["zero_window"] = nullptr;
    }
  }
  return r;
}

Record cmd_cp(const Args& a) {
  Record r;
  const std::uint64_t p = arg_uint(a.pos[0], "p");
  const Rational x = arg_rational(a.pos[1], "x");
  r.inputs = {{"p", p}, {"x", to_string(x)}};
  if (a.exact) {
    r.result = to_string(cp_exact(p, x));
    return r;
  }
  const double eps = a.eps.empty() ? 1e-12 : arg_double(a.eps, "eps");
  r.inputs["eps"] = eps;
  const auto v = cp_numeric<Real>(p, x, eps);
  r.result = real_str(v.value, 20);
  r.err_estimate = v.err_estimate;
  return r;
}

Record cmd_cp_plot(const Args& a) {
  Record r;
  const std::uint64_t p = arg_uint(a.pos[0], "p");
  const double x0 = arg_double(a.pos[1], "xmin");
  const double x1 = arg_double(a.pos[2], "xmax");
  const std::uint64_t n = arg_uint(a.pos[3], "n");
  if (a.svg.empty() == a.csv_path.empty()) throw UsageError("cp-plot needs exactly one of --svg PATH or --csv PATH");
  const double eps = a.eps.empty() ? 1e-9 : arg_double(a.eps, "eps");
  r.inputs = {{"p", p}, {"xmin", x0}, {"xmax", x1}, {"n", n}, {"eps", eps}};
  const auto samples = sample_cp(p, x0, x1, n, eps);
  if (!a.svg.empty()) {
    write_file(a.svg, render_svg(p, samples));
    r.result = {{"format", "svg"}, {"path", a.svg}, {"samples", samples.size()}};
  } else {
    write_file(a.csv_path, render_csv(samples));
    r.result = {{"format", "csv"}, {"path", a.csv_path}, {"samples", samples.size()}};
  }
  return r;
}

Record cmd_classify(const Args& a) {
  Record r;
  const std::uint64_t p = arg_uint(a.pos[0], "p");
  const std::int64_t num = arg_int(a.pos[1], "a");
  const std::int64_t den = arg_int(a.pos[2], "b");
  r.inputs = {{"p", p}, {"a", num}, {"b", den}};
  const PointClass pc = classify_point(p, num, den);
  r.result = to_string(pc.kind);
  r.details["period"] = pc.period;
  r.details["residue_sum"] = pc.residue_sum;
  if (pc.kind == PointClass::Kind::VerticalTangent) r.details["slope_sign"] = pc.slope_sign;
  return r;
}

Record cmd_glambda(const Args& a) {
  Record r;
  const Symmetry sym = arg_sym(a.pos[0]);
  const Rational lq = arg_rational(a.pos[1], "lambda");
  if (a.closed && a.limit) throw UsageError("--closed and --limit are exclusive");
  if (a.digits < 1 || a.digits > 40) throw UsageError("--digits must be between 1 and 40");
  const Real lambda = to_real<Real>(lq);
  const char* method = a.limit ? "limit" : "closed";
  r.inputs = {{"sym", std::string(to_string(sym))}, {"lambda", to_string(lq)}, {"method", method}, {"digits", a.digits}};
  const RealApprox<Real> ratio =
      a.limit ? g_ratio_limit<Real>(sym, lambda, a.digits) : g_ratio_closed<Real>(sym, lambda);
  const RealApprox<Real> g =
      a.limit ? g_lambda_limit<Real>(sym, lambda, a.digits) : g_lambda_closed<Real>(sym, lambda);
  r.result = real_str(g.value, a.digits);
  r.err_estimate = g.err_estimate;
  r.details["ratio_to_gamma"] = real_str(ratio.value, a.digits);
  r.details["b_exponent"] = real_str(b_exponent(sym, lambda), a.digits);
  return r;
}

Record cmd_ghalf(const Args&) {
  Record r;
  const auto g = g_half_U<Real>();
  r.result = real_str(g.value, 30);
  r.err_estimate = g.err_estimate;
  r.details["within_bounds"] = g.value >= 1 && g.value <= Real(16) / 15;
  return r;
}

EulerProductOptions product_options(const Args& a) {
  EulerProductOptions o;
  if (!a.cutoff.empty()) o.prime_cutoff = arg_uint(a.cutoff, "cutoff");
  return o;
}

Record cmd_ak(const Args& a) {
  Record r;
  const std::string& family = a.pos[0];
  const EulerProductOptions o = product_options(a);
  RealApprox<Real> v;
  if (family == "zeta") {
    const Rational k = arg_rational(a.pos[1], "k");
    r.inputs = {{"family", family}, {"k", to_string(k)}, {"cutoff", o.prime_cutoff}};
    v = ak_zeta(to_real<Real>(k), o);
  } else if (family == "spquad") {
    const std::uint64_t k = arg_uint(a.pos[1], "k");
    r.inputs = {{"family", family}, {"k", k}, {"cutoff", o.prime_cutoff}};
    v = ak_sp_quadratic(k, o);
  } else {
    throw UsageError("family must be 'zeta' or 'spquad'");
  }
  r.result = real_str(v.value, 20);
  r.err_estimate = v.err_estimate;
  return r;
}

Record cmd_assemble(const Args& a) {
  Record r;
  const Symmetry sym = arg_sym(a.pos[0]);
  const Rational A = arg_rational(a.pos[1], "A");
  const std::uint64_t k = arg_uint(a.pos[2], "k");
  r.inputs = {{"sym", std::string(to_string(sym))}, {"A", to_string(A)}, {"k", k}};
  RealApprox<Real> ak;
  if (!a.ak.empty()) {
    ak.value = to_real<Real>(arg_rational(a.ak, "ak"));
    r.inputs["ak"] = a.ak;
  } else if (sym == Symmetry::U) {
    ak = ak_zeta(Real(k), product_options(a));
    r.details["ak_source"] = "zeta";
  } else if (sym == Symmetry::Sp) {
    ak = ak_sp_quadratic(k, product_options(a));
    r.details["ak_source"] = "quadratic Dirichlet";
  } else {
    throw UsageError("no built-in a_k for orthogonal families; pass --ak");
  }
  const MeanValueLeadingTerm t = assemble_mean_value(FamilyDescriptor{sym, A, ""}, k, ak);
  r.result = real_str(t.coefficient.value, 20);
  r.err_estimate = t.coefficient.err_estimate;
  r.details["ak"] = real_str(ak.value, 20);
  r.details["log_power"] = t.log_power;
  r.details["log_argument_exponent"] = to_string(t.log_argument_exponent);
  return r;
}

Record cmd_mollify(const Args& a) {
  Record r;
  const Symmetry sym = arg_sym(a.pos[0]);
  if (a.P.empty() || a.Q.empty()) throw UsageError("mollify needs --P and --Q");
  const RationalPolynomial P = arg_poly(a.P, "--P");
  const RationalPolynomial Q = arg_poly(a.Q, "--Q");
  r.inputs = {{"sym", std::string(to_string(sym))}, {"P", P.to_string()}, {"Q", Q.to_string()}};
  const LaurentPoly m = mollified_mean_square(sym, P, Q);
  r.result = m.to_string();
  json coeffs = json::object();
  for (auto it = m.terms().rbegin(); it != m.terms().rend(); ++it) {
    coeffs[std::to_string(it->first)] = to_string(it->second);
  }
  r.details["coefficients"] = coeffs;
  r.details["theta_limit"] = to_string(theta_limit(sym));
  if (!a.theta.empty()) {
    const Rational theta = arg_rational(a.theta, "theta");
    r.inputs["theta"] = to_string(theta);
    r.details["value_at_theta"] = to_string(evaluate_at_theta(m, theta));
  }
  return r;
}

Record cmd_asym(const Args& a) {
  Record r;
  const Symmetry sym = arg_sym(a.pos[0]);
  const std::uint64_t k = arg_uint(a.pos[1], "k");
  r.inputs = {{"sym", std::string(to_string(sym))}, {"k", k}};
  const Real approx = log_gk_asymptotic<Real>(sym, k);
  const Real exact = log_g_exact<Real>(sym, k);
  r.result = real_str(approx, 20);
  r.details["log_g_exact"] = real_str(exact, 20);
  r.details["difference"] = real_str(Real(exact - approx), 6);
  return r;
}

Record cmd_poles(const Args& a) {
  Record r;
  const Symmetry sym = arg_sym(a.pos[0]);
  const std::uint64_t k = arg_uint(a.pos[1], "k");
  r.inputs = {{"sym", std::string(to_string(sym))}, {"k", k}};
  r.result = pole_order(sym, k);
  r.details["lambda"] = to_string(Rational(1, 2) - Rational(k));
  return r;
}

struct Command {
  const char* name;
  const char* help;
  std::vector<const char*> positionals;
  std::function<Record(const Args&)> run;
};

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult res;
  CLI::App app{"Moment constants, valuations and related functions of L-function families", "symm"};
  app.fallthrough();
  app.require_subcommand(1);
  bool as_json = false, as_csv = false, timing = false;
  app.add_flag("--json", as_json, "JSON output (default)");
  app.add_flag("--csv", as_csv, "CSV output: one header line and one row");
  app.add_flag("--timing", timing, "include elapsed_ms in the output");

  Args a;
  const std::vector<Command> commands{
      {"gk", "exact moment constant g_k", {"sym", "k"}, cmd_gk},
      {"vp", "p-adic valuation of g_k", {"sym", "p", "k"}, cmd_vp},
      {"cp", "limiting valuation density c_p(x)", {"p", "x"}, cmd_cp},
      {"cp-plot", "sample c_p on an interval to SVG or CSV", {"p", "xmin", "xmax", "n"}, cmd_cp_plot},
      {"classify", "local behaviour of c_p at a/b", {"p", "a", "b"}, cmd_classify},
      {"glambda", "g_lambda for real lambda", {"sym", "lambda"}, cmd_glambda},
      {"ghalf", "g_{1/2} for the unitary class", {}, cmd_ghalf},
      {"ak", "arithmetic factor a_k", {"family", "k"}, cmd_ak},
      {"assemble", "leading coefficient of the mean value", {"sym", "A", "k"}, cmd_assemble},
      {"mollify", "mollified mean square as a Laurent polynomial in theta", {"sym"}, cmd_mollify},
      {"asym", "large-k expansion of log g_k", {"sym", "k"}, cmd_asym},
      {"poles", "pole order of g_lambda at 1/2 - k", {"sym", "k"}, cmd_poles},
  };

  std::vector<std::vector<std::string>> pos_store(commands.size());
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const auto& c = commands[i];
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    pos_store[i].resize(c.positionals.size());
    for (std::size_t j = 0; j < c.positionals.size(); ++j) {
      sub->add_option(c.positionals[j], pos_store[i][j], c.positionals[j])->required();
    }
    const std::string name = c.name;
    if (name == "gk") sub->add_flag("--factor", a.factor, "include the prime factorization");
    if (name == "cp") {
      auto* ex = sub->add_flag("--exact", a.exact, "exact rational value");
      sub->add_option("--eps", a.eps, "absolute tolerance of the numeric value")->excludes(ex);
    }
    if (name == "cp-plot") {
      sub->add_option("--svg", a.svg, "write an SVG plot");
      sub->add_option("--csv", a.csv_path, "write CSV samples");
      sub->add_option("--eps", a.eps, "tolerance per sample");
    }
    if (name == "glambda") {
      sub->add_flag("--closed", a.closed, "double-Gamma closed form (default)");
      sub->add_flag("--limit", a.limit, "extrapolated random-matrix limit");
      sub->add_option("--digits", a.digits, "significant digits");
    }
    if (name == "ak" || name == "assemble") sub->add_option("--cutoff", a.cutoff, "largest prime in the product");
    if (name == "assemble") sub->add_option("--ak", a.ak, "use this a_k instead of the built-in product");
    if (name == "mollify") {
      sub->add_option("--P", a.P, "coefficients of P, constant term first")->allow_extra_args(false);
      sub->add_option("--Q", a.Q, "coefficients of Q, constant term first")->allow_extra_args(false);
      sub->add_option("--theta", a.theta, "evaluate at this theta");
    }
    subs.push_back(sub);
  }

  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.exit_code = (e.get_exit_code() == 0) ? code : 2;
    return res;
  }
  if (as_json && as_csv) {
    res.err = "--json and --csv are exclusive\n";
    res.exit_code = 2;
    return res;
  }

  std::size_t which = 0;
  while (which < subs.size() && !subs[which]->parsed()) ++which;
  const Command& cmd = commands[which];
  a.pos = pos_store[which];

  auto emit = [&](const json& j) { res.out = as_csv ? to_csv(j) : j.dump() + "\n"; };
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Record r = cmd.run(a);
    std::optional<double> elapsed;
    if (timing) {
      elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    emit(to_json(cmd.name, r, elapsed));
    res.exit_code = 0;
  } catch (const UsageError& e) {
    res.err = std::string("usage error: ") + e.what() + "\nRun with --help for more information.\n";
    res.exit_code = 2;
  } catch (const Error& e) {
    json j;
    j["command"] = cmd.name;
    j["error"] = {{"kind", e.kind()}, {"message", e.what()}};
    emit(j);
    res.exit_code = 1;
  }
  return res;
}

}  // namespace symm::cli
