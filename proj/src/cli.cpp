#include "hilbertnorm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "hilbertnorm/error.hpp"
#include "hilbertnorm/function_space.hpp"
#include "hilbertnorm/hilbert_op.hpp"
#include "hilbertnorm/json_io.hpp"
#include "hilbertnorm/lemma_verify.hpp"
#include "hilbertnorm/parallel.hpp"
#include "hilbertnorm/wco_norms.hpp"

namespace hilbertnorm::cli {
namespace {

using io::json;

std::string num(double v) {
  if (!std::isfinite(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

cplx parse_point(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::logic_error&) {
    throw DomainError("--at expects 're,im', got '" + text + "'");
  }
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;       // CSV cells
  std::vector<json> records;                        // JSON rows, same order

  std::string csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_escape(r[i]);
      os << '\n';
    }
    return os.str();
  }
};

struct Options {
  double tol = 1e-10;
  std::string quad_method = "tanh_sinh";
  std::string format = "json";
  std::string out_path;

  // apply / norm inputs
  std::string method = "coeffs";
  std::string coeffs_path;
  std::string request_path;
  std::optional<double> falpha;
  int n_terms = 256;
  std::size_t m_terms = 0;
  std::string at;

  std::string space;
  std::optional<double> p;
  std::optional<double> alpha;
  std::optional<double> t;
  int radial = 400;
  int angular = 720;

  std::string lemma_name;
  std::string rows_path;

  std::string sweep_kind;
  std::optional<double> from, to, step;

  quad::QuadratureConfig quad() const {
    quad::QuadratureConfig cfg;
    cfg.method = quad::method_from_string(quad_method);
    cfg.target_abs_tol = tol;
    cfg.validate();
    return cfg;
  }
};

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw DomainError(std::string("missing required option ") + flag);
  return *v;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path);
  if (!f) throw DomainError("cannot open output file '" + o.out_path + "'");
  f << text;
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

std::string cmd_apply(Options o) {
  std::optional<TaylorFunction> coeffs;
  cplx z;
  if (!o.request_path.empty()) {
    std::ifstream in(o.request_path);
    if (!in) throw DomainError("cannot open request file '" + o.request_path + "'");
    json req;
    try {
      in >> req;
    } catch (const json::parse_error& e) {
      throw DomainError(std::string("request is not valid JSON: ") + e.what());
    }
    if (req.value("op", std::string()) != "apply") {
      throw DomainError("request must have op = \"apply\"");
    }
    o.method = req.value("method", std::string("coeffs"));
    if (!req.contains("input") || !req.contains("at")) {
      throw DomainError("request needs 'input' and 'at'");
    }
    coeffs = io::taylor_from_json(req["input"]);
    z = io::complex_from_json(req["at"]);
  } else {
    if (o.at.empty()) throw DomainError("missing required option --at");
    z = parse_point(o.at);
    if (!o.coeffs_path.empty()) {
      coeffs = io::read_taylor_file(o.coeffs_path);
    } else if (!o.falpha) {
      throw DomainError("apply needs --coeffs, --falpha or --request");
    }
  }
  if (o.method != "coeffs" && o.method != "integral") {
    throw DomainError("--method must be coeffs or integral");
  }
  if (!(std::abs(z) < 1.0)) throw DomainError("--at must lie in the open unit disk");

  json out = {{"op", "apply"}, {"method", o.method}, {"at", io::complex_to_json(z)}};
  if (o.method == "coeffs") {
    const TaylorFunction f = coeffs ? *coeffs : falpha_coeffs(*o.falpha, o.n_terms);
    const TaylorFunction hf = hilbert_coeffs(f, o.m_terms);
    const SeriesValue v = evaluate(hf, z);
    out["input_terms"] = f.size();
    out["output_terms"] = hf.size();
    out["value"] = io::complex_to_json(v.value);
    out["tail_bound"] = v.tail_bound;
  } else {
    const DiskFunction f =
        coeffs ? DiskFunction::from_taylor(*coeffs) : hilbertnorm::falpha(*o.falpha);
    const auto r = hilbert_integral(f, z, o.quad());
    out["input"] = f.label();
    out["value"] = io::complex_to_json(r.value);
    out["err_estimate"] = r.err_estimate;
    out["evals"] = r.evals;
  }
  return render(out);
}

std::string cmd_norm(const Options& o) {
  std::optional<DiskFunction> f;
  if (!o.coeffs_path.empty()) {
    f = DiskFunction::from_taylor(io::read_taylor_file(o.coeffs_path));
  } else if (o.falpha) {
    f = hilbertnorm::falpha(*o.falpha);
  } else {
    throw DomainError("norm needs --coeffs or --falpha");
  }
  if (o.space == "ap") {
    const SpaceSpec space = SpaceSpec::bergman(need(o.p, "--p"));
    BergmanOptions opt;
    opt.radial = o.quad();
    return render(io::to_json(bergman_norm(*f, space.exponent, opt)));
  }
  if (o.space == "hinf") {
    KorenblumGrid grid;
    grid.radial = o.radial;
    grid.angular = o.angular;
    return render(io::to_json(korenblum_norm(*f, need(o.alpha, "--alpha"), grid)));
  }
  throw DomainError("--space must be ap or hinf");
}

std::string cmd_tnorm(const Options& o) {
  return render(io::to_json(wco::tt_norm(need(o.alpha, "--alpha"), need(o.t, "--t"))));
}

json ap_reference(double p) {
  const SpaceSpec s = SpaceSpec::bergman(p);
  const double v = std::numbers::pi / std::sin(2.0 * std::numbers::pi / s.exponent);
  return {{"space", "ap"}, {"p", p}, {"lower", v}, {"upper", v}, {"gap", 0.0}, {"exact", true}};
}

std::string cmd_bound(const Options& o) {
  const std::string space = o.space.empty() ? "hinf" : o.space;
  if (space == "ap") return render(ap_reference(need(o.p, "--p")));
  if (space != "hinf") throw DomainError("--space must be ap or hinf");
  return render(io::to_json(wco::hinf_upper_bound(need(o.alpha, "--alpha"), o.quad())));
}

int cmd_verify(const Options& o, std::string& text) {
  const auto id = lemma::lemma_from_string(o.lemma_name);
  const auto report = lemma::run_verification(id, lemma::default_grid(id), o.quad());
  Table rows;
  for (const auto& a : report.grid.axes) rows.columns.push_back(a.name);
  rows.columns.push_back("margin");
  rows.columns.push_back("error");
  for (const auto& r : report.rows) {
    std::vector<std::string> cells;
    for (double v : r.point) cells.push_back(num(v));
    cells.push_back(num(r.margin));
    cells.push_back(r.error.value_or(""));
    rows.rows.push_back(std::move(cells));
  }
  if (!o.rows_path.empty()) {
    std::ofstream f(o.rows_path);
    if (!f) throw DomainError("cannot open rows file '" + o.rows_path + "'");
    f << rows.csv();
  }
  text = o.format == "csv" ? rows.csv() : render(io::to_json(report));
  return report.passed ? kOk : kAccuracyError;
}

Table sweep_table(const Options& o) {
  const std::string& kind = o.sweep_kind;
  const auto cfg = o.quad();
  Table table;
  auto axis = [&](double lo, double hi, double step) {
    return lemma::Axis::stepped("x", o.from.value_or(lo), o.to.value_or(hi), o.step.value_or(step))
        .values;
  };

  if (kind == "bound") {
    const auto alphas = axis(0.05, 0.95, 0.05);
    table.columns = {"alpha", "lower", "upper", "gap", "quadrature_err", "error"};
    table.rows.resize(alphas.size());
    table.records.resize(alphas.size());
    parallel_for(alphas.size(), [&](std::size_t i) {
      const double a = alphas[i];
      try {
        const auto ub = wco::hinf_upper_bound(a, cfg);
        const double lo = wco::hinf_lower_bound(a);
        table.rows[i] = {num(a), num(lo), num(ub.value), num(ub.value - lo),
                         num(ub.quadrature_err), ""};
        table.records[i] = {{"alpha", a},       {"lower", lo},
                            {"upper", ub.value}, {"gap", ub.value - lo},
                            {"quadrature_err", ub.quadrature_err}, {"error", nullptr}};
      } catch (const std::exception& e) {
        table.rows[i] = {num(a), "", "", "", "", e.what()};
        table.records[i] = {{"alpha", a}, {"error", e.what()}};
      }
    });
  } else if (kind == "apref") {
    const auto ps = axis(2.1, 3.9, 0.1);
    table.columns = {"p", "norm", "error"};
    for (double p : ps) {
      try {
        const double v = ap_reference(p)["upper"].get<double>();
        table.rows.push_back({num(p), num(v), ""});
        table.records.push_back({{"p", p}, {"norm", v}, {"error", nullptr}});
      } catch (const std::exception& e) {
        table.rows.push_back({num(p), "", e.what()});
        table.records.push_back({{"p", p}, {"error", e.what()}});
      }
    }
  } else if (kind == "tnorm") {
    const double a = need(o.alpha, "--alpha");
    const auto ts = axis(0.01, 0.99, 0.01);
    table.columns = {"alpha", "t", "regime", "x0", "value", "error"};
    for (double t : ts) {
      try {
        const auto b = wco::tt_norm(a, t);
        table.rows.push_back({num(a), num(t), std::string(wco::to_string(b.regime)),
                              b.x0 ? num(*b.x0) : "", num(b.value), ""});
        table.records.push_back(io::to_json(b));
      } catch (const std::exception& e) {
        table.rows.push_back({num(a), num(t), "", "", "", e.what()});
        table.records.push_back({{"alpha", a}, {"t", t}, {"error", e.what()}});
      }
    }
  } else {
    throw DomainError("unknown sweep '" + kind + "' (expected bound, apref or tnorm)");
  }
  return table;
}

std::string cmd_sweep(const Options& o) {
  const Table t = sweep_table(o);
  if (o.format == "csv") return t.csv();
  return render(json{{"sweep", o.sweep_kind}, {"rows", t.records}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"hilbertnorm: Hilbert matrix operator norms on Bergman and growth spaces"};
  app.name("hilbertnorm");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--tol", o.tol, "quadrature target absolute tolerance")->check(CLI::PositiveNumber);
  app.add_option("--quad", o.quad_method, "quadrature method")
      ->check(CLI::IsMember({"tanh_sinh", "adaptive_gk"}));
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", o.out_path, "write output to this path");

  auto* apply = app.add_subcommand("apply", "apply the Hilbert matrix operator at a point");
  apply->add_option("--method", o.method, "coeffs or integral")
      ->check(CLI::IsMember({"coeffs", "integral"}));
  apply->add_option("--coeffs", o.coeffs_path, "JSON file of [re, im] coefficient pairs");
  apply->add_option("--falpha", o.falpha, "use f_alpha(z) = (1-z)^-alpha as input");
  apply->add_option("--n", o.n_terms, "terms of f_alpha for the coefficient route")
      ->check(CLI::PositiveNumber);
  apply->add_option("--m", o.m_terms, "output terms for the coefficient route (0 = input length)");
  apply->add_option("--at", o.at, "evaluation point re,im");
  apply->add_option("--request", o.request_path, "JSON request {op, method, input, at}");

  auto* norm = app.add_subcommand("norm", "numerical A^p or growth-space norm of a function");
  norm->add_option("--space", o.space, "ap or hinf")->required();
  norm->add_option("--p", o.p, "Bergman exponent");
  norm->add_option("--alpha", o.alpha, "growth-space exponent");
  norm->add_option("--coeffs", o.coeffs_path, "JSON file of [re, im] coefficient pairs");
  norm->add_option("--falpha", o.falpha, "use f_gamma(z) = (1-z)^-gamma in closed form");
  norm->add_option("--radial", o.radial, "radial grid size (hinf)");
  norm->add_option("--angular", o.angular, "angular grid size (hinf)");

  auto* tnorm = app.add_subcommand("tnorm", "norm of the weighted composition operator T_t");
  tnorm->add_option("--alpha", o.alpha)->required();
  tnorm->add_option("--t", o.t)->required();

  auto* bound = app.add_subcommand("bound", "lower and upper bounds for the operator norm");
  bound->add_option("--space", o.space, "ap or hinf (default hinf)");
  bound->add_option("--alpha", o.alpha);
  bound->add_option("--p", o.p);

  auto* verify = app.add_subcommand("verify", "run a lemma verification sweep");
  verify->add_option("lemma", o.lemma_name, "beta_bound, beta_2p or Fp_nonpositive")->required();
  verify->add_option("--rows", o.rows_path, "also write (point, margin) rows as CSV here");

  auto* sweep = app.add_subcommand("sweep", "tabulate bounds or norms over a parameter range");
  sweep->add_option("kind", o.sweep_kind, "bound, apref or tnorm")->required();
  sweep->add_option("--from", o.from);
  sweep->add_option("--to", o.to);
  sweep->add_option("--step", o.step);
  sweep->add_option("--alpha", o.alpha, "fixed alpha for the tnorm sweep");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kDomainError;
  }

  try {
    std::string text;
    int code = kOk;
    if (apply->parsed()) {
      text = cmd_apply(o);
    } else if (norm->parsed()) {
      text = cmd_norm(o);
    } else if (tnorm->parsed()) {
      text = cmd_tnorm(o);
    } else if (bound->parsed()) {
      text = cmd_bound(o);
    } else if (verify->parsed()) {
      code = cmd_verify(o, text);
    } else if (sweep->parsed()) {
      text = cmd_sweep(o);
    }
    emit(o, text, out);
    return code;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << '\n';
    out << render(json{{"error", e.what()},
                       {"best_estimate", e.best_estimate()},
                       {"err_estimate", e.err_estimate()}});
    return kAccuracyError;
  } catch (const EvaluationError& e) {
    err << "evaluation error: " << e.what() << '\n';
    out << render(json{{"error", e.what()}, {"abscissa", e.abscissa()}});
    return kAccuracyError;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kAccuracyError;
  }
}

}  // namespace hilbertnorm::cli
