#include "hilbertnorm/json_io.hpp"

#include <cmath>
#include <fstream>

#include "hilbertnorm/error.hpp"

namespace hilbertnorm::io {
namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw DomainError("expected a complex number as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const TaylorFunction& f) {
  json out = json::array();
  for (const auto& a : f.coeffs()) out.push_back(complex_to_json(a));
  return out;
}

TaylorFunction taylor_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw DomainError("coefficients must be a non-empty JSON array of [re, im] pairs");
  }
  std::vector<cplx> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(complex_from_json(e));
  return TaylorFunction(std::move(c));
}

TaylorFunction read_taylor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open coefficient file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DomainError("coefficient file '" + path + "' is not valid JSON: " + e.what());
  }
  return taylor_from_json(j);
}

json to_json(const NormEstimate& n) {
  return {{"space", n.space.name()},
          {n.space.kind == SpaceSpec::Kind::bergman ? "p" : "alpha", n.space.exponent},
          {"value", n.value},
          {"grid",
           {{"kind", n.grid.kind},
            {"radial", n.grid.radial},
            {"angular", n.grid.angular},
            {"r_max", n.grid.r_max},
            {"evals", n.grid.evals},
            {"quadrature_err", n.grid.quad_err}}},
          {"tail_bound", n.tail_bound}};
}

json to_json(const wco::TtNormBreakdown& b) {
  json out = {{"alpha", b.alpha},
              {"t", b.t},
              {"regime", std::string(wco::to_string(b.regime))},
              {"x0", optional_number(b.x0)},
              {"value", b.value}};
  if (b.alpha > 0.5) out["threshold_t"] = wco::threshold_tstar(b.alpha);
  return out;
}

json to_json(const wco::HinfUpperBound& ub) {
  const double lower = wco::hinf_lower_bound(ub.alpha);
  json out = {{"space", "hinf"},
              {"alpha", ub.alpha},
              {"lower", lower},
              {"upper", ub.value},
              {"gap", ub.value - lower},
              {"exact", ub.exact},
              {"regime_split_t", optional_number(ub.regime_split_t)},
              {"quadrature_err", ub.quadrature_err},
              {"integral_route", ub.integral_value},
              {"evals", ub.evals}};
  if (std::abs(ub.alpha - 2.0 / 3.0) < 1e-12) {
    out["note"] = "alpha = 2/3 is the boundary between the exact-norm and upper-bound ranges";
  }
  return out;
}

json to_json(const lemma::VerificationReport& r) {
  json axes = json::array();
  for (const auto& a : r.grid.axes) {
    axes.push_back({{"name", a.name},
                    {"spacing", a.spacing},
                    {"count", a.values.size()},
                    {"min", a.values.front()},
                    {"max", a.values.back()}});
  }
  return {{"lemma_id", std::string(lemma::to_string(r.lemma_id))},
          {"grid", {{"axes", axes}, {"points", r.points}}},
          {"tolerance", r.tolerance},
          {"worst_margin", finite_or_null(r.worst_margin)},
          {"worst_point", r.worst_point},
          {"passed", r.passed},
          {"error", r.error ? json(*r.error) : json(nullptr)}};
}

}  // namespace hilbertnorm::io
