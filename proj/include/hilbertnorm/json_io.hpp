#pragma once

#include <json.hpp>

#include "hilbertnorm/function_space.hpp"
#include "hilbertnorm/lemma_verify.hpp"
#include "hilbertnorm/wco_norms.hpp"

namespace hilbertnorm::io {

using nlohmann::json;

// TaylorFunction <-> [[re, im], ...]
json to_json(const TaylorFunction& f);
TaylorFunction taylor_from_json(const json& j);
TaylorFunction read_taylor_file(const std::string& path);

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

// {space, value, grid, tail_bound}
json to_json(const NormEstimate& n);
json to_json(const wco::TtNormBreakdown& b);
// {space, alpha, lower, upper, gap, exact, regime_split_t, quadrature_err, ...}
json to_json(const wco::HinfUpperBound& ub);
// Report without the per-point rows.
json to_json(const lemma::VerificationReport& r);

}  // namespace hilbertnorm::io
