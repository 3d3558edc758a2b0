#pragma once

#include "flagbundle/bundles.hpp"
#include "flagbundle/kt_cyt.hpp"
#include "flagbundle/parabolic.hpp"

#include <nlohmann/json.hpp>

#include <string_view>

namespace flagbundle {

using json = nlohmann::json;

/// Exact rationals serialise as integers when integral, else as "p/q" strings.
json rational_json(const Rational& q);
json weight_json(const Weight& w);
json roots_json(const std::vector<Root>& roots);

json to_json(const FlagInvariants& f, const ParabolicDatum& p);
/// {"base":"A3/{1,3}","ell":[-1]}
json to_json(const BundleVector& q);
BundleVector bundle_from_json(const json& j);
json to_json(const CytDatum& d);
json to_json(const AsthenoLocus& l);
json to_json(const Table1Row& r);
json to_json(const Table1& t);
json to_json(const SasakiPairReport& r);

}  // namespace flagbundle
