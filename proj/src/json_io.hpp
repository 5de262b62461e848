#pragma once

#include <json.hpp>

#include "suite.hpp"
#include "witness.hpp"

namespace ceswit {

using nlohmann::json;

// Wire formats: complex scalar as [re, im]; vector as a list of scalars;
// matrix as {"rows", "cols", "data": row-major scalars}.
json complex_to_json(const Complex& z);
Complex complex_from_json(const json& j);

json vec_to_json(const CVec& v);
CVec vec_from_json(const json& j);

json mat_to_json(const CMat& a);
CMat mat_from_json(const json& j);

json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const json& j, const ToleranceConfig& tol = {});

json family_spec_to_json(const FamilySpec& f);
FamilySpec family_spec_from_json(const json& j);

json ces_certificate_to_json(const CesCertificate& c);
json product_vector_to_json(const ProductVector& p);
json span_report_to_json(const SpanReport& r);
json witness_pair_to_json(const WitnessPair& w);
json optimality_report_to_json(const OptimalityReport& r);
json suite_report_to_json(const SuiteReport& r);

}  // namespace ceswit
