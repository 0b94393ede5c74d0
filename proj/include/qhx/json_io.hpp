#pragma once

// JSON forms of the public types. Quaternion scalars travel as decimal
// strings ("p/q" in exact mode); complex entries as [re, im] pairs; the
// point at infinity as the string "inf". Object key order is fixed so that
// repeated runs serialize byte-identically.

#include <string>

#include <json.hpp>

#include "qhx/algebra.hpp"
#include "qhx/crossratio.hpp"
#include "qhx/holomorphy.hpp"
#include "qhx/matgroup.hpp"
#include "qhx/qht.hpp"
#include "qhx/quaternion.hpp"

namespace qhx::jsonio {

using Json = nlohmann::ordered_json;

std::string format_double(double v); // shortest round-trip decimal

Json to_json(const Quat& q);
Json to_json(const QuatQ& q);
Quat quat_from_json(const Json& j);

Json to_json(const matgroup::Mat3& m);
matgroup::Mat3 mat3_from_json(const Json& j);

Json to_json(const matgroup::GroupElement& g);
Json to_json(const matgroup::SubgroupClassification& c);

Json to_json(const QhtTransform<double>& t);
QhtTransform<double> transform_from_json(const Json& j);

Json to_json(const FixedPointResult<double>& r);
Json to_json(const holo::HolomorphyVerdict& v);

Json to_json(const mobius::ExtendedComplex& z);
mobius::ExtendedComplex extended_from_json(const Json& j);

Json to_json(const symop::CommutatorTable& t);
// symbols: the catalog whose basis names label the coefficients.
Json to_json(const symop::DiscrepancyReport& r, symop::Catalog symbols);

// Coefficient maps keyed by basis symbol, e.g. {"x2": "-1", "x5": "1"}.
Json coeff_map_json(symop::Catalog c, const symop::CoeffMap& m);

} // namespace qhx::jsonio
