#pragma once

#include <json.hpp>

#include "bfc/boson.h"
#include "bfc/fermion.h"
#include "bfc/geometric.h"
#include "bfc/verify.h"

namespace bfc::json_io {

using nlohmann::json;

// [{"charge": m, "partition": [..], "coeff": "p/q"}, ...]
json to_json(const FermionState& s);
FermionState fermion_from_json(const json& j);

// [{"q": m, "p": {"1": 3, "2": 1}, "coeff": "p/q"}, ...]
json to_json(const BosonPolynomial& f);
BosonPolynomial boson_from_json(const json& j);

// {"n": n, "restrictions": {"[2,1]": "3*t^3", ...}}
json to_json(const LocalizedClass& beta);
LocalizedClass localized_from_json(const json& j);

// {"coefficients": {"[1]": "t", ...}}
json to_json(const QuiverClass& c);
QuiverClass quiver_from_json(const json& j);

json to_json(const verify::Report& r);

}  // namespace bfc::json_io
