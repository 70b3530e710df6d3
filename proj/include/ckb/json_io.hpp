#pragma once

#include <string>

#include <json.hpp>

#include "ckb/genfun.hpp"
#include "ckb/ideal.hpp"
#include "ckb/laurent.hpp"

namespace ckb {

using ordered_json = nlohmann::ordered_json;

// {"j": "coefficient"} with exponents in increasing numeric order and
// coefficients as decimal strings (they exceed 64 bits early).
ordered_json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const ordered_json& j);

// {"d": int, "method": str, "w": [{"n": int, "coeffs": {...}}]}
ordered_json weight_table_to_json(const WeightTable& table);
WeightTable weight_table_from_json(const ordered_json& j);

std::string laurent_to_csv(const LaurentPoly& p);
std::string array_to_csv(const ArrayA& array);
ordered_json array_to_json(const ArrayA& array);

ordered_json series_to_json(const SeriesX& s);

// Ideal-membership witness: every generator's cofactor plus the quotient
// Q0 / P, as monomial/coefficient pairs over the jet variables.
ordered_json certificate_to_json(const CertificateData& data);

}  // namespace ckb
