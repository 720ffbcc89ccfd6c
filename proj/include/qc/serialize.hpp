#ifndef QC_SERIALIZE_HPP
#define QC_SERIALIZE_HPP

#include <json.hpp>

#include "qc/laurent.hpp"
#include "qc/poly.hpp"
#include "qc/ratfunc.hpp"

namespace qc {

/// ordered_json everywhere so emitted field order is fixed and output is
/// byte-reproducible across runs.
using Json = nlohmann::ordered_json;

/// {"offset": 0, "coeffs": ["num/den", ...]}; coeffs[i] is the coefficient of
/// q^(offset+i) as an exact fraction string. Zero serializes with empty coeffs.
Json to_json(const Poly& p);
Json to_json(const LaurentPoly& l);

/// {"num": {...}, "den": {...}} with each side in the Poly layout above.
Json to_json(const RatFunc& r);

Poly poly_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);

}  // namespace qc

#endif
