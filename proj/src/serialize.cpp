#include "qc/serialize.hpp"

#include <stdexcept>

namespace qc {

namespace {

Json body_json(const Poly& p, long offset) {
    Json coeffs = Json::array();
    for (const Rational& c : p.coeffs()) coeffs.push_back(to_fraction_string(c));
    return Json{{"offset", offset}, {"coeffs", std::move(coeffs)}};
}

}  // namespace

Json to_json(const Poly& p) {
    return body_json(p, 0);
}

Json to_json(const LaurentPoly& l) {
    return body_json(l.body(), l.offset());
}

Json to_json(const RatFunc& r) {
    return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

Poly poly_from_json(const Json& j) {
    LaurentPoly l = laurent_from_json(j);
    if (l.offset() < 0) throw std::invalid_argument("poly_from_json: negative offset");
    return l.body().shifted(l.offset());
}

LaurentPoly laurent_from_json(const Json& j) {
    long offset = j.at("offset").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(rational_from_string(s.get<std::string>()));
    return LaurentPoly(Poly(std::move(coeffs)), offset);
}

RatFunc ratfunc_from_json(const Json& j) {
    return RatFunc::make(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

}  // namespace qc
