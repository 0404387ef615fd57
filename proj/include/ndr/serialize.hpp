#ifndef NDR_SERIALIZE_HPP
#define NDR_SERIALIZE_HPP

#include "ndr/algebra.hpp"
#include "ndr/closure.hpp"
#include "ndr/riccati.hpp"
#include "ndr/schrodinger.hpp"

#include <json.hpp>

namespace ndr {

using json = nlohmann::json;

/// Elements serialize as arrays of dim numbers; exact non-integer rationals
/// become "p/q" strings so nothing is lost in transit.
json element_to_json(const Element<Rational>& e);
Element<Rational> element_from_json(const json& j, Alg alg);

json coeff_fn_to_json(const CoeffFn& f);
CoeffFn coeff_fn_from_json(const json& j, Alg alg);

json riccati_spec_to_json(const RiccatiSpec& spec);
RiccatiSpec riccati_spec_from_json(const json& j);

json schrodinger_spec_to_json(const SchrodingerSpec& spec);
SchrodingerSpec schrodinger_spec_from_json(const json& j);

json law_report_to_json(const LawReport& rep);
json closure_report_to_json(const ClosureReport& rep);

/// Thrown on malformed spec files; includes the offending key or value.
class spec_format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace ndr

#endif
