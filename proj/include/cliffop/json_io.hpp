#pragma once
#include <json.hpp>

#include "cliffop/fock.hpp"
#include "cliffop/maxwell.hpp"

namespace cliffop {

using Json = nlohmann::ordered_json;

// Multivector: {"signature":[p,q],"terms":[{"blade":[j1,...],"coeff":"a/b"}]}
// with blade indices strictly increasing and rationals as "a/b" strings.
Json to_json(const RMulti& m);
RMulti multivector_from_json(const Json& j);

// Polynomial / weighted function:
// {"n":3,"signature":[0,3],"envelope":"-1/2","terms":
//   [{"exponents":[1,0,0],"multivector":{...}}]}
// A plain polynomial serializes with envelope "0".
Json to_json(const RPoly& p, const Rational& envelope = Rational(0));
Json to_json(const RWeighted& f);
RWeighted weighted_from_json(const Json& j);
RPoly poly_from_json(const Json& j);

Json to_json(const HermiteState& state);
Json to_json(const MaxwellSolution& sol);

Json identity_report_json(const IdentityReport& report);

}  // namespace cliffop
