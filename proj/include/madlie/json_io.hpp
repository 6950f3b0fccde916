#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "madlie/chevalley.hpp"
#include "madlie/group.hpp"

namespace madlie {

using Json = nlohmann::json;

// Ring format: {"kind":"laurent","vars":["t"],"relations":[],"order":"degrevlex",
//               "point":{"a":"1"},"connected_reduced":true}; the last three
// keys are optional.
RingSpec::Ptr ring_from_json(const Json& j);
Json ring_to_json(const RingSpec& spec);

// {"type":"A","rank":2} or {"matrix":[[2,-1],[-1,2]]}.
CartanMatrix cartan_from_json(const Json& j);

// {"h":{"1":"1"},"e":{"alpha1":"t"},"f":{}}; h keys are 1-based coweight
// indices, e/f keys are root labels.  An explicitly negative label under "f"
// addresses that root directly.
LieElement element_from_json(const Json& j, const ChevalleyBasis::Ptr& basis,
                             const RingSpec::Ptr& spec);
Json element_to_json(const LieElement& x);

// {"defining_matrix":[["1","-t"],["0","1"]]} or
// {"word":[{"root":"alpha1","coeff":"t"},{"torus":1,"unit":"t"}]}.
GroupElement group_from_json(const Json& j, const ChevalleyBasis::Ptr& basis,
                             const RingSpec::Ptr& spec);
Json group_to_json(const GroupElement& g);

RingMatrix matrix_from_json(const Json& j, const RingSpec::Ptr& spec);
Json matrix_to_json(const RingMatrix& m);

Json rationals_to_json(const std::vector<Rational>& v);
Rational rational_from_json(const Json& j);

}  // namespace madlie
