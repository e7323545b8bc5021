#ifndef EQKIT_SERIALIZE_HPP
#define EQKIT_SERIALIZE_HPP

#include "json.hpp"

#include "eqkit/algebra.hpp"
#include "eqkit/group.hpp"

namespace eqkit {

// {"label": str, "order": n, "table": [[int]]}
nlohmann::ordered_json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::ordered_json& j);

// {"size": n, "ops": {"*": [[int]], "inv": [int], "1": int, ...}}; op
// arities are recovered from the value shapes, and op order from key order
// (which is why inputs must be parsed as ordered_json).
nlohmann::ordered_json algebra_to_json(const FiniteAlgebra& a);
FiniteAlgebra algebra_from_json(const nlohmann::ordered_json& j);

}  // namespace eqkit

#endif
