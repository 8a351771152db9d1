#pragma once

#include <json.hpp>

#include "domset/bounds.hpp"
#include "domset/construction.hpp"
#include "domset/params.hpp"
#include "domset/solver.hpp"

namespace domset {

using Json = nlohmann::ordered_json;

/// [k, k', k'']
Json to_json(const ParamTriple& p);
ParamTriple triple_from_json(const Json& j);

/// {"lb_general", "lb_kp_zero", "prior", "ub_construct", "applicability", ...}
Json to_json(const BoundReport& r);

/// {"status","gamma","witness","nodes","elapsed_ms"}
Json to_json(const SolveResult& r);

/// {"part","size","valid"}
Json to_json(const Construction& c, bool valid);

/// {"dominating", "violations": [{"vertex","condition","have","need"}...]}
Json violations_to_json(const std::vector<Violation>& violations);

}  // namespace domset
