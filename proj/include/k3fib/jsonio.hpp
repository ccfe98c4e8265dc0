#pragma once

#include "k3fib/fibrations.hpp"
#include "k3fib/heterotic.hpp"
#include "k3fib/moduli.hpp"
#include "k3fib/mpoly.hpp"
#include "k3fib/wmodel.hpp"

#include <json.hpp>

namespace k3fib {

using json = nlohmann::json;

json to_json(const Rat& r);
json to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);
json to_json(const ParamPoint& p);
ParamPoint param_from_json(const json& j);
json to_json(const InvariantPoint& J);
InvariantPoint invariant_from_json(const json& j);
json to_json(const FiberConfig& cfg);
json to_json(const WModel& m);
json to_json(const IdentityReport& r);
json to_json(const BranchReport& r);

}  // namespace k3fib
