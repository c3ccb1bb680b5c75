#pragma once

#include "bordism/borel.hpp"
#include "bordism/fixedring.hpp"
#include "bordism/manifold.hpp"
#include "bordism/realizability.hpp"

#include <json.hpp>

#include <string>

namespace bordism {

using Json = nlohmann::json;

Json to_json(const MuElement& x);
MuElement mu_from_json(const Json& j, const ContextPtr& ctx);

Json to_json(const BorelSeries& s);
BorelSeries borel_from_json(const Json& j, const ContextPtr& ctx);

Json to_json(const LocalizedBorel& l);
LocalizedBorel localized_from_json(const Json& j, const ContextPtr& ctx);

Json to_json(const FixedDatum& x);
FixedDatum fixed_from_json(const Json& j, const ContextPtr& ctx, int rank);

Json to_json(const ManifoldExpr& m);
ManifoldExpr manifold_from_json(const Json& j);
ManifoldExpr manifold_from_sexpr(const std::string& s);

Json to_json(const Verdict& v);

} // namespace bordism
