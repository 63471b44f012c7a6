#pragma once

#include <json.hpp>

#include "polylab/assembly.hpp"
#include "polylab/quilt.hpp"

namespace polylab {

using Json = nlohmann::json;

Json to_json(const Dyadic& d);
Dyadic dyadic_from_json(const Json& j);

Json to_json(const TorusInterval& iv);
TorusInterval interval_from_json(const Json& j);

Json to_json(const TorusRectangle& r);
TorusRectangle rect_from_json(const Json& j);

Json to_json(const Quilt& q);
Quilt quilt_from_json(const Json& j);

Json to_json(const QuiltReport& r);
Json to_json(const BlockReport& r);
Json to_json(const AssemblyReport& r);

// "a", "a/b" (b a power of two) or {"num":..,"exp":..}
Dyadic parse_dyadic(const std::string& text);

std::string assembly_csv(const AssemblyReport& r);

}  // namespace polylab
