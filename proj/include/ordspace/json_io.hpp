#pragma once

#include <json.hpp>

#include "ordspace/classify.hpp"
#include "ordspace/groups.hpp"
#include "ordspace/order_param.hpp"
#include "ordspace/ordering.hpp"

namespace ordspace {

using Json = nlohmann::json;

// Parsers throw InvalidDescriptorError on malformed input.

Group parse_group(const Json& j);
Json to_json(const Group& g);

OrderParam parse_param(const Json& j);
Json to_json(const OrderParam& p);

/// Parses an ordering descriptor living on g.
Ordering parse_ordering(const Group& g, const Json& j);
Json to_json(const Ordering& o);

/// Accepts {"n":..,"scalars":{"i,j":..}} or an array of consecutive scalars.
SeriesDescriptor parse_series(const Json& j);
Json to_json(const SeriesDescriptor& d);

/// Normal-form coordinates, e.g. {"k":0,"s":"2"} for F1.
Json element_json(const Group& g, const Element& x);

}  // namespace ordspace
