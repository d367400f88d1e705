#pragma once

#include <json.hpp>

#include "wdeg/gamma.hpp"
#include "wdeg/ineq.hpp"

namespace wdeg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

/// An integer for Gamma = Z, an array for Z^k, "-inf" for -infinity.
Json to_json(const Gamma& g);
Json to_json(const Degree& d);
Json to_json(const Quantity& q);
Json to_json(const IneqReport& report);
Json to_json(const PlaneBoundResult& result);

}  // namespace wdeg
