#pragma once

// JSON views of results. Class counts and other unbounded integers are
// decimal strings; key order is fixed so output is byte-stable.

#include <json.hpp>

#include "wreath/actions.hpp"
#include "wreath/bounds.hpp"
#include "wreath/classcount.hpp"
#include "wreath/structure.hpp"

namespace wreath {

using Json = nlohmann::ordered_json;

Json to_json(const Quantity& q);
Json to_json(const CountResult& r);
Json to_json(const OrbitStats& s);
Json to_json(const BoundReport& r);
Json to_json(const SemiprimitiveReport& r);
Json to_json(const StructureReport& r);
Json to_json(const NumericInvariants& inv);
Json to_json(const BlockDecomposition& bd);
Json blocks_json(const std::vector<std::vector<Point>>& blocks);

/// Reads a decimal-string count back; throws InvalidArgument on anything else.
mpz_class count_from_json(const Json& j);

}  // namespace wreath
