#pragma once

// nlohmann/json adapters for the library's value types. Rationals are always
// strings ("p/q", or "p" for integers) so no precision is lost.

#include <json.hpp>

#include "rectree/analysis.hpp"
#include "rectree/exact.hpp"
#include "rectree/recurrence.hpp"
#include "rectree/search.hpp"
#include "rectree/somos.hpp"
#include "rectree/tree.hpp"

namespace rectree {

using Json = nlohmann::ordered_json;

void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);

void to_json(Json& j, const ParamPoint& c);
void to_json(Json& j, const Recurrence& r);
void to_json(Json& j, const TreeNode& node);
void to_json(Json& j, const RecurrenceTree& t);
void to_json(Json& j, const LevelStats& s);
void to_json(Json& j, const SomosRun& run);
void to_json(Json& j, const ClosedFormReport& report);
void to_json(Json& j, const FactorWitness& w);
void to_json(Json& j, const ConjectureReport& report);

void to_json(Json& j, const IntRange& r);
void from_json(const Json& j, IntRange& r);
void to_json(Json& j, const Coefficients& k);
void from_json(const Json& j, Coefficients& k);
void to_json(Json& j, const SearchSpec& spec);
void from_json(const Json& j, SearchSpec& spec);
void to_json(Json& j, const SearchHit& hit);
void from_json(const Json& j, SearchHit& hit);
void to_json(Json& j, const SearchReport& report);
void from_json(const Json& j, SearchReport& report);
void to_json(Json& j, const SearchCheckpoint& cp);
void from_json(const Json& j, SearchCheckpoint& cp);

}  // namespace rectree
