#ifndef KOSZULDUAL_JSON_HPP
#define KOSZULDUAL_JSON_HPP

#include <json.hpp>

#include "koszuldual/classifier.hpp"
#include "koszuldual/covering.hpp"
#include "koszuldual/dual.hpp"
#include "koszuldual/homotopy.hpp"
#include "koszuldual/presentation.hpp"
#include "koszuldual/reflections.hpp"
#include "koszuldual/resolution.hpp"

namespace koszuldual {

// key order is insertion order, so output is byte-stable
using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

/// Appends "schema_version" as the last key.
Json with_schema(Json j);

Json to_json(const QuadraticPresentation& a);
Json to_json(const Quiver& q);
Json to_json(const DerivedClass& c);  // {"class":"discrete","r":1,"n":4,"m":4}
Json to_json(const FinitenessReport& f);
Json to_json(const KoszulVerdict& k, const Quiver& q);
Json to_json(const GldimReport& g);
Json to_json(const ResolutionReport& r, const Quiver& q);
Json to_json(const Pi1Report& p);
Json to_json(const SimplyConnectedReport& s);
Json to_json(const SmashQuiver& s);
Json to_json(const GradabilityReport& g);
Json to_json(const DualSmashReport& d);
Json to_json(const QuiverEquivalenceReport& r);
Json to_json(const EquivalenceVerdict& v);
Json to_json(const AbsorbedCycle& c);

/// Inverse readers; unknown or missing fields throw InvalidArgument.
QuadraticPresentation presentation_from_json(const Json& j);
/// Gives the normal-form class (delta = r, balance = n - m) for cycle classes.
DerivedClass class_from_json(const Json& j);

}  // namespace koszuldual

#endif
