#pragma once

// JSON renderings of the library's value types. Objects use nlohmann's
// default std::map storage, so keys always come out sorted.

#include <json.hpp>

#include "cubic/hilbert_classifier.hpp"
#include "cubic/quadric.hpp"
#include "cubic/surface_cohomology.hpp"
#include "cubic/weyl.hpp"

namespace cubic {

using Json = nlohmann::json;

/// [a, b1, ..., b6]
Json class_json(const DivisorClass& d);
/// Inverse of class_json; throws DomainError on anything but 7 integers.
DivisorClass class_from_json(const Json& j);

Json standard_form_json(const StandardForm& s);
Json analysis_json(const DivisorClass& input, const SystemAnalysis& s);
Json core_json(const CoreCheck& c);
Json report_json(const FamilyReport& r);
Json quadric_json(const QuadricFamily& f);

}  // namespace cubic
