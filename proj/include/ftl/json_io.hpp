#pragma once

// JSON forms of the library types.
//
//   gesture:    {"id": str, "label": str|null, "points": [{"t", "x", "y"}, ...]}
//               points may carry "ms" instead of "t"; such strokes go
//               through clean_stroke()
//   store:      {"templates": [gesture, ...]}
//   report:     {"value", "terms", "mode"}
//   multivector {"s", "x", "y", "i"}

#include <optional>
#include <string>

#include <json.hpp>

#include "ftl/clifford.hpp"
#include "ftl/convergence.hpp"
#include "ftl/recognizer.hpp"

namespace ftl {

using Json = nlohmann::ordered_json;

struct GestureRecord {
  std::string id;
  std::optional<std::string> label;
  SampledGesture gesture;
};

/// Throws MalformedGesture for schema problems and the validation error
/// (carrying the point index) for invalid samples.
GestureRecord gesture_from_json(const Json& j);
SampledGesture points_from_json(const Json& points);
Json points_to_json(const SampledGesture& g);
Json gesture_to_json(const std::string& id, const std::optional<std::string>& label,
                     const SampledGesture& g);

Json template_to_json(const Template& t);
Template template_from_json(const Json& j);

Json store_to_json(const TemplateStore& store);
/// Throws MalformedStore naming the offending template.
TemplateStore store_from_json(const Json& j);

Json report_to_json(const DissimilarityReport& r);
Json recognition_to_json(const RecognitionResult& r);
Json multivector_to_json(const Multivector& m);
Multivector multivector_from_json(const Json& j);

}  // namespace ftl
