#include "ftl/json_io.hpp"

#include <set>

#include "ftl/error.hpp"

namespace ftl {

namespace {

double number_field(const Json& obj, const char* key, std::size_t index) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number()) {
    throw Error(ErrorCode::MalformedGesture,
                "point " + std::to_string(index) + " lacks numeric field '" + key + "'", index);
  }
  return it->get<double>();
}

}  // namespace

SampledGesture points_from_json(const Json& points) {
  if (!points.is_array()) {
    throw Error(ErrorCode::MalformedGesture, "'points' must be an array");
  }
  if (points.empty()) {
    throw Error(ErrorCode::TooFewPoints, "gesture has no points");
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (!points[k].is_object()) {
      throw Error(ErrorCode::MalformedGesture, "point " + std::to_string(k) + " is not an object", k);
    }
  }
  const bool timed = points[0].contains("t");
  if (timed) {
    std::vector<TimedPoint> pts;
    pts.reserve(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      pts.push_back({number_field(points[k], "t", k),
                     {number_field(points[k], "x", k), number_field(points[k], "y", k)}});
    }
    return validate_sample(std::move(pts));
  }
  std::vector<RawPoint> raw;
  raw.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k].contains("t")) {
      throw Error(ErrorCode::MalformedGesture,
                  "point " + std::to_string(k) + " mixes 't' with 'ms' timestamps", k);
    }
    raw.push_back({number_field(points[k], "ms", k),
                   {number_field(points[k], "x", k), number_field(points[k], "y", k)}});
  }
  return clean_stroke(raw);
}

GestureRecord gesture_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedGesture, "gesture must be a JSON object");
  GestureRecord rec{"", std::nullopt, [&] {
                      auto it = j.find("points");
                      if (it == j.end()) {
                        throw Error(ErrorCode::MalformedGesture, "gesture lacks 'points'");
                      }
                      return points_from_json(*it);
                    }()};
  if (auto it = j.find("id"); it != j.end()) {
    if (!it->is_string()) throw Error(ErrorCode::MalformedGesture, "'id' must be a string");
    rec.id = it->get<std::string>();
  }
  if (auto it = j.find("label"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw Error(ErrorCode::MalformedGesture, "'label' must be a string or null");
    rec.label = it->get<std::string>();
  }
  return rec;
}

Json points_to_json(const SampledGesture& g) {
  auto arr = Json::array();
  for (const auto& q : g.points()) {
    arr.push_back(Json{{"t", q.t}, {"x", q.p.x}, {"y", q.p.y}});
  }
  return arr;
}

Json gesture_to_json(const std::string& id, const std::optional<std::string>& label,
                     const SampledGesture& g) {
  Json j;
  j["id"] = id;
  j["label"] = label ? Json(*label) : Json(nullptr);
  j["points"] = points_to_json(g);
  return j;
}

Json template_to_json(const Template& t) { return gesture_to_json(t.id, t.label, t.gesture); }

Template template_from_json(const Json& j) {
  auto rec = gesture_from_json(j);
  if (rec.id.empty()) throw Error(ErrorCode::MalformedGesture, "template lacks an 'id'");
  if (!rec.label) throw Error(ErrorCode::MalformedGesture, "template lacks a 'label'", std::nullopt, rec.id);
  return {std::move(rec.id), std::move(*rec.label), std::move(rec.gesture)};
}

Json store_to_json(const TemplateStore& store) {
  auto arr = Json::array();
  for (const auto& t : store.snapshot()) arr.push_back(template_to_json(t));
  return Json{{"templates", std::move(arr)}};
}

TemplateStore store_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("templates") || !j["templates"].is_array()) {
    throw Error(ErrorCode::MalformedStore, "store must be an object with a 'templates' array");
  }
  std::vector<Template> templates;
  std::set<std::string> seen;
  for (std::size_t k = 0; k < j["templates"].size(); ++k) {
    const Json& entry = j["templates"][k];
    std::string id = "#" + std::to_string(k);
    if (entry.is_object() && entry.contains("id") && entry["id"].is_string()) {
      id = entry["id"].get<std::string>();
    }
    try {
      templates.push_back(template_from_json(entry));
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedStore, "template '" + id + "': " + e.what(), e.index(), id);
    }
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::MalformedStore, "duplicate template id '" + id + "'", std::nullopt, id);
    }
  }
  return TemplateStore(std::move(templates));
}

Json report_to_json(const DissimilarityReport& r) {
  return Json{{"value", r.value}, {"terms", r.terms}, {"mode", std::string(to_string(r.mode))}};
}

Json recognition_to_json(const RecognitionResult& r) {
  auto ranked = Json::array();
  for (const auto& m : r.ranked) {
    ranked.push_back(Json{{"label", m.label}, {"template_id", m.template_id}, {"distance", m.distance}});
  }
  auto skipped = Json::array();
  for (const auto& s : r.skipped) {
    skipped.push_back(Json{{"template_id", s.template_id}, {"reason", s.reason}});
  }
  return Json{{"ranked", std::move(ranked)}, {"skipped", std::move(skipped)}, {"resample_n", r.resample_n}};
}

Json multivector_to_json(const Multivector& m) {
  return Json{{"s", m.s}, {"x", m.x}, {"y", m.y}, {"i", m.i}};
}

Multivector multivector_from_json(const Json& j) {
  auto get = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
      throw Error(ErrorCode::InvalidArgument, std::string("multivector lacks '") + key + "'");
    }
    return j[key].get<double>();
  };
  return {get("s"), get("x"), get("y"), get("i")};
}

}  // namespace ftl
