#include "ftl/service.hpp"

#include <httplib.h>

#include "ftl/error.hpp"

namespace ftl {

namespace {

struct BadRequest {
  ApiResponse response;
};

Json parse_body(const std::string& body) {
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw BadRequest{api_error(400, "malformed_json", e.what())};
  }
}

ApiResponse gesture_error(const Error& e, const std::string& field) {
  Json detail{{"field", field}, {"reason", std::string(to_string(e.code()))}};
  if (e.index()) detail["point_index"] = *e.index();
  return api_error(400, "invalid_gesture", e.what(), std::move(detail));
}

SampledGesture gesture_field(const Json& body, const std::string& field) {
  if (!body.is_object() || !body.contains(field)) {
    throw BadRequest{api_error(400, "invalid_gesture", "request lacks '" + field + "'",
                               Json{{"field", field}})};
  }
  try {
    return gesture_from_json(body[field]).gesture;
  } catch (const Error& e) {
    throw BadRequest{gesture_error(e, field)};
  }
}

std::size_t n_field(const Json& body) {
  if (!body.contains("n") || body["n"].is_null()) return kDefaultResampleN;
  const Json& n = body["n"];
  if (!n.is_number_integer() || n.get<long long>() < 2) {
    throw BadRequest{api_error(422, "invalid_n", "n must be an integer >= 2")};
  }
  return static_cast<std::size_t>(n.get<long long>());
}

Mode mode_field(const Json& body) {
  if (!body.contains("mode") || body["mode"].is_null()) return Mode::Uniform;
  if (body["mode"].is_string()) {
    if (auto m = parse_mode(body["mode"].get<std::string>())) return *m;
  }
  throw BadRequest{api_error(400, "invalid_mode", "mode must be 'uniform' or 'weighted'")};
}

template <class Fn>
ApiResponse guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const BadRequest& bad) {
    return bad.response;
  } catch (const Error& e) {
    return api_error(400, std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    return api_error(500, "internal", e.what());
  }
}

}  // namespace

ApiResponse api_error(int status, std::string code, std::string message, Json detail) {
  Json err{{"code", std::move(code)}, {"message", std::move(message)}};
  if (!detail.is_null()) err["detail"] = std::move(detail);
  return {status, Json{{"error", std::move(err)}}};
}

Service::Service(ServiceConfig config) : config_(std::move(config)) {
  if (!config_.store_path.empty() && std::filesystem::exists(config_.store_path)) {
    store_ = store_load(config_.store_path);
  }
}

ApiResponse Service::distance(const std::string& body) const {
  return guarded([&] {
    const Json req = parse_body(body);
    const SampledGesture f = gesture_field(req, "f");
    const SampledGesture g = gesture_field(req, "g");
    const std::size_t n = n_field(req);
    const Mode mode = mode_field(req);
    const auto fr = resample_uniform(f, n);
    const auto gr = resample_uniform(g, n);
    return ApiResponse{200, report_to_json(dissimilarity(fr, gr, mode))};
  });
}

ApiResponse Service::recognize(const std::string& body) const {
  return guarded([&] {
    const Json req = parse_body(body);
    const SampledGesture candidate = gesture_field(req, "gesture");
    const std::size_t n = n_field(req);
    const Mode mode = mode_field(req);
    if (store_.empty()) {
      return api_error(409, "empty_store", "no templates stored; add a template first");
    }
    try {
      return ApiResponse{200, recognition_to_json(ftl::recognize(candidate, store_, n, mode))};
    } catch (const Error& e) {
      if (e.code() == ErrorCode::EmptyStore) {
        return api_error(409, "empty_store", "no templates stored; add a template first");
      }
      throw BadRequest{gesture_error(e, "gesture")};
    }
  });
}

ApiResponse Service::list_templates() const {
  return guarded([&] { return ApiResponse{200, store_to_json(store_)}; });
}

ApiResponse Service::put_template(const std::string& id, const std::string& body) {
  return guarded([&] {
    if (id.empty()) throw BadRequest{api_error(400, "invalid_template", "template id is empty")};
    const Json req = parse_body(body);
    if (!req.is_object() || !req.contains("label") || !req["label"].is_string() ||
        req["label"].get<std::string>().empty()) {
      throw BadRequest{api_error(400, "invalid_template", "template needs a non-empty 'label'")};
    }
    if (!req.contains("points")) {
      throw BadRequest{api_error(400, "invalid_gesture", "template lacks 'points'",
                                 Json{{"field", "points"}})};
    }
    SampledGesture g = [&] {
      try {
        return points_from_json(req["points"]);
      } catch (const Error& e) {
        throw BadRequest{gesture_error(e, "points")};
      }
    }();
    Template t{id, req["label"].get<std::string>(), std::move(g)};
    Json out = template_to_json(t);
    std::lock_guard lock(write_mutex_);
    const bool replaced = store_.upsert(std::move(t));
    if (!config_.store_path.empty()) store_save(store_, config_.store_path);
    return ApiResponse{replaced ? 200 : 201, std::move(out)};
  });
}

ApiResponse Service::delete_template(const std::string& id) {
  return guarded([&] {
    std::lock_guard lock(write_mutex_);
    if (!store_.remove(id)) {
      return api_error(404, "not_found", "no template with id '" + id + "'");
    }
    if (!config_.store_path.empty()) store_save(store_, config_.store_path);
    return ApiResponse{204, nullptr};
  });
}

void Service::install(httplib::Server& server) {
  auto send = [](httplib::Response& res, const ApiResponse& r) {
    res.status = r.status;
    if (r.status == 204) return;
    res.set_content(r.body.dump(), "application/json");
  };

  server.set_post_routing_handler([origin = config_.cors_origin](const httplib::Request&,
                                                                 httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", origin);
  });
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, PUT, DELETE, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  server.Post("/api/distance", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, distance(req.body));
  });
  server.Post("/api/recognize", [this, send](const httplib::Request& req, httplib::Response& res) {
    send(res, recognize(req.body));
  });
  server.Get("/api/templates", [this, send](const httplib::Request&, httplib::Response& res) {
    send(res, list_templates());
  });
  server.Put(R"(/api/templates/([^/]+))",
             [this, send](const httplib::Request& req, httplib::Response& res) {
               send(res, put_template(req.matches[1], req.body));
             });
  server.Delete(R"(/api/templates/([^/]+))",
                [this, send](const httplib::Request& req, httplib::Response& res) {
                  send(res, delete_template(req.matches[1]));
                });

  if (config_.static_dir && std::filesystem::is_directory(*config_.static_dir)) {
    server.set_mount_point("/", config_.static_dir->string());
  }
  server.set_error_handler([send](const httplib::Request& req, httplib::Response& res) {
    if (res.status == 404 && req.path.rfind("/api/", 0) == 0 && res.body.empty()) {
      send(res, api_error(404, "not_found", "no route for " + req.method + " " + req.path));
    }
  });
}

}  // namespace ftl
