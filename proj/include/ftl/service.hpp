#pragma once

// HTTP/JSON front end over the recognizer.
//
//   POST   /api/distance        {f, g, n?, mode?}  -> report
//   POST   /api/recognize       {gesture, n?, mode?} -> ranking
//   GET    /api/templates                           -> {"templates": [...]}
//   PUT    /api/templates/{id}  {label, points}     -> stored template
//   DELETE /api/templates/{id}                      -> 204
//
// Every non-2xx response body is {"error": {"code", "message", "detail"?}}.

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>

#include "ftl/json_io.hpp"
#include "ftl/recognizer.hpp"

namespace httplib {
class Server;
}

namespace ftl {

struct ServiceConfig {
  std::filesystem::path store_path;
  std::optional<std::filesystem::path> static_dir;
  std::string cors_origin = "*";
};

struct ApiResponse {
  int status = 200;
  Json body;  // null for 204
};

ApiResponse api_error(int status, std::string code, std::string message, Json detail = nullptr);

class Service {
 public:
  /// Loads the store when the file exists; starts empty otherwise.
  explicit Service(ServiceConfig config);

  ApiResponse distance(const std::string& body) const;
  ApiResponse recognize(const std::string& body) const;
  ApiResponse list_templates() const;
  ApiResponse put_template(const std::string& id, const std::string& body);
  ApiResponse delete_template(const std::string& id);

  /// Registers the routes, CORS handling and the static mount on `server`.
  void install(httplib::Server& server);

  const TemplateStore& store() const { return store_; }
  const ServiceConfig& config() const { return config_; }

 private:
  ServiceConfig config_;
  TemplateStore store_;
  std::mutex write_mutex_;  // serializes mutate-then-persist
};

}  // namespace ftl
