// Command-line front end: distances, shape values, convergence sweeps,
// fixture generation, recognition and the HTTP service.
//
// Exit codes: 0 success, 2 user/input error, 1 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>

#include "ftl/convergence.hpp"
#include "ftl/error.hpp"
#include "ftl/json_io.hpp"
#include "ftl/recognizer.hpp"
#include "ftl/service.hpp"

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ftl::Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return ftl::Json::parse(buf.str());
  } catch (const ftl::Json::parse_error& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

ftl::SampledGesture read_gesture(const std::string& path) {
  try {
    return ftl::gesture_from_json(read_json_file(path)).gesture;
  } catch (const ftl::Error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

ftl::Mode mode_or_throw(const std::string& text) {
  if (auto m = ftl::parse_mode(text)) return *m;
  throw UsageError("mode must be 'uniform' or 'weighted'");
}

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shape-based gesture dissimilarity (ftl / wftl)"};
  app.require_subcommand(1);

  // dist
  std::string f_path, g_path, dist_mode = "uniform";
  std::size_t dist_n = 0;
  auto* dist = app.add_subcommand("dist", "Dissimilarity of two gesture files");
  dist->add_option("f", f_path, "First gesture JSON")->required();
  dist->add_option("g", g_path, "Second gesture JSON")->required();
  dist->add_option("--n", dist_n, "Resample both gestures to n intervals first");
  dist->add_option("--mode", dist_mode, "uniform | weighted");

  // converge
  std::string pair = "circle:line", conv_mode = "uniform", kind = "ftl", out_path, format = "csv";
  std::vector<std::size_t> ns{100, 1000, 10000};
  std::uint64_t seed = 1;
  double strength = 0.3;
  auto* converge = app.add_subcommand("converge", "Convergence sweep against quadrature oracles");
  converge->add_option("--pair", pair, "f:g fixture names (or one name for shape-sum kinds)");
  converge->add_option("--ns", ns, "Ascending sample sizes")->delimiter(',');
  converge->add_option("--mode", conv_mode, "uniform | jitter");
  converge->add_option("--seed", seed, "Jitter seed");
  converge->add_option("--strength", strength, "Jitter strength in [0, 0.5)");
  converge->add_option("--kind", kind, "ftl | shape-sum | centered-shape-sum");
  converge->add_option("--out", out_path, "Output file (stdout when omitted)");
  converge->add_option("--format", format, "csv | json");

  // shape
  std::string shape_fixture = "circle";
  double shape_t = 0.0;
  auto* shape = app.add_subcommand("shape", "Evaluate 1 - g''/(2g') of a fixture");
  shape->add_option("--fixture", shape_fixture, "Fixture name");
  shape->add_option("--t", shape_t, "Parameter in [0, 1]");

  // gen
  std::string gen_fixture = "circle", gen_out;
  std::size_t gen_n = 32;
  auto* gen = app.add_subcommand("gen", "Write a uniform sample of a fixture as gesture JSON");
  gen->add_option("--fixture", gen_fixture, "Fixture name");
  gen->add_option("--n", gen_n, "Number of intervals");
  gen->add_option("--out", gen_out, "Output file (stdout when omitted)");

  // recognize
  std::string rec_store, rec_input, rec_mode = "uniform";
  std::size_t rec_n = ftl::kDefaultResampleN;
  auto* rec = app.add_subcommand("recognize", "Rank stored templates against a gesture");
  rec->add_option("--store", rec_store, "Template store JSON")->required();
  rec->add_option("--input", rec_input, "Gesture JSON")->required();
  rec->add_option("--n", rec_n, "Resample size");
  rec->add_option("--mode", rec_mode, "uniform | weighted");

  // serve
  int port = std::stoi(env_or("PORT", "8080"));
  std::string serve_store = env_or("STORE_PATH", "templates.json");
  std::string static_dir = env_or("STATIC_DIR", "");
  std::string host = "0.0.0.0", cors = env_or("CORS_ORIGIN", "*");
  auto* serve = app.add_subcommand("serve", "Run the HTTP API");
  serve->add_option("--port", port, "Listen port (env PORT)");
  serve->add_option("--store", serve_store, "Template store path (env STORE_PATH)");
  serve->add_option("--static", static_dir, "UI directory served at / (env STATIC_DIR)");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--cors-origin", cors, "Access-Control-Allow-Origin value (env CORS_ORIGIN)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*dist) {
      const ftl::Mode mode = mode_or_throw(dist_mode);
      auto f = read_gesture(f_path);
      auto g = read_gesture(g_path);
      if (dist_n != 0) {
        if (dist_n < 2) throw UsageError("--n must be >= 2");
        f = ftl::resample_uniform(f, dist_n);
        g = ftl::resample_uniform(g, dist_n);
      }
      std::cout << ftl::report_to_json(ftl::dissimilarity(f, g, mode)).dump() << "\n";
    } else if (*converge) {
      ftl::SamplingMode mode;
      if (conv_mode == "jitter") {
        mode = ftl::SamplingMode::jittered(seed, strength);
      } else if (conv_mode != "uniform") {
        throw UsageError("--mode must be 'uniform' or 'jitter'");
      }
      ftl::ReportFormat fmt;
      if (format == "csv") {
        fmt = ftl::ReportFormat::Csv;
      } else if (format == "json") {
        fmt = ftl::ReportFormat::Json;
      } else {
        throw UsageError("--format must be 'csv' or 'json'");
      }
      const auto colon = pair.find(':');
      const std::string first = pair.substr(0, colon);
      std::vector<ftl::SweepRow> rows;
      if (kind == "ftl") {
        if (colon == std::string::npos) throw UsageError("--pair must look like f:g");
        const auto& f = ftl::fixture(first);
        const auto& g = ftl::fixture(pair.substr(colon + 1));
        rows = ftl::sweep_ftl(f, g, ns, mode);
      } else if (kind == "shape-sum") {
        rows = ftl::sweep_shape_sum(ftl::fixture(first), ns, mode);
      } else if (kind == "centered-shape-sum") {
        rows = ftl::sweep_centered_shape_sum(ftl::fixture(first), ns, mode);
      } else {
        throw UsageError("--kind must be ftl, shape-sum or centered-shape-sum");
      }
      write_output(out_path, ftl::emit_report(rows, fmt));
    } else if (*shape) {
      const ftl::Complex s = ftl::gesture_shape(ftl::fixture(shape_fixture), shape_t);
      std::cout << ftl::Json{{"re", s.real()}, {"im", s.imag()}}.dump() << "\n";
    } else if (*gen) {
      const auto& g = ftl::fixture(gen_fixture);
      const auto sample = ftl::uniform_sample(g, gen_n);
      write_output(gen_out, ftl::gesture_to_json(gen_fixture, gen_fixture, sample).dump(2) + "\n");
    } else if (*rec) {
      const ftl::Mode mode = mode_or_throw(rec_mode);
      const auto store = ftl::store_load(rec_store);
      const auto candidate = read_gesture(rec_input);
      std::cout << ftl::recognition_to_json(ftl::recognize(candidate, store, rec_n, mode)).dump()
                << "\n";
    } else if (*serve) {
      ftl::ServiceConfig config{serve_store, std::nullopt, cors};
      if (!static_dir.empty()) config.static_dir = static_dir;
      ftl::Service service(std::move(config));
      httplib::Server server;
      service.install(server);
      std::cerr << "listening on " << host << ":" << port << " (" << service.store().size()
                << " templates)\n";
      if (!server.listen(host, port)) throw std::runtime_error("cannot bind port " + std::to_string(port));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ftl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
