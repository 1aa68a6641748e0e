#include "ftl/recognizer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>

#include "ftl/error.hpp"
#include "ftl/json_io.hpp"

namespace ftl {

namespace {

std::vector<TimedPoint> interpolate(std::span<const TimedPoint> pts, std::size_t n) {
  std::vector<TimedPoint> out(n + 1);
  const auto times = uniform_times(n);
  std::size_t j = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const double t = times[k];
    while (j + 2 < pts.size() && pts[j + 1].t <= t) ++j;
    const TimedPoint& a = pts[j];
    const TimedPoint& b = pts[j + 1];
    Vec2 p;
    if (t <= a.t) {
      p = a.p;
    } else if (t >= b.t) {
      p = b.p;
    } else {
      const double alpha = (t - a.t) / (b.t - a.t);
      p = a.p + alpha * (b.p - a.p);
    }
    out[k] = {t, p};
  }
  return out;
}

void check_resample_input(std::span<const TimedPoint> pts, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "resample needs n >= 2");
  if (pts.size() < 2) {
    throw Error(ErrorCode::TooFewPoints, "cannot resample fewer than 2 points");
  }
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!std::isfinite(pts[k].t) || !is_finite(pts[k].p)) {
      throw Error(ErrorCode::NonFinite, "point " + std::to_string(k) + " is not finite", k);
    }
    if (k > 0 && pts[k].t < pts[k - 1].t) {
      throw Error(ErrorCode::NonmonotoneTime,
                  "timestamp at point " + std::to_string(k) + " decreases", k);
    }
  }
  if (pts.front().t != 0.0 || pts.back().t != 1.0) {
    throw Error(ErrorCode::UnnormalizedTime, "resample input must span t in [0, 1]");
  }
}

}  // namespace

SampledGesture resample_uniform(std::span<const TimedPoint> points, std::size_t n) {
  check_resample_input(points, n);
  try {
    return validate_sample(interpolate(points, n));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroDelta) throw;
  }
  std::vector<RawPoint> raw;
  raw.reserve(points.size());
  for (const auto& q : points) raw.push_back({q.t, q.p});
  const SampledGesture merged = clean_stroke(raw);
  return validate_sample(interpolate(merged.points(), n));
}

SampledGesture resample_uniform(const SampledGesture& g, std::size_t n) {
  return resample_uniform(g.points(), n);
}

TemplateStore::TemplateStore(std::vector<Template> templates) {
  for (auto& t : templates) upsert(std::move(t));
}

TemplateStore::TemplateStore(const TemplateStore& other) : templates_(other.snapshot()) {}

TemplateStore& TemplateStore::operator=(const TemplateStore& other) {
  if (this != &other) {
    auto copy = other.snapshot();
    std::unique_lock lock(mutex_);
    templates_ = std::move(copy);
  }
  return *this;
}

bool TemplateStore::upsert(Template t) {
  std::unique_lock lock(mutex_);
  auto it = std::lower_bound(templates_.begin(), templates_.end(), t.id,
                             [](const Template& a, const std::string& id) { return a.id < id; });
  if (it != templates_.end() && it->id == t.id) {
    *it = std::move(t);
    return true;
  }
  templates_.insert(it, std::move(t));
  return false;
}

bool TemplateStore::remove(const std::string& id) {
  std::unique_lock lock(mutex_);
  auto it = std::find_if(templates_.begin(), templates_.end(),
                         [&](const Template& t) { return t.id == id; });
  if (it == templates_.end()) return false;
  templates_.erase(it);
  return true;
}

std::optional<Template> TemplateStore::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  for (const auto& t : templates_) {
    if (t.id == id) return t;
  }
  return std::nullopt;
}

std::vector<Template> TemplateStore::snapshot() const {
  std::shared_lock lock(mutex_);
  return templates_;
}

std::size_t TemplateStore::size() const {
  std::shared_lock lock(mutex_);
  return templates_.size();
}

bool TemplateStore::empty() const { return size() == 0; }

bool operator==(const TemplateStore& a, const TemplateStore& b) {
  return a.snapshot() == b.snapshot();
}

RecognitionResult recognize(const SampledGesture& candidate, const TemplateStore& store,
                            std::size_t n, Mode mode) {
  const auto templates = store.snapshot();
  if (templates.empty()) throw Error(ErrorCode::EmptyStore, "template store is empty");
  const SampledGesture probe = resample_uniform(candidate, n);

  struct Outcome {
    double distance = 0.0;
    std::string error;
  };
  std::vector<Outcome> outcomes(templates.size());
#pragma omp parallel for schedule(static) if (templates.size() > 8)
  for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(templates.size()); ++j) {
    auto& out = outcomes[static_cast<std::size_t>(j)];
    try {
      const auto resampled = resample_uniform(templates[static_cast<std::size_t>(j)].gesture, n);
      out.distance = dissimilarity(probe, resampled, mode).value;
    } catch (const std::exception& e) {
      out.error = e.what();
    }
  }

  RecognitionResult result;
  result.resample_n = n;
  for (std::size_t j = 0; j < templates.size(); ++j) {
    if (outcomes[j].error.empty()) {
      result.ranked.push_back({templates[j].label, templates[j].id, outcomes[j].distance});
    } else {
      result.skipped.push_back({templates[j].id, outcomes[j].error});
    }
  }
  std::sort(result.ranked.begin(), result.ranked.end(), [](const Match& a, const Match& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.template_id < b.template_id;
  });
  return result;
}

void store_save(const TemplateStore& store, const std::filesystem::path& path) {
  const std::string text = store_to_json(store).dump(2) + "\n";
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot replace " + path.string() + ": " + ec.message());
}

TemplateStore store_load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  Json j;
  try {
    j = Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::MalformedStore, std::string("store is not valid JSON: ") + e.what());
  }
  return store_from_json(j);
}

}  // namespace ftl
