#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "ftl/dissimilarity.hpp"

namespace ftl {

inline constexpr std::size_t kDefaultResampleN = 32;

struct Template {
  std::string id;
  std::string label;
  SampledGesture gesture;

  friend bool operator==(const Template&, const Template&) = default;
};

/// Piecewise-linear interpolation in time at t_k = k/n. If the result has a
/// zero displacement (the input stood still), consecutive duplicate input
/// positions are merged as clean_stroke() does and the interpolation is
/// retried once at the same n. Throws TooFewPoints / ZeroDelta when the
/// input stays degenerate.
SampledGesture resample_uniform(std::span<const TimedPoint> points, std::size_t n);
SampledGesture resample_uniform(const SampledGesture& g, std::size_t n);

/// Labeled templates keyed by id. Readers share, writers are exclusive.
class TemplateStore {
 public:
  TemplateStore() = default;
  explicit TemplateStore(std::vector<Template> templates);
  TemplateStore(const TemplateStore& other);
  TemplateStore& operator=(const TemplateStore& other);

  /// Inserts or replaces by id. Returns true when an entry was replaced.
  bool upsert(Template t);
  /// Returns false when no template has this id.
  bool remove(const std::string& id);
  std::optional<Template> find(const std::string& id) const;
  /// Copy of all templates, ordered by id.
  std::vector<Template> snapshot() const;
  std::size_t size() const;
  bool empty() const;

  friend bool operator==(const TemplateStore& a, const TemplateStore& b);

 private:
  mutable std::shared_mutex mutex_;
  std::vector<Template> templates_;  // sorted by id
};

struct Match {
  std::string label;
  std::string template_id;
  double distance = 0.0;
};

struct SkippedTemplate {
  std::string template_id;
  std::string reason;
};

struct RecognitionResult {
  std::vector<Match> ranked;  // ascending distance, ties by template id
  std::vector<SkippedTemplate> skipped;
  std::size_t resample_n = kDefaultResampleN;
};

/// Resamples the candidate and every template to n and ranks templates by
/// ftl (Mode::Uniform) or wftl (Mode::Weighted). Templates that fail to
/// resample are reported in `skipped`. Throws EmptyStore.
RecognitionResult recognize(const SampledGesture& candidate, const TemplateStore& store,
                            std::size_t n = kDefaultResampleN, Mode mode = Mode::Uniform);

/// Writes {"templates": [...]} through a temporary file and rename.
void store_save(const TemplateStore& store, const std::filesystem::path& path);
/// Throws IoError, or MalformedStore naming the offending template id.
TemplateStore store_load(const std::filesystem::path& path);

}  // namespace ftl
