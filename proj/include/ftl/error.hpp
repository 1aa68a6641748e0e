#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ftl {

enum class ErrorCode {
  InvalidArgument,
  ZeroVector,
  DegenerateBasicGesture,
  NonpositiveTimestep,
  TooFewPoints,
  NonmonotoneTime,
  ZeroDelta,
  UnnormalizedTime,
  NonFinite,
  ZeroScale,
  SampleMismatch,
  DomainError,
  WindowOutOfDomain,
  UnknownFixture,
  EmptyStore,
  IoError,
  MalformedStore,
  MalformedGesture,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library-wide exception. `index()` carries the offending point index for
/// sample validation errors; `subject()` names the offending template when an
/// error surfaces from the template store.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> index = std::nullopt,
        std::string subject = {})
      : std::runtime_error(message),
        code_(code),
        index_(index),
        subject_(std::move(subject)) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
  std::string subject_;
};

}  // namespace ftl
