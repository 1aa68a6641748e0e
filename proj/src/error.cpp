#include "ftl/error.hpp"

namespace ftl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::ZeroVector: return "zero_vector";
    case ErrorCode::DegenerateBasicGesture: return "degenerate_basic_gesture";
    case ErrorCode::NonpositiveTimestep: return "nonpositive_timestep";
    case ErrorCode::TooFewPoints: return "too_few_points";
    case ErrorCode::NonmonotoneTime: return "nonmonotone_time";
    case ErrorCode::ZeroDelta: return "zero_delta";
    case ErrorCode::UnnormalizedTime: return "unnormalized_time";
    case ErrorCode::NonFinite: return "non_finite";
    case ErrorCode::ZeroScale: return "zero_scale";
    case ErrorCode::SampleMismatch: return "sample_mismatch";
    case ErrorCode::DomainError: return "domain_error";
    case ErrorCode::WindowOutOfDomain: return "window_out_of_domain";
    case ErrorCode::UnknownFixture: return "unknown_fixture";
    case ErrorCode::EmptyStore: return "empty_store";
    case ErrorCode::IoError: return "io_error";
    case ErrorCode::MalformedStore: return "malformed_store";
    case ErrorCode::MalformedGesture: return "malformed_gesture";
  }
  return "unknown";
}

}  // namespace ftl
