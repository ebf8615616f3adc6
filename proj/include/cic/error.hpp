#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cic {

enum class errc {
  invalid_argument,
  duplicate_vertex,
  duplicate_edge,
  self_loop,
  unknown_label,
  disconnected,
  index_out_of_range,
  empty_set,
  precondition_violated,
  m_out_of_range,
  size_out_of_range,
  length_mismatch,
  color_out_of_range,
  range_error,
  too_large,
  search_budget_exceeded,
  params_out_of_range,
  format_error,
};

constexpr std::string_view to_string(errc e) noexcept {
  switch (e) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::duplicate_vertex: return "DuplicateVertex";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::self_loop: return "SelfLoop";
    case errc::unknown_label: return "UnknownLabel";
    case errc::disconnected: return "Disconnected";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::empty_set: return "EmptySet";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::m_out_of_range: return "MOutOfRange";
    case errc::size_out_of_range: return "SizeOutOfRange";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::color_out_of_range: return "ColorOutOfRange";
    case errc::range_error: return "RangeError";
    case errc::too_large: return "TooLarge";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::params_out_of_range: return "ParamsOutOfRange";
    case errc::format_error: return "FormatError";
  }
  return "Unknown";
}

/// Library error. `code()` names the failure class; `what()` names the
/// offending item.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace cic
