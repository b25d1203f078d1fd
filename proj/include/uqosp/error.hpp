#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uqosp {

enum class ErrorCode {
  k_too_small,
  m_out_of_range,
  not_coprime,
  zero_denominator,
  singular_factorial,
  vanishing_factor,
  non_finite,
  incompatible_group,
  invalid_order_parameter,
  dimension_mismatch,
  invalid_leg,
  root_mismatch,
  size_cap_exceeded,
  precondition_failed,
  invalid_argument,
};

std::string_view to_string(ErrorCode code);

/// Every failure in the library is reported as an Error carrying a code.
/// `index()` is set when the failure is tied to a position, e.g. the factor
/// index j at which (j)_a vanished.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::optional<int> index = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<int> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<int> index_;
};

}  // namespace uqosp
