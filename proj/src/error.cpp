#include "uqosp/error.hpp"

namespace uqosp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::k_too_small: return "k_too_small";
    case ErrorCode::m_out_of_range: return "m_out_of_range";
    case ErrorCode::not_coprime: return "not_coprime";
    case ErrorCode::zero_denominator: return "zero_denominator";
    case ErrorCode::singular_factorial: return "singular_factorial";
    case ErrorCode::vanishing_factor: return "vanishing_factor";
    case ErrorCode::non_finite: return "non_finite";
    case ErrorCode::incompatible_group: return "incompatible_group";
    case ErrorCode::invalid_order_parameter: return "invalid_order_parameter";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::invalid_leg: return "invalid_leg";
    case ErrorCode::root_mismatch: return "root_mismatch";
    case ErrorCode::size_cap_exceeded: return "size_cap_exceeded";
    case ErrorCode::precondition_failed: return "precondition_failed";
    case ErrorCode::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

}  // namespace uqosp
