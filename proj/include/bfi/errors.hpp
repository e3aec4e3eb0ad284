#pragma once

#include <stdexcept>
#include <string>

namespace bfi {

/// Error condition raised by the library. Each value corresponds to a
/// distinct contract violation; the CLI maps any of these to exit code 2.
enum class errc {
  invalid_frame,
  frame_too_large,
  foreign_focal_set,
  frame_mismatch,
  sum_not_one,
  negative_mass,
  duplicate_focal_set,
  out_of_range,
  dogmatic_mass,
  non_positive_weight,
  invalid_for_bold_rule,
  empty_conditioning_set,
  not_an_atom,
  alpha_out_of_range,
  too_few_items,
  misaligned_datasets,
  unsupported_focal_structure,
  parse_error,
};

const char* to_string(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }
  /// Message without the error-code prefix, for rewrapping.
  const std::string& message() const noexcept { return message_; }

 private:
  errc code_;
  std::string message_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace bfi
