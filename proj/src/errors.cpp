#include "bfi/errors.hpp"

namespace bfi {

const char* to_string(errc code) {
  switch (code) {
    case errc::invalid_frame: return "invalid_frame";
    case errc::frame_too_large: return "frame_too_large";
    case errc::foreign_focal_set: return "foreign_focal_set";
    case errc::frame_mismatch: return "frame_mismatch";
    case errc::sum_not_one: return "sum_not_one";
    case errc::negative_mass: return "negative_mass";
    case errc::duplicate_focal_set: return "duplicate_focal_set";
    case errc::out_of_range: return "out_of_range";
    case errc::dogmatic_mass: return "dogmatic_mass";
    case errc::non_positive_weight: return "non_positive_weight";
    case errc::invalid_for_bold_rule: return "invalid_for_bold_rule";
    case errc::empty_conditioning_set: return "empty_conditioning_set";
    case errc::not_an_atom: return "not_an_atom";
    case errc::alpha_out_of_range: return "alpha_out_of_range";
    case errc::too_few_items: return "too_few_items";
    case errc::misaligned_datasets: return "misaligned_datasets";
    case errc::unsupported_focal_structure: return "unsupported_focal_structure";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

Error::Error(errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      message_(message) {}

void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace bfi
