#include "bfi/format.hpp"

#include <charconv>

namespace bfi {

std::string format_number(double value, int significant) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buffer[64];
  auto res = std::to_chars(buffer, buffer + sizeof(buffer), value,
                           std::chars_format::general, significant);
  return std::string(buffer, res.ptr);
}

std::string format_mass_table(const MassFunction& m) {
  std::string out;
  for (const auto& [bits, value] : m.canonical_entries())
    out += "m(" + format_set(m.frame(), bits) + ") = " + format_number(value) + "\n";
  return out;
}

std::string format_product_mass_table(const MassFunction& m, const ProductFrame& pf) {
  require_same_frame(m.frame(), pf.frame(), errc::frame_mismatch);
  std::string out;
  for (const auto& [bits, value] : m.canonical_entries())
    out += "m(" + pf.format_product_set(bits) + ") = " + format_number(value) + "\n";
  return out;
}

}  // namespace bfi
