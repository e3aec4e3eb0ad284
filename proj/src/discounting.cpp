#include "bfi/discounting.hpp"

#include "bfi/combination.hpp"

namespace bfi {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    fail(errc::alpha_out_of_range, "reliability must lie in [0,1]");
}

}  // namespace

const Frame& reliability_frame() {
  static const Frame frame{"F", "~F"};
  return frame;
}

MassFunction reliability_mass(double alpha) {
  check_alpha(alpha);
  return MassFunction::from_accumulated(reliability_frame(), {{0b01, alpha}, {0b11, 1.0 - alpha}});
}

MassFunction discount(const MassFunction& m, double alpha) {
  check_alpha(alpha);
  if (alpha == 1.0) return m;
  if (alpha == 0.0) return MassFunction::vacuous(m.frame());
  const std::uint64_t full = m.frame().full_bits();
  std::vector<std::pair<std::uint64_t, double>> acc;
  acc.reserve(m.focal_count() + 1);
  for (const auto& [bits, value] : m.entries())
    if (bits != full) acc.emplace_back(bits, alpha * value);
  acc.emplace_back(full, 1.0 - alpha * (1.0 - m.ignorance()));
  return MassFunction::from_accumulated(m.frame(), std::move(acc));
}

MassFunction discount_via_product_space(const MassFunction& m, double alpha) {
  check_alpha(alpha);
  ProductFrame pf(m.frame(), reliability_frame());
  auto extended = vacuous_extension(reliability_mass(alpha), pf);
  auto deconditioned = balloon(m, pf, 0);  // m is the knowledge given F
  // m[~F] is vacuous, i.e. the conjunctive neutral element; its ballooned
  // factor is omitted
  auto combined = combine_conjunctive(extended, deconditioned);
  return marginalize_left(combined, pf);
}

}  // namespace bfi
