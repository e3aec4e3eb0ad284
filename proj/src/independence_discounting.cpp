#include "bfi/independence_discounting.hpp"

#include "bfi/combination.hpp"

namespace bfi {

namespace {

constexpr int kAtomI = 0;
constexpr int kAtomNotP = 2;

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    fail(errc::out_of_range, std::string(name) + " must lie in [0,1]");
}

}  // namespace

IndependenceParams::IndependenceParams(double alpha, double beta, double gamma)
    : alpha(alpha), beta(beta), gamma(gamma) {
  check_unit(alpha, "alpha");
  check_unit(beta, "beta");
  check_unit(gamma, "gamma");
}

IndependenceMass IndependenceParams::to_mass() const {
  std::vector<std::pair<std::uint64_t, double>> acc{
      {ifocal::kI, alpha * beta},
      {ifocal::kP, alpha * (1.0 - beta) * gamma},
      {ifocal::kNotP, alpha * (1.0 - beta) * (1.0 - gamma)},
      {ifocal::kFull, 1.0 - alpha},
  };
  return IndependenceMass::from_mass(
      MassFunction::from_accumulated(independence_frame(), std::move(acc)));
}

RecoveredParams params_from_independence_mass(const IndependenceMass& mi) {
  RecoveredParams out;
  if (mi.on_dependent() > 1e-12) return out;  // not in three-parameter form
  const double alpha = 1.0 - mi.on_ignorance();
  out.alpha = alpha;
  if (alpha <= 0.0) return out;
  const double beta = mi.on_independent() / alpha;
  out.beta = beta;
  const double rest = alpha * (1.0 - beta);
  if (rest <= 0.0) return out;
  out.gamma = mi.on_positive() / rest;
  return out;
}

ConditionalFamily conditional_family(const MassFunction& m) {
  return ConditionalFamily{m, MassFunction::vacuous(m.frame()),
                           MassFunction::empty_mass(m.frame())};
}

IndependenceDiscountTrace discount_by_independence_trace(const MassFunction& m,
                                                         const IndependenceMass& mi) {
  if (m.frame().size() > 16)
    fail(errc::frame_too_large, "independence discounting limited to 16 atoms");
  ProductFrame pf(m.frame(), independence_frame());
  auto family = conditional_family(m);
  auto extended = vacuous_extension(mi.mass(), pf);
  auto ballooned_i = balloon(family.given_independent, pf, kAtomI);
  // m[P] balloons to the vacuous product mass (the conjunctive neutral
  // element) and is omitted from the combination
  auto ballooned_np = balloon(family.given_negative, pf, kAtomNotP);
  auto combined =
      combine_conjunctive(combine_conjunctive(extended, ballooned_i), ballooned_np);
  auto marginal = marginalize_left(combined, pf);
  return IndependenceDiscountTrace{std::move(pf),       std::move(extended),
                                   std::move(ballooned_i), std::move(ballooned_np),
                                   std::move(combined),  std::move(marginal)};
}

MassFunction discount_by_independence(const MassFunction& m, const IndependenceMass& mi) {
  return discount_by_independence_trace(m, mi).marginal;
}

MassFunction discount_by_independence(const MassFunction& m, const IndependenceParams& p) {
  return discount_by_independence(m, p.to_mass());
}

MassFunction discount_by_independence_closed_form(const MassFunction& m,
                                                  const IndependenceParams& p) {
  const std::uint64_t full = m.frame().full_bits();
  const double keep = p.alpha * p.beta;
  std::vector<std::pair<std::uint64_t, double>> acc;
  acc.reserve(m.focal_count() + 2);
  for (const auto& [bits, value] : m.entries()) acc.emplace_back(bits, keep * value);
  acc.emplace_back(0, p.alpha * (1.0 - p.beta) * (1.0 - p.gamma));
  acc.emplace_back(full, p.alpha * (1.0 - p.beta) * p.gamma + (1.0 - p.alpha));
  return MassFunction::from_accumulated(m.frame(), std::move(acc));
}

MassFunction fuse_with_independence(const MassFunction& m1, const MassFunction& m2,
                                    const IndependenceParams& p12,
                                    const std::optional<IndependenceParams>& p21) {
  require_same_frame(m1.frame(), m2.frame(), errc::frame_mismatch);
  auto d1 = discount_by_independence(m1, p12);
  if (!p21) return combine_conjunctive(d1, m2);  // total-independence assumption for m2
  return combine_conjunctive(d1, discount_by_independence(m2, *p21));
}

}  // namespace bfi
