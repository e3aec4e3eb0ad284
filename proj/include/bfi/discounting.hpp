#pragma once

#include "bfi/mass.hpp"
#include "bfi/product_space.hpp"

namespace bfi {

/// Two-atom reliability frame {F, ~F}.
const Frame& reliability_frame();

/// Knowledge about a source's reliability as a mass on {F, ~F}:
/// m(F) = alpha, m({F,~F}) = 1 - alpha.
MassFunction reliability_mass(double alpha);

/// Classic reliability discounting, closed form:
/// m'(X) = alpha·m(X) for X ≠ Ω, m'(Ω) = 1 - alpha·(1 - m(Ω)).
MassFunction discount(const MassFunction& m, double alpha);

/// Same operation built on the product space Ω × {F, ~F}: vacuous extension
/// of the reliability mass, deconditioning of m (known under F), conjunctive
/// combination, marginalization. Agrees with discount() to 1e-12.
MassFunction discount_via_product_space(const MassFunction& m, double alpha);

}  // namespace bfi
