#pragma once

#include <string>

#include "bfi/mass.hpp"
#include "bfi/product_space.hpp"

namespace bfi {

/// Locale-independent number rendering, `significant` significant digits
/// (general format, shortest of fixed/scientific).
std::string format_number(double value, int significant = 6);

/// One "m(X) = v" line per focal, canonical (cardinality, mask) order.
std::string format_mass_table(const MassFunction& m);

/// Same for a product mass, sets rendered in factored cylinder form.
std::string format_product_mass_table(const MassFunction& m, const ProductFrame& pf);

}  // namespace bfi
