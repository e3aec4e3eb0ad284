#pragma once

#include <string>

#include "bfi/mass.hpp"

namespace bfi {

/// Product frame Ω × C for a frame Ω (left) and a small auxiliary frame C
/// (right). Pair atoms (ωi, cj) are laid out row-major (index i·|C| + j)
/// and exposed through a synthesized flat frame, so every mass-function
/// operation works on product masses unchanged. Product sets are ordinary
/// FocalSets bound to frame(); they may be arbitrary subsets of pair
/// atoms, not just cylinders.
class ProductFrame {
 public:
  ProductFrame(Frame left, Frame right);

  const Frame& left() const { return left_; }
  const Frame& right() const { return right_; }
  /// Flat pair-atom frame carrying the product mass functions.
  const Frame& frame() const { return flat_; }

  int pair_index(int left_atom, int right_atom) const {
    return left_atom * right_.size() + right_atom;
  }

  /// Subset mask of the cylinder A × B.
  std::uint64_t cylinder_bits(std::uint64_t left_bits, std::uint64_t right_bits) const;
  FocalSet cylinder(const FocalSet& a, const FocalSet& b) const;

  /// Proj(Y ↓ Ω) = {ω : ∃c, (ω, c) ∈ Y}.
  std::uint64_t project_left_bits(std::uint64_t y) const;
  FocalSet project_left(const FocalSet& y) const;

  /// Atoms of Ω paired with right atom j inside Y.
  std::uint64_t left_slice_bits(std::uint64_t y, int right_atom) const;

  bool is_cylinder(const FocalSet& y) const;

  /// Factored rendering, e.g. "(w1×I)∪(Ω×P)": right atoms with identical
  /// left slices are grouped, groups ordered by lowest right atom.
  std::string format_product_set(std::uint64_t y) const;
  std::string format_product_set(const FocalSet& y) const;

  bool operator==(const ProductFrame& other) const {
    return left_ == other.left_ && right_ == other.right_;
  }
  bool operator!=(const ProductFrame& other) const { return !(*this == other); }

 private:
  Frame left_;
  Frame right_;
  Frame flat_;
};

/// Lifts a mass on C to Ω × C: each focal X becomes the cylinder Ω × X.
MassFunction vacuous_extension(const MassFunction& m_right, const ProductFrame& pf);

/// Deconditions a mass on Ω known under right atom c: each focal A becomes
/// (A × {c}) ∪ (Ω × (C ∖ {c})).
MassFunction balloon(const MassFunction& m_left, const ProductFrame& pf, int right_atom);

/// Projects a product mass back onto Ω; masses with equal projections
/// accumulate. Total mass is preserved.
MassFunction marginalize_left(const MassFunction& m_product, const ProductFrame& pf);

/// Cylinder extension of an Ω-mass (A ↦ A × C); testing utility.
MassFunction cylinder_extension_left(const MassFunction& m_left, const ProductFrame& pf);

}  // namespace bfi
