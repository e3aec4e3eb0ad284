#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "bfi/frame.hpp"

namespace bfi {

/// Basic belief assignment over a frame: a sparse association from focal
/// sets to strictly positive masses summing to one. Immutable; entries are
/// kept sorted by subset mask.
class MassFunction {
 public:
  static constexpr double kSumTolerance = 1e-9;

  /// Validating constructor: values in [0,1], no duplicate focal sets,
  /// sum within kSumTolerance of 1; zero entries are pruned.
  static MassFunction make(const Frame& frame,
                           const std::vector<std::pair<FocalSet, double>>& entries);
  static MassFunction make_bits(const Frame& frame,
                                std::vector<std::pair<std::uint64_t, double>> entries);
  /// Accumulator form used by combination results: merges duplicates,
  /// prunes numeric dust (|m| <= 1e-15), still validates the total.
  static MassFunction from_accumulated(const Frame& frame,
                                       std::vector<std::pair<std::uint64_t, double>> entries);

  static MassFunction vacuous(const Frame& frame);
  /// m_∅: the disjunctive neutral element (all mass on the empty set).
  static MassFunction empty_mass(const Frame& frame);
  static MassFunction categorical(const FocalSet& set);
  /// Simple support A^w: m(A) = 1-w, m(Ω) = w (0 < w <= 1; A ≠ Ω).
  static MassFunction simple_support(const FocalSet& set, double w);

  const Frame& frame() const { return frame_; }
  const std::vector<std::pair<std::uint64_t, double>>& entries() const { return entries_; }
  std::size_t focal_count() const { return entries_.size(); }

  double mass_bits(std::uint64_t bits) const;
  double mass(const FocalSet& set) const;
  double conflict() const { return mass_bits(0); }
  double ignorance() const { return mass_bits(frame_.full_bits()); }
  bool is_dogmatic() const { return ignorance() == 0.0; }
  bool is_subnormal() const { return conflict() > 0.0; }
  bool is_vacuous() const;
  double total() const;

  /// Entries reordered by (cardinality, mask): the order used for printing
  /// and serialization.
  std::vector<std::pair<std::uint64_t, double>> canonical_entries() const;

  bool operator==(const MassFunction& other) const;
  bool operator!=(const MassFunction& other) const { return !(*this == other); }

 private:
  MassFunction(Frame frame, std::vector<std::pair<std::uint64_t, double>> sorted_entries)
      : frame_(std::move(frame)), entries_(std::move(sorted_entries)) {}

  Frame frame_;
  std::vector<std::pair<std::uint64_t, double>> entries_;
};

/// Plausibility pl(X) = Σ_{Y ∩ X ≠ ∅} m(Y).
double pl(const MassFunction& m, const FocalSet& x);
/// Credibility bel(X) = Σ_{∅ ≠ Y ⊆ X} m(Y).
double bel(const MassFunction& m, const FocalSet& x);

/// Commonality q(X) = Σ_{Y ⊇ X} m(Y) for every X ⊆ Ω, dense over the
/// powerset (index = subset mask); superset zeta transform, n <= 20.
std::vector<double> commonality(const MassFunction& m);

/// Conjunctive canonical weights of a non-dogmatic mass: one weight per
/// strict subset of Ω (the slot for Ω itself is fixed at 1).
class WeightFunction {
 public:
  WeightFunction(Frame frame, std::vector<double> dense);
  const Frame& frame() const { return frame_; }
  const std::vector<double>& dense() const { return weights_; }
  double weight_bits(std::uint64_t bits) const { return weights_[bits]; }
  double weight(const FocalSet& set) const;

 private:
  Frame frame_;
  std::vector<double> weights_;
};

/// ln w(A) = -Σ_{B ⊇ A} (-1)^{|B|-|A|} ln q(B); requires m(Ω) > 0.
WeightFunction canonical_weights(const MassFunction& m);
/// Conjunctive recomposition of all simple supports A^{w(A)}; inverse of
/// canonical_weights.
MassFunction from_weights(const WeightFunction& w);

}  // namespace bfi
