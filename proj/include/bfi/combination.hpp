#pragma once

#include "bfi/mass.hpp"

namespace bfi {

/// Weight aggregation used by the cautious rule. The idempotent rule family
/// is defined with the pointwise minimum; maximum is kept selectable for
/// comparison.
enum class CautiousOp { minimum, maximum };

/// Unnormalized conjunctive rule: m(X) = Σ_{Y1 ∩ Y2 = X} m1(Y1) m2(Y2).
/// Conflict stays on ∅; no renormalization anywhere in this library.
MassFunction combine_conjunctive(const MassFunction& m1, const MassFunction& m2);

/// Disjunctive rule: m(X) = Σ_{Y1 ∪ Y2 = X} m1(Y1) m2(Y2).
MassFunction combine_disjunctive(const MassFunction& m1, const MassFunction& m2);

/// Idempotent conjunctive rule for non-distinct sources: decompose both
/// operands into canonical weights, aggregate pointwise, recompose.
/// Requires non-dogmatic operands and a dense-transform-sized frame.
MassFunction combine_cautious(const MassFunction& m1, const MassFunction& m2,
                              CautiousOp op = CautiousOp::minimum);

/// Idempotent disjunctive dual: pointwise maximum of disjunctive weights,
/// recomposed disjunctively. Requires subnormal operands (m(∅) > 0).
MassFunction combine_bold(const MassFunction& m1, const MassFunction& m2);

/// m[A] = m ⊕ m_A: every focal Y transfers its mass to Y ∩ A.
MassFunction condition(const MassFunction& m, const FocalSet& a);

/// De Morgan dual: every focal moves to its complement.
MassFunction negation(const MassFunction& m);

/// Disjunctive canonical weights of a subnormal mass, one per non-empty
/// set A: v(A) is the mass the negative simple support A_v puts on A
/// (A_v(A) = v, A_v(∅) = 1-v), so v = 0 is neutral and v(A) = 1 - w(A^c)
/// of the negation. Values may drop below 0 for non-separable inputs.
class DisjunctiveWeightFunction {
 public:
  DisjunctiveWeightFunction(Frame frame, std::vector<double> dense);
  const Frame& frame() const { return frame_; }
  const std::vector<double>& dense() const { return weights_; }
  double weight_bits(std::uint64_t bits) const { return weights_[bits]; }

 private:
  Frame frame_;
  std::vector<double> weights_;
};

DisjunctiveWeightFunction disjunctive_weights(const MassFunction& m);
MassFunction from_disjunctive_weights(const DisjunctiveWeightFunction& v);

}  // namespace bfi
