#include "bfi/combination.hpp"

#include <algorithm>

namespace bfi {

namespace {

template <typename SetOp>
MassFunction pairwise_combine(const MassFunction& m1, const MassFunction& m2, SetOp op) {
  require_same_frame(m1.frame(), m2.frame(), errc::frame_mismatch);
  std::vector<std::pair<std::uint64_t, double>> acc;
  acc.reserve(m1.focal_count() * m2.focal_count());
  for (const auto& [b1, v1] : m1.entries())
    for (const auto& [b2, v2] : m2.entries()) acc.emplace_back(op(b1, b2), v1 * v2);
  return MassFunction::from_accumulated(m1.frame(), std::move(acc));
}

}  // namespace

MassFunction combine_conjunctive(const MassFunction& m1, const MassFunction& m2) {
  return pairwise_combine(m1, m2, [](std::uint64_t a, std::uint64_t b) { return a & b; });
}

MassFunction combine_disjunctive(const MassFunction& m1, const MassFunction& m2) {
  return pairwise_combine(m1, m2, [](std::uint64_t a, std::uint64_t b) { return a | b; });
}

MassFunction combine_cautious(const MassFunction& m1, const MassFunction& m2, CautiousOp op) {
  require_same_frame(m1.frame(), m2.frame(), errc::frame_mismatch);
  auto w1 = canonical_weights(m1);
  auto w2 = canonical_weights(m2);
  std::vector<double> merged(w1.dense().size());
  for (std::size_t a = 0; a < merged.size(); ++a)
    merged[a] = op == CautiousOp::minimum ? std::min(w1.dense()[a], w2.dense()[a])
                                          : std::max(w1.dense()[a], w2.dense()[a]);
  return from_weights(WeightFunction(m1.frame(), std::move(merged)));
}

MassFunction combine_bold(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), errc::frame_mismatch);
  if (!m1.is_subnormal() || !m2.is_subnormal())
    fail(errc::invalid_for_bold_rule, "bold rule needs subnormal operands (m(∅) > 0)");
  // max of disjunctive weights == De Morgan dual of cautious-min
  return negation(combine_cautious(negation(m1), negation(m2), CautiousOp::minimum));
}

MassFunction condition(const MassFunction& m, const FocalSet& a) {
  require_same_frame(m.frame(), a.frame());
  if (a.is_empty()) fail(errc::empty_conditioning_set, "conditioning set must be non-empty");
  std::vector<std::pair<std::uint64_t, double>> acc;
  acc.reserve(m.focal_count());
  for (const auto& [bits, value] : m.entries()) acc.emplace_back(bits & a.bits(), value);
  return MassFunction::from_accumulated(m.frame(), std::move(acc));
}

MassFunction negation(const MassFunction& m) {
  const std::uint64_t full = m.frame().full_bits();
  std::vector<std::pair<std::uint64_t, double>> acc;
  acc.reserve(m.focal_count());
  for (const auto& [bits, value] : m.entries()) acc.emplace_back(~bits & full, value);
  return MassFunction::from_accumulated(m.frame(), std::move(acc));
}

DisjunctiveWeightFunction::DisjunctiveWeightFunction(Frame frame, std::vector<double> dense)
    : frame_(std::move(frame)), weights_(std::move(dense)) {
  if (weights_.size() != (std::size_t{1} << frame_.size()))
    fail(errc::out_of_range, "weight table size does not match the frame powerset");
  for (std::size_t a = 1; a < weights_.size(); ++a)
    if (!(weights_[a] < 1.0))
      fail(errc::out_of_range, "disjunctive weight for " + format_set(frame_, a) +
                                   " must be below 1");
  weights_[0] = 0.0;  // ∅ carries no weight in the disjunctive decomposition
}

DisjunctiveWeightFunction disjunctive_weights(const MassFunction& m) {
  if (!m.is_subnormal())
    fail(errc::invalid_for_bold_rule,
         "disjunctive decomposition needs a subnormal mass (m(∅) > 0)");
  auto w = canonical_weights(negation(m));
  const std::uint64_t full = m.frame().full_bits();
  std::vector<double> v(w.dense().size(), 0.0);
  for (std::uint64_t a = 1; a <= full; ++a) v[a] = 1.0 - w.dense()[~a & full];
  return DisjunctiveWeightFunction(m.frame(), std::move(v));
}

MassFunction from_disjunctive_weights(const DisjunctiveWeightFunction& v) {
  const std::uint64_t full = v.frame().full_bits();
  std::vector<double> w(v.dense().size(), 1.0);
  for (std::uint64_t a = 1; a <= full; ++a) w[~a & full] = 1.0 - v.dense()[a];
  return negation(from_weights(WeightFunction(v.frame(), std::move(w))));
}

}  // namespace bfi
