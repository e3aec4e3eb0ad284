#include "bfi/mass.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace bfi {

namespace {

constexpr double kDust = 1e-15;

void require_dense(const Frame& frame) {
  if (frame.size() > Frame::kMaxDenseAtoms)
    fail(errc::frame_too_large, "dense powerset transform limited to " +
                                    std::to_string(Frame::kMaxDenseAtoms) + " atoms");
}

}  // namespace

MassFunction MassFunction::make(const Frame& frame,
                                const std::vector<std::pair<FocalSet, double>>& entries) {
  std::vector<std::pair<std::uint64_t, double>> raw;
  raw.reserve(entries.size());
  for (const auto& [set, value] : entries) {
    require_same_frame(set.frame(), frame);
    raw.emplace_back(set.bits(), value);
  }
  return make_bits(frame, std::move(raw));
}

MassFunction MassFunction::make_bits(const Frame& frame,
                                     std::vector<std::pair<std::uint64_t, double>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  double total = 0.0;
  std::vector<std::pair<std::uint64_t, double>> kept;
  kept.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto [bits, value] = entries[i];
    if (bits & ~frame.full_bits())
      fail(errc::foreign_focal_set, "focal set has atoms outside the frame");
    if (i > 0 && bits == entries[i - 1].first)
      fail(errc::duplicate_focal_set, "duplicate focal set " + format_set(frame, bits));
    if (value < 0.0)
      fail(errc::negative_mass, "negative mass on " + format_set(frame, bits));
    if (value > 1.0 + kSumTolerance)
      fail(errc::out_of_range, "mass above 1 on " + format_set(frame, bits));
    total += value;
    if (value > 0.0) kept.emplace_back(bits, value);
  }
  if (std::abs(total - 1.0) > kSumTolerance)
    fail(errc::sum_not_one, "masses sum to " + std::to_string(total));
  return MassFunction(frame, std::move(kept));
}

MassFunction MassFunction::from_accumulated(
    const Frame& frame, std::vector<std::pair<std::uint64_t, double>> entries) {
  std::map<std::uint64_t, double> acc;
  for (const auto& [bits, value] : entries) acc[bits] += value;
  double total = 0.0;
  std::vector<std::pair<std::uint64_t, double>> kept;
  kept.reserve(acc.size());
  for (const auto& [bits, value] : acc) {
    if (value < -1e-12)
      fail(errc::negative_mass, "accumulation produced negative mass on " +
                                    format_set(frame, bits));
    total += value;
    if (value > kDust) kept.emplace_back(bits, value);
  }
  if (std::abs(total - 1.0) > kSumTolerance)
    fail(errc::sum_not_one, "masses sum to " + std::to_string(total));
  return MassFunction(frame, std::move(kept));
}

MassFunction MassFunction::vacuous(const Frame& frame) {
  return MassFunction(frame, {{frame.full_bits(), 1.0}});
}

MassFunction MassFunction::empty_mass(const Frame& frame) {
  return MassFunction(frame, {{0, 1.0}});
}

MassFunction MassFunction::categorical(const FocalSet& set) {
  return MassFunction(set.frame(), {{set.bits(), 1.0}});
}

MassFunction MassFunction::simple_support(const FocalSet& set, double w) {
  if (!(w > 0.0) || w > 1.0) fail(errc::out_of_range, "simple support needs w in (0,1]");
  if (set.is_full()) fail(errc::out_of_range, "simple support set must be a strict subset");
  if (w == 1.0) return vacuous(set.frame());
  // a strict subset's mask is numerically below Ω's, so this is sorted
  std::vector<std::pair<std::uint64_t, double>> entries{
      {set.bits(), 1.0 - w}, {set.frame().full_bits(), w}};
  return MassFunction(set.frame(), std::move(entries));
}

double MassFunction::mass_bits(std::uint64_t bits) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), bits,
                             [](const auto& e, std::uint64_t b) { return e.first < b; });
  return (it != entries_.end() && it->first == bits) ? it->second : 0.0;
}

double MassFunction::mass(const FocalSet& set) const {
  require_same_frame(set.frame(), frame_);
  return mass_bits(set.bits());
}

bool MassFunction::is_vacuous() const {
  return entries_.size() == 1 && entries_[0].first == frame_.full_bits();
}

double MassFunction::total() const {
  double t = 0.0;
  for (const auto& [bits, value] : entries_) t += value;
  return t;
}

std::vector<std::pair<std::uint64_t, double>> MassFunction::canonical_entries() const {
  auto out = entries_;
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int ca = std::popcount(a.first), cb = std::popcount(b.first);
    return ca != cb ? ca < cb : a.first < b.first;
  });
  return out;
}

bool MassFunction::operator==(const MassFunction& other) const {
  return frame_ == other.frame_ && entries_ == other.entries_;
}

double pl(const MassFunction& m, const FocalSet& x) {
  require_same_frame(x.frame(), m.frame());
  double out = 0.0;
  for (const auto& [bits, value] : m.entries())
    if (bits & x.bits()) out += value;
  return out;
}

double bel(const MassFunction& m, const FocalSet& x) {
  require_same_frame(x.frame(), m.frame());
  double out = 0.0;
  for (const auto& [bits, value] : m.entries())
    if (bits != 0 && (bits & ~x.bits()) == 0) out += value;
  return out;
}

std::vector<double> commonality(const MassFunction& m) {
  require_dense(m.frame());
  const std::size_t size = std::size_t{1} << m.frame().size();
  std::vector<double> q(size, 0.0);
  for (const auto& [bits, value] : m.entries()) q[bits] += value;
  // superset zeta: q(X) <- Σ_{Y ⊇ X} m(Y)
  for (int i = 0; i < m.frame().size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::size_t x = 0; x < size; ++x)
      if (!(x & bit)) q[x] += q[x | bit];
  }
  return q;
}

WeightFunction::WeightFunction(Frame frame, std::vector<double> dense)
    : frame_(std::move(frame)), weights_(std::move(dense)) {
  require_dense(frame_);
  if (weights_.size() != (std::size_t{1} << frame_.size()))
    fail(errc::out_of_range, "weight table size does not match the frame powerset");
  for (std::size_t a = 0; a + 1 < weights_.size(); ++a)
    if (!(weights_[a] > 0.0))
      fail(errc::non_positive_weight, "weight for " + format_set(frame_, a) +
                                          " must be strictly positive");
  weights_.back() = 1.0;  // Ω carries no weight in the decomposition
}

double WeightFunction::weight(const FocalSet& set) const {
  require_same_frame(set.frame(), frame_);
  return weights_[set.bits()];
}

WeightFunction canonical_weights(const MassFunction& m) {
  require_dense(m.frame());
  if (m.is_dogmatic())
    fail(errc::dogmatic_mass, "canonical decomposition needs m(Ω) > 0");
  auto q = commonality(m);
  const std::size_t size = q.size();
  std::vector<double> t(size);
  for (std::size_t x = 0; x < size; ++x) t[x] = std::log(q[x]);
  // superset Möbius of ln q
  for (int i = 0; i < m.frame().size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::size_t x = 0; x < size; ++x)
      if (!(x & bit)) t[x] -= t[x | bit];
  }
  std::vector<double> w(size, 1.0);
  for (std::size_t a = 0; a + 1 < size; ++a) w[a] = std::exp(-t[a]);
  return WeightFunction(m.frame(), std::move(w));
}

MassFunction from_weights(const WeightFunction& w) {
  const Frame& frame = w.frame();
  const std::size_t size = w.dense().size();
  // t = -ln w on strict subsets; t(Ω) = ln q(Ω) = Σ ln w(A)
  std::vector<double> t(size);
  double logq_full = 0.0;
  for (std::size_t a = 0; a + 1 < size; ++a) {
    double lw = std::log(w.dense()[a]);
    t[a] = -lw;
    logq_full += lw;
  }
  t[size - 1] = logq_full;
  // superset zeta gives ln q, exponentiate, superset Möbius gives m
  for (int i = 0; i < frame.size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::size_t x = 0; x < size; ++x)
      if (!(x & bit)) t[x] += t[x | bit];
  }
  for (std::size_t x = 0; x < size; ++x) t[x] = std::exp(t[x]);
  for (int i = 0; i < frame.size(); ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::size_t x = 0; x < size; ++x)
      if (!(x & bit)) t[x] -= t[x | bit];
  }
  std::vector<std::pair<std::uint64_t, double>> entries;
  for (std::size_t x = 0; x < size; ++x)
    if (t[x] != 0.0) entries.emplace_back(x, t[x]);
  return MassFunction::from_accumulated(frame, std::move(entries));
}

}  // namespace bfi
