#include "bfi/synthetic.hpp"

#include <bit>
#include <cstdlib>
#include <string>

namespace bfi {

std::uint64_t seed_from_env() {
  const char* env = std::getenv("BFI_SEED");
  if (!env || !*env) return 42;
  try {
    return std::stoull(env);
  } catch (...) {
    fail(errc::parse_error, std::string("BFI_SEED is not an unsigned integer: ") + env);
  }
}

std::vector<int> planted_labels(int items, int groups) {
  if (items < 1 || groups < 1) fail(errc::out_of_range, "need at least one item and group");
  std::vector<int> out(items);
  for (int j = 0; j < items; ++j) out[j] = j % groups;
  return out;
}

std::vector<int> random_labels(int items, int groups, std::mt19937_64& rng) {
  if (items < 1 || groups < 1) fail(errc::out_of_range, "need at least one item and group");
  std::uniform_int_distribution<int> pick(0, groups - 1);
  std::vector<int> out(items);
  for (int j = 0; j < items; ++j) out[j] = pick(rng);
  return out;
}

MassDataset planted_dataset(const Frame& frame, const std::vector<int>& labels,
                            std::mt19937_64& rng, double base, double spread) {
  if (!(base > 0.0) || !(spread >= 0.0) || base + spread > 1.0)
    fail(errc::out_of_range, "need 0 < base and base + spread <= 1");
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<MassFunction> items;
  items.reserve(labels.size());
  for (int g : labels) {
    if (g < 0 || g >= frame.size())
      fail(errc::out_of_range, "group label outside the frame's atom range");
    items.push_back(
        MassFunction::simple_support(FocalSet::singleton(frame, g), 1.0 - (base + spread * u(rng))));
  }
  return MassDataset::make(frame, std::move(items));
}

MassDataset complement_swapped(const MassDataset& ds) {
  std::vector<MassFunction> items;
  items.reserve(ds.items.size());
  for (const auto& m : ds.items) {
    std::vector<std::pair<std::uint64_t, double>> acc;
    acc.reserve(m.focal_count());
    for (const auto& [bits, value] : m.entries()) {
      std::uint64_t target = bits;
      if (std::popcount(bits) == 1) target = ~bits & ds.frame.full_bits();
      acc.emplace_back(target, value);
    }
    items.push_back(MassFunction::from_accumulated(ds.frame, std::move(acc)));
  }
  return MassDataset::make(ds.frame, std::move(items));
}

}  // namespace bfi
