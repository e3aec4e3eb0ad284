#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bfi/independence.hpp"

namespace bfi {

/// Seed for the synthetic dataset generator: BFI_SEED when set, 42
/// otherwise.
std::uint64_t seed_from_env();

/// Group label per item: round-robin over `groups` (planted, deterministic).
std::vector<int> planted_labels(int items, int groups);

/// Independent random group label per item.
std::vector<int> random_labels(int items, int groups, std::mt19937_64& rng);

/// One simple-support mass per item, concentrated on the singleton of the
/// item's group atom: m({ω_g}) = base + spread·u, remainder on Ω. With the
/// defaults, within-group Jousselme distances stay below between-group
/// ones, so the planted partition is recoverable.
MassDataset planted_dataset(const Frame& frame, const std::vector<int>& labels,
                            std::mt19937_64& rng, double base = 0.55, double spread = 0.3);

/// Singleton focals move to their complement (on a 2-atom frame this swaps
/// the two singletons); other focals are unchanged.
MassDataset complement_swapped(const MassDataset& ds);

}  // namespace bfi
