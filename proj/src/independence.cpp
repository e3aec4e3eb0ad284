#include "bfi/independence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace bfi {

const Frame& independence_frame() {
  static const Frame frame{"I", "P", "~P"};
  return frame;
}

IndependenceMass IndependenceMass::from_mass(MassFunction m) {
  require_same_frame(m.frame(), independence_frame(), errc::unsupported_focal_structure);
  for (const auto& [bits, value] : m.entries()) {
    (void)value;
    switch (bits) {
      case ifocal::kI:
      case ifocal::kP:
      case ifocal::kNotP:
      case ifocal::kDependent:
      case ifocal::kFull:
        break;
      default:
        fail(errc::unsupported_focal_structure,
             "independence mass may not put mass on " +
                 format_set(independence_frame(), bits));
    }
  }
  return IndependenceMass(std::move(m));
}

double jousselme_distance(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), errc::frame_mismatch);
  if (m1.frame().size() > 16)
    fail(errc::frame_too_large, "jousselme distance limited to 16 atoms");
  // signed difference over the union of the supports
  std::vector<std::pair<std::uint64_t, double>> delta;
  delta.reserve(m1.focal_count() + m2.focal_count());
  {
    auto it1 = m1.entries().begin(), end1 = m1.entries().end();
    auto it2 = m2.entries().begin(), end2 = m2.entries().end();
    while (it1 != end1 || it2 != end2) {
      if (it2 == end2 || (it1 != end1 && it1->first < it2->first))
        delta.emplace_back(it1->first, it1->second), ++it1;
      else if (it1 == end1 || it2->first < it1->first)
        delta.emplace_back(it2->first, -it2->second), ++it2;
      else
        delta.emplace_back(it1->first, it1->second - it2->second), ++it1, ++it2;
    }
  }
  double quad = 0.0;
  for (std::size_t a = 0; a < delta.size(); ++a) {
    for (std::size_t b = 0; b < delta.size(); ++b) {
      const std::uint64_t sa = delta[a].first, sb = delta[b].first;
      double kernel;
      if ((sa | sb) == 0)
        kernel = 1.0;  // D(∅,∅)
      else
        kernel = static_cast<double>(std::popcount(sa & sb)) /
                 static_cast<double>(std::popcount(sa | sb));
      quad += delta[a].second * delta[b].second * kernel;
    }
  }
  return std::sqrt(std::max(0.0, 0.5 * quad));
}

MassDataset MassDataset::make(Frame frame, std::vector<MassFunction> items) {
  if (items.empty()) fail(errc::too_few_items, "dataset must be non-empty");
  for (const auto& m : items)
    require_same_frame(m.frame(), frame, errc::misaligned_datasets);
  return MassDataset{std::move(frame), std::move(items)};
}

std::vector<std::vector<int>> ClusterModel::members() const {
  std::vector<std::vector<int>> out(k);
  for (int j = 0; j < static_cast<int>(assignment.size()); ++j)
    out[assignment[j]].push_back(j);
  return out;
}

std::vector<int> ClusterModel::sizes() const {
  std::vector<int> out(k, 0);
  for (int c : assignment) ++out[c];
  return out;
}

bool ClusterModel::has_empty_cluster() const {
  auto s = sizes();
  return std::find(s.begin(), s.end(), 0) != s.end();
}

ClusterModel cluster_masses(const MassDataset& ds, int k) {
  const int n = ds.size();
  if (k < 1) fail(errc::out_of_range, "cluster count must be at least 1");
  if (k > n)
    fail(errc::too_few_items, "cannot form " + std::to_string(k) + " clusters from " +
                                  std::to_string(n) + " items");
  std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = jousselme_distance(ds.items[i], ds.items[j]);
      dist[static_cast<std::size_t>(i) * n + j] = d;
      dist[static_cast<std::size_t>(j) * n + i] = d;
    }
  auto d_at = [&](int i, int j) { return dist[static_cast<std::size_t>(i) * n + j]; };

  // farthest-first seeding, item 0 first
  std::vector<int> medoids{0};
  std::vector<bool> chosen(n, false);
  chosen[0] = true;
  while (static_cast<int>(medoids.size()) < k) {
    int best = -1;
    double best_score = -1.0;
    for (int i = 0; i < n; ++i) {
      if (chosen[i]) continue;
      double nearest = std::numeric_limits<double>::infinity();
      for (int m : medoids) nearest = std::min(nearest, d_at(i, m));
      if (nearest > best_score) {
        best_score = nearest;
        best = i;
      }
    }
    medoids.push_back(best);
    chosen[best] = true;
  }

  std::vector<int> assignment(n, 0);
  for (int round = 0; round < 100; ++round) {
    std::vector<int> next_assignment(n);
    for (int i = 0; i < n; ++i) {
      int best_c = 0;
      double best_d = d_at(i, medoids[0]);
      for (int c = 1; c < k; ++c) {
        double d = d_at(i, medoids[c]);
        if (d < best_d) {
          best_d = d;
          best_c = c;
        }
      }
      next_assignment[i] = best_c;
    }
    std::vector<int> next_medoids = medoids;
    for (int c = 0; c < k; ++c) {
      int best = -1;
      double best_sum = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i) {
        if (next_assignment[i] != c) continue;
        double sum = 0.0;
        for (int j = 0; j < n; ++j)
          if (next_assignment[j] == c) sum += d_at(i, j);
        if (sum < best_sum) {
          best_sum = sum;
          best = i;
        }
      }
      if (best >= 0) next_medoids[c] = best;  // empty clusters keep their seed
    }
    bool stable = next_assignment == assignment && next_medoids == medoids;
    assignment = std::move(next_assignment);
    medoids = std::move(next_medoids);
    if (stable) break;
  }
  return ClusterModel{k, std::move(assignment), std::move(medoids)};
}

std::vector<ClusterMatch> match_clusters(const ClusterModel& c1, const ClusterModel& c2) {
  if (c1.assignment.size() != c2.assignment.size())
    fail(errc::misaligned_datasets, "cluster models cover different item counts");
  auto members1 = c1.members();
  auto members2 = c2.members();
  std::vector<ClusterMatch> out;
  out.reserve(c1.k);
  for (int k1 = 0; k1 < c1.k; ++k1) {
    ClusterMatch match;
    match.cluster1 = k1;
    if (members1[k1].empty()) {
      match.empty_source = true;
      out.push_back(match);
      continue;
    }
    for (int k2 = 0; k2 < c2.k; ++k2) {
      std::vector<int> common;
      std::set_intersection(members1[k1].begin(), members1[k1].end(), members2[k2].begin(),
                            members2[k2].end(), std::back_inserter(common));
      double overlap = static_cast<double>(common.size()) /
                       static_cast<double>(members1[k1].size());
      if (overlap > match.overlap) {  // strict: ties stay with the lowest k2
        match.overlap = overlap;
        match.cluster2 = k2;
      }
    }
    out.push_back(match);
  }
  return out;
}

ClusterDistance cluster_pair_distance(const MassDataset& ds1, const MassDataset& ds2,
                                      const std::vector<int>& cluster1_items,
                                      const std::vector<int>& cluster2_items) {
  if (ds1.size() != ds2.size())
    fail(errc::misaligned_datasets, "datasets have different item counts");
  std::vector<int> common;
  std::set_intersection(cluster1_items.begin(), cluster1_items.end(), cluster2_items.begin(),
                        cluster2_items.end(), std::back_inserter(common));
  if (common.empty()) return {1.0, true};
  double sum = 0.0;
  for (int j : common) {
    if (j < 0 || j >= ds1.size()) fail(errc::out_of_range, "cluster item index out of range");
    sum += jousselme_distance(ds1.items[j], ds2.items[j]);
  }
  return {sum / static_cast<double>(common.size()), false};
}

IndependenceMass cluster_pair_mass(double alpha1, double dist, double beta_conf,
                                   Orientation orientation) {
  for (double v : {alpha1, dist, beta_conf})
    if (!(v >= 0.0 && v <= 1.0))
      fail(errc::out_of_range, "cluster-pair parameters must lie in [0,1]");
  const double dependent_share =
      orientation == Orientation::overlap_means_dependence ? alpha1 : 1.0 - alpha1;
  std::vector<std::pair<std::uint64_t, double>> acc{
      {ifocal::kI, beta_conf * (1.0 - dependent_share)},
      {ifocal::kP, beta_conf * dependent_share * (1.0 - dist)},
      {ifocal::kNotP, beta_conf * dependent_share * dist},
      {ifocal::kFull, 1.0 - beta_conf},
  };
  return IndependenceMass::from_mass(
      MassFunction::from_accumulated(independence_frame(), std::move(acc)));
}

IndependenceEstimate source_independence_mass(const MassDataset& ds1, const MassDataset& ds2,
                                              int k, const BetaConfPolicy& beta_conf,
                                              Orientation orientation) {
  if (ds1.size() != ds2.size())
    fail(errc::misaligned_datasets, "datasets have different item counts");
  require_same_frame(ds1.frame, ds2.frame, errc::misaligned_datasets);
  if (k == 0) k = ds1.frame.size();
  if (beta_conf.constant && !(*beta_conf.constant >= 0.0 && *beta_conf.constant <= 1.0))
    fail(errc::out_of_range, "beta_conf override must lie in [0,1]");

  auto c1 = cluster_masses(ds1, k);
  auto c2 = cluster_masses(ds2, k);
  auto matches = match_clusters(c1, c2);
  auto members1 = c1.members();
  auto members2 = c2.members();

  std::vector<PairDiagnostic> pairs;
  pairs.reserve(k);
  double sum_i = 0.0, sum_p = 0.0, sum_np = 0.0, sum_dep = 0.0, sum_full = 0.0;
  for (const auto& match : matches) {
    double bc;
    ClusterDistance dist{1.0, false};
    if (match.empty_source) {
      bc = 0.0;  // no observations, pure ignorance regardless of the override
    } else {
      bc = beta_conf.constant
               ? *beta_conf.constant
               : static_cast<double>(members1[match.cluster1].size()) /
                     (static_cast<double>(members1[match.cluster1].size()) + 1.0);
      dist = cluster_pair_distance(ds1, ds2, members1[match.cluster1],
                                   members2[match.cluster2]);
    }
    auto pair_mass = cluster_pair_mass(match.overlap, dist.value, bc, orientation);
    sum_i += pair_mass.on_independent();
    sum_p += pair_mass.on_positive();
    sum_np += pair_mass.on_negative();
    sum_dep += pair_mass.on_dependent();
    sum_full += pair_mass.on_ignorance();
    pairs.push_back(PairDiagnostic{match.cluster1, match.cluster2, match.overlap, dist.value,
                                   bc, match.empty_source, dist.no_common_items,
                                   std::move(pair_mass)});
  }
  const double inv_k = 1.0 / static_cast<double>(k);
  auto averaged = IndependenceMass::from_mass(MassFunction::from_accumulated(
      independence_frame(), {{ifocal::kI, sum_i * inv_k},
                             {ifocal::kP, sum_p * inv_k},
                             {ifocal::kNotP, sum_np * inv_k},
                             {ifocal::kDependent, sum_dep * inv_k},
                             {ifocal::kFull, sum_full * inv_k}}));
  return IndependenceEstimate{std::move(averaged), std::move(c1), std::move(c2),
                              std::move(pairs)};
}

}  // namespace bfi
