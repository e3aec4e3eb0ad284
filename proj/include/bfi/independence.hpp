#pragma once

#include <optional>
#include <vector>

#include "bfi/mass.hpp"

namespace bfi {

/// Three-atom frame {I, P, ~P}: a source is independent of another (I),
/// follows it (P), or contradicts it (~P).
const Frame& independence_frame();

namespace ifocal {
// subset masks on independence_frame()
inline constexpr std::uint64_t kI = 0b001;
inline constexpr std::uint64_t kP = 0b010;
inline constexpr std::uint64_t kNotP = 0b100;
inline constexpr std::uint64_t kDependent = kP | kNotP;
inline constexpr std::uint64_t kFull = kI | kP | kNotP;
}  // namespace ifocal

/// Mass on {I, P, ~P} with focals restricted to {I}, {P}, {~P}, {P∪~P}
/// and the full frame. Construction validates the structure.
class IndependenceMass {
 public:
  static IndependenceMass from_mass(MassFunction m);

  const MassFunction& mass() const { return mass_; }
  double on_independent() const { return mass_.mass_bits(ifocal::kI); }
  double on_positive() const { return mass_.mass_bits(ifocal::kP); }
  double on_negative() const { return mass_.mass_bits(ifocal::kNotP); }
  double on_dependent() const { return mass_.mass_bits(ifocal::kDependent); }
  double on_ignorance() const { return mass_.mass_bits(ifocal::kFull); }

  /// True when the focal structure is {I},{P},{~P},{𝓘} only (the validated
  /// three-parameter fast path); false when mass sits on P∪~P.
  bool is_three_parameter_form() const { return on_dependent() == 0.0; }

 private:
  explicit IndependenceMass(MassFunction m) : mass_(std::move(m)) {}
  MassFunction mass_;
};

/// d(m1, m2) = sqrt(0.5·δᵀDδ) with D(A,B) = |A∩B|/|A∪B| and D(∅,∅) = 1;
/// evaluated sparsely over the union of the two supports.
double jousselme_distance(const MassFunction& m1, const MassFunction& m2);

/// Index-aligned collection of mass functions from one source: item j of
/// two sources' datasets describes the same object.
struct MassDataset {
  Frame frame;
  std::vector<MassFunction> items;

  static MassDataset make(Frame frame, std::vector<MassFunction> items);
  int size() const { return static_cast<int>(items.size()); }
};

struct ClusterModel {
  int k = 0;
  std::vector<int> assignment;  // item index -> cluster id
  std::vector<int> medoids;     // cluster id -> item index

  std::vector<std::vector<int>> members() const;  // per cluster, ascending
  std::vector<int> sizes() const;
  bool has_empty_cluster() const;
};

/// Deterministic k-medoids under the Jousselme distance: medoid 0 is item
/// 0, further seeds by farthest-first; assignment ties go to the lowest
/// cluster id, medoid ties to the lowest item index; iterates to a
/// fixpoint (at most 100 rounds).
ClusterModel cluster_masses(const MassDataset& ds, int k);

struct ClusterMatch {
  int cluster1 = 0;
  int cluster2 = 0;       // argmax of the overlap, ties to the lowest id
  double overlap = 0.0;   // |Cl1 ∩ Cl2| / |Cl1|
  bool empty_source = false;
};

/// Non-symmetric matching of c1's clusters onto c2's.
std::vector<ClusterMatch> match_clusters(const ClusterModel& c1, const ClusterModel& c2);

struct ClusterDistance {
  double value = 1.0;
  bool no_common_items = false;  // distance defaulted to 1 (flagged)
};

/// Mean Jousselme distance between the two sources' masses over the items
/// the two clusters share.
ClusterDistance cluster_pair_distance(const MassDataset& ds1, const MassDataset& ds2,
                                      const std::vector<int>& cluster1_items,
                                      const std::vector<int>& cluster2_items);

/// Whether cluster overlap counts as evidence of dependence (default) or
/// of independence (the mirrored reading).
enum class Orientation { overlap_means_dependence, overlap_means_independence };

/// Mass contributed by one matched cluster pair. With the default
/// orientation: m(I) = β(1-α¹), m(P) = β·α¹·(1-dist), m(~P) = β·α¹·dist,
/// m(𝓘) = 1-β.
IndependenceMass cluster_pair_mass(double alpha1, double dist, double beta_conf,
                                   Orientation orientation = Orientation::overlap_means_dependence);

struct BetaConfPolicy {
  /// When unset, β_conf of a cluster with s items is s/(s+1); empty
  /// clusters always get 0.
  std::optional<double> constant;
};

struct PairDiagnostic {
  int cluster1;
  int cluster2;
  double alpha1;
  double dist;
  double beta_conf;
  bool empty_cluster;
  bool no_common_items;
  IndependenceMass pair_mass;
};

struct IndependenceEstimate {
  IndependenceMass mass;  // average of the per-pair masses
  ClusterModel clusters1;
  ClusterModel clusters2;
  std::vector<PairDiagnostic> pairs;
};

/// Full estimation pipeline: cluster both sources (k defaults to |Ω| when
/// 0), match non-symmetrically, average the per-pair masses.
IndependenceEstimate source_independence_mass(
    const MassDataset& ds1, const MassDataset& ds2, int k = 0,
    const BetaConfPolicy& beta_conf = {},
    Orientation orientation = Orientation::overlap_means_dependence);

}  // namespace bfi
