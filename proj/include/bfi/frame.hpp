#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bfi/errors.hpp"

namespace bfi {

/// Frame of discernment: an ordered set of named, mutually exclusive atoms.
/// Immutable and cheap to copy; two frames compare equal when their label
/// lists are equal, so the same frame loaded from two files is one frame.
class Frame {
 public:
  /// Sparse subset operations use a 64-bit mask, one bit per atom.
  static constexpr int kMaxAtoms = 63;
  /// Dense powerset transforms (commonality, canonical weights) cap lower.
  static constexpr int kMaxDenseAtoms = 20;

  explicit Frame(std::vector<std::string> labels);
  Frame(std::initializer_list<std::string> labels);

  int size() const { return static_cast<int>(data_->labels.size()); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(int atom) const;
  /// Index of `label` in this frame, or -1 when absent.
  int index_of(std::string_view label) const;
  /// Mask with one bit set per atom (the set Ω).
  std::uint64_t full_bits() const { return data_->full; }

  bool operator==(const Frame& other) const;
  bool operator!=(const Frame& other) const { return !(*this == other); }

 private:
  struct Data {
    std::vector<std::string> labels;
    std::uint64_t full = 0;
  };
  std::shared_ptr<const Data> data_;
};

/// A subset of a frame's atoms. Every FocalSet is bound to exactly one
/// frame; binary operations across frames throw.
class FocalSet {
 public:
  FocalSet(Frame frame, std::uint64_t bits);

  static FocalSet empty(Frame frame) { return {std::move(frame), 0}; }
  static FocalSet full(Frame frame);
  static FocalSet singleton(Frame frame, int atom);
  static FocalSet of_labels(Frame frame, const std::vector<std::string>& labels);

  const Frame& frame() const { return frame_; }
  std::uint64_t bits() const { return bits_; }
  int cardinality() const;
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == frame_.full_bits(); }
  bool contains_atom(int atom) const { return (bits_ >> atom) & 1u; }

  FocalSet operator&(const FocalSet& other) const;
  FocalSet operator|(const FocalSet& other) const;
  FocalSet complement() const { return {frame_, ~bits_ & frame_.full_bits()}; }
  bool is_subset_of(const FocalSet& other) const;
  bool intersects(const FocalSet& other) const;

  /// Canonical external form: member labels sorted lexicographically.
  std::vector<std::string> sorted_labels() const;

  bool operator==(const FocalSet& other) const;
  bool operator!=(const FocalSet& other) const { return !(*this == other); }

 private:
  Frame frame_;
  std::uint64_t bits_;
};

void require_same_frame(const Frame& a, const Frame& b,
                        errc code = errc::foreign_focal_set);

/// Renders ∅ / Ω / "a∪b" (atoms in frame order), as used in tables and
/// diagnostics.
std::string format_set(const Frame& frame, std::uint64_t bits);
std::string format_set(const FocalSet& set);

}  // namespace bfi
