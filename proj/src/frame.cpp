#include "bfi/frame.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace bfi {

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty()) fail(errc::invalid_frame, "frame needs at least one atom");
  if (static_cast<int>(labels.size()) > kMaxAtoms)
    fail(errc::frame_too_large,
         "frame has " + std::to_string(labels.size()) + " atoms, limit is " +
             std::to_string(kMaxAtoms));
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels) {
    if (l.empty()) fail(errc::invalid_frame, "empty atom label");
    if (!seen.insert(l).second) fail(errc::invalid_frame, "duplicate atom label '" + l + "'");
  }
  auto data = std::make_shared<Data>();
  data->labels = std::move(labels);
  data->full = (data->labels.size() == 64)
                   ? ~std::uint64_t{0}
                   : ((std::uint64_t{1} << data->labels.size()) - 1);
  data_ = std::move(data);
}

Frame::Frame(std::initializer_list<std::string> labels)
    : Frame(std::vector<std::string>(labels)) {}

const std::string& Frame::label(int atom) const {
  if (atom < 0 || atom >= size()) fail(errc::out_of_range, "atom index out of range");
  return data_->labels[atom];
}

int Frame::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (data_->labels[i] == label) return i;
  return -1;
}

bool Frame::operator==(const Frame& other) const {
  return data_ == other.data_ || data_->labels == other.data_->labels;
}

void require_same_frame(const Frame& a, const Frame& b, errc code) {
  if (a != b) fail(code, "operands are bound to different frames");
}

FocalSet::FocalSet(Frame frame, std::uint64_t bits) : frame_(std::move(frame)), bits_(bits) {
  if (bits_ & ~frame_.full_bits())
    fail(errc::foreign_focal_set, "subset mask has bits outside the frame");
}

FocalSet FocalSet::full(Frame frame) {
  auto full = frame.full_bits();
  return {std::move(frame), full};
}

FocalSet FocalSet::singleton(Frame frame, int atom) {
  if (atom < 0 || atom >= frame.size()) fail(errc::out_of_range, "atom index out of range");
  return {std::move(frame), std::uint64_t{1} << atom};
}

FocalSet FocalSet::of_labels(Frame frame, const std::vector<std::string>& labels) {
  std::uint64_t bits = 0;
  for (const auto& l : labels) {
    int i = frame.index_of(l);
    if (i < 0) fail(errc::foreign_focal_set, "label '" + l + "' is not an atom of the frame");
    bits |= std::uint64_t{1} << i;
  }
  return {std::move(frame), bits};
}

int FocalSet::cardinality() const { return std::popcount(bits_); }

FocalSet FocalSet::operator&(const FocalSet& other) const {
  require_same_frame(frame_, other.frame_);
  return {frame_, bits_ & other.bits_};
}

FocalSet FocalSet::operator|(const FocalSet& other) const {
  require_same_frame(frame_, other.frame_);
  return {frame_, bits_ | other.bits_};
}

bool FocalSet::is_subset_of(const FocalSet& other) const {
  require_same_frame(frame_, other.frame_);
  return (bits_ & ~other.bits_) == 0;
}

bool FocalSet::intersects(const FocalSet& other) const {
  require_same_frame(frame_, other.frame_);
  return (bits_ & other.bits_) != 0;
}

std::vector<std::string> FocalSet::sorted_labels() const {
  std::vector<std::string> out;
  for (int i = 0; i < frame_.size(); ++i)
    if (contains_atom(i)) out.push_back(frame_.label(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool FocalSet::operator==(const FocalSet& other) const {
  return frame_ == other.frame_ && bits_ == other.bits_;
}

std::string format_set(const Frame& frame, std::uint64_t bits) {
  if (bits == 0) return "∅";
  if (bits == frame.full_bits()) return "Ω";
  std::string out;
  for (int i = 0; i < frame.size(); ++i) {
    if ((bits >> i) & 1u) {
      if (!out.empty()) out += "∪";
      out += frame.label(i);
    }
  }
  return out;
}

std::string format_set(const FocalSet& set) { return format_set(set.frame(), set.bits()); }

}  // namespace bfi
