#include "bfi/product_space.hpp"

#include <bit>
#include <utility>
#include <vector>

namespace bfi {

namespace {

// right-hand sides are always spelled out ("I∪P∪~P"), the Ω shorthand is
// reserved for the left frame
std::string join_labels(const Frame& frame, std::uint64_t bits) {
  std::string out;
  for (int i = 0; i < frame.size(); ++i) {
    if (!((bits >> i) & 1u)) continue;
    if (!out.empty()) out += "∪";
    out += frame.label(i);
  }
  return out;
}

Frame make_flat_frame(const Frame& left, const Frame& right) {
  if (left.size() * right.size() > Frame::kMaxAtoms)
    fail(errc::frame_too_large, "product frame would have " +
                                    std::to_string(left.size() * right.size()) +
                                    " pair atoms, limit is " + std::to_string(Frame::kMaxAtoms));
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(left.size()) * right.size());
  for (int i = 0; i < left.size(); ++i)
    for (int j = 0; j < right.size(); ++j)
      labels.push_back(left.label(i) + "×" + right.label(j));
  return Frame(std::move(labels));
}

}  // namespace

ProductFrame::ProductFrame(Frame left, Frame right)
    : left_(std::move(left)), right_(std::move(right)), flat_(make_flat_frame(left_, right_)) {}

std::uint64_t ProductFrame::cylinder_bits(std::uint64_t left_bits,
                                          std::uint64_t right_bits) const {
  std::uint64_t out = 0;
  for (int i = 0; i < left_.size(); ++i) {
    if (!((left_bits >> i) & 1u)) continue;
    out |= right_bits << (i * right_.size());
  }
  return out;
}

FocalSet ProductFrame::cylinder(const FocalSet& a, const FocalSet& b) const {
  require_same_frame(a.frame(), left_);
  require_same_frame(b.frame(), right_);
  return FocalSet(flat_, cylinder_bits(a.bits(), b.bits()));
}

std::uint64_t ProductFrame::project_left_bits(std::uint64_t y) const {
  const std::uint64_t right_full = right_.full_bits();
  std::uint64_t out = 0;
  for (int i = 0; i < left_.size(); ++i)
    if ((y >> (i * right_.size())) & right_full) out |= std::uint64_t{1} << i;
  return out;
}

FocalSet ProductFrame::project_left(const FocalSet& y) const {
  require_same_frame(y.frame(), flat_);
  return FocalSet(left_, project_left_bits(y.bits()));
}

std::uint64_t ProductFrame::left_slice_bits(std::uint64_t y, int right_atom) const {
  std::uint64_t out = 0;
  for (int i = 0; i < left_.size(); ++i)
    if ((y >> (i * right_.size() + right_atom)) & 1u) out |= std::uint64_t{1} << i;
  return out;
}

bool ProductFrame::is_cylinder(const FocalSet& y) const {
  require_same_frame(y.frame(), flat_);
  const std::uint64_t proj_left = project_left_bits(y.bits());
  std::uint64_t proj_right = 0;
  for (int j = 0; j < right_.size(); ++j)
    if (left_slice_bits(y.bits(), j)) proj_right |= std::uint64_t{1} << j;
  return y.bits() == cylinder_bits(proj_left, proj_right);
}

std::string ProductFrame::format_product_set(std::uint64_t y) const {
  if (y == 0) return "∅";
  // group right atoms by identical non-empty left slice
  struct Term {
    std::uint64_t left_bits;
    std::uint64_t right_bits;
  };
  std::vector<Term> terms;
  for (int j = 0; j < right_.size(); ++j) {
    const std::uint64_t slice = left_slice_bits(y, j);
    if (!slice) continue;
    bool merged = false;
    for (auto& t : terms)
      if (t.left_bits == slice) {
        t.right_bits |= std::uint64_t{1} << j;
        merged = true;
        break;
      }
    if (!merged) terms.push_back({slice, std::uint64_t{1} << j});
  }
  std::string out;
  for (const auto& t : terms) {
    std::string left_str = format_set(left_, t.left_bits);
    if (std::popcount(t.left_bits) > 1 && t.left_bits != left_.full_bits())
      left_str = "(" + left_str + ")";
    std::string right_str = join_labels(right_, t.right_bits);
    if (std::popcount(t.right_bits) > 1) right_str = "(" + right_str + ")";
    std::string term = left_str + "×" + right_str;
    if (terms.size() > 1) term = "(" + term + ")";
    if (!out.empty()) out += "∪";
    out += term;
  }
  return out;
}

std::string ProductFrame::format_product_set(const FocalSet& y) const {
  require_same_frame(y.frame(), flat_);
  return format_product_set(y.bits());
}

MassFunction vacuous_extension(const MassFunction& m_right, const ProductFrame& pf) {
  require_same_frame(m_right.frame(), pf.right(), errc::frame_mismatch);
  const std::uint64_t left_full = pf.left().full_bits();
  std::vector<std::pair<std::uint64_t, double>> acc;
  acc.reserve(m_right.focal_count());
  for (const auto& [bits, value] : m_right.entries())
    acc.emplace_back(pf.cylinder_bits(left_full, bits), value);
  return MassFunction::from_accumulated(pf.frame(), std::move(acc));
}

MassFunction balloon(const MassFunction& m_left, const ProductFrame& pf, int right_atom) {
  require_same_frame(m_left.frame(), pf.left(), errc::frame_mismatch);
  if (right_atom < 0 || right_atom >= pf.right().size())
    fail(errc::not_an_atom, "ballooning needs a single atom of the right frame");
  const std::uint64_t atom_bit = std::uint64_t{1} << right_atom;
  const std::uint64_t others = pf.right().full_bits() & ~atom_bit;
  const std::uint64_t rest = pf.cylinder_bits(pf.left().full_bits(), others);
  std::vector<std::pair<std::uint64_t, double>> acc;
  acc.reserve(m_left.focal_count());
  for (const auto& [bits, value] : m_left.entries())
    acc.emplace_back(pf.cylinder_bits(bits, atom_bit) | rest, value);
  return MassFunction::from_accumulated(pf.frame(), std::move(acc));
}

MassFunction marginalize_left(const MassFunction& m_product, const ProductFrame& pf) {
  require_same_frame(m_product.frame(), pf.frame(), errc::frame_mismatch);
  std::vector<std::pair<std::uint64_t, double>> acc;
  acc.reserve(m_product.focal_count());
  for (const auto& [bits, value] : m_product.entries())
    acc.emplace_back(pf.project_left_bits(bits), value);
  return MassFunction::from_accumulated(pf.left(), std::move(acc));
}

MassFunction cylinder_extension_left(const MassFunction& m_left, const ProductFrame& pf) {
  require_same_frame(m_left.frame(), pf.left(), errc::frame_mismatch);
  const std::uint64_t right_full = pf.right().full_bits();
  std::vector<std::pair<std::uint64_t, double>> acc;
  acc.reserve(m_left.focal_count());
  for (const auto& [bits, value] : m_left.entries())
    acc.emplace_back(pf.cylinder_bits(bits, right_full), value);
  return MassFunction::from_accumulated(pf.frame(), std::move(acc));
}

}  // namespace bfi
