#include "bfi/json_io.hpp"

#include <fstream>

namespace bfi {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(errc::parse_error, where + ": " + what);
}

Frame frame_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) bad(where, "expected a non-empty array of atom labels");
  std::vector<std::string> labels;
  labels.reserve(j.size());
  for (const auto& l : j) {
    if (!l.is_string()) bad(where, "atom labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  try {
    return Frame(std::move(labels));
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

json set_to_json(const Frame& frame, std::uint64_t bits) {
  return json(FocalSet(frame, bits).sorted_labels());
}

std::uint64_t set_from_json(const Frame& frame, const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of atom labels");
  std::uint64_t bits = 0;
  for (const auto& l : j) {
    if (!l.is_string()) bad(where, "set members must be strings");
    int idx = frame.index_of(l.get<std::string>());
    if (idx < 0) bad(where, "'" + l.get<std::string>() + "' is not an atom of the frame");
    bits |= std::uint64_t{1} << idx;
  }
  return bits;
}

MassFunction mass_from_json_impl(const json& j, const Frame* inherited,
                                 const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  Frame frame = [&] {
    if (j.contains("frame")) return frame_from_json(j.at("frame"), where + ".frame");
    if (inherited) return *inherited;
    bad(where, "missing \"frame\"");
  }();
  if (inherited && frame != *inherited)
    bad(where + ".frame", "item frame differs from the dataset frame");
  if (!j.contains("focals") || !j.at("focals").is_array())
    bad(where, "missing \"focals\" array");
  std::vector<std::pair<std::uint64_t, double>> entries;
  int index = 0;
  for (const auto& f : j.at("focals")) {
    const std::string fwhere = where + ".focals[" + std::to_string(index++) + "]";
    if (!f.is_object() || !f.contains("set") || !f.contains("mass"))
      bad(fwhere, "expected {\"set\": [...], \"mass\": number}");
    if (!f.at("mass").is_number()) bad(fwhere + ".mass", "mass must be a number");
    entries.emplace_back(set_from_json(frame, f.at("set"), fwhere + ".set"),
                         f.at("mass").get<double>());
  }
  try {
    return MassFunction::make_bits(frame, std::move(entries));
  } catch (const Error& e) {
    bad(where, e.what());
  }
}

}  // namespace

json mass_to_json(const MassFunction& m) {
  json focals = json::array();
  for (const auto& [bits, value] : m.canonical_entries())
    focals.push_back({{"set", set_to_json(m.frame(), bits)}, {"mass", value}});
  return {{"frame", m.frame().labels()}, {"focals", std::move(focals)}};
}

MassFunction mass_from_json(const json& j) { return mass_from_json_impl(j, nullptr, "mass"); }

json dataset_to_json(const MassDataset& ds) {
  json items = json::array();
  for (const auto& m : ds.items) items.push_back(mass_to_json(m));
  return {{"frame", ds.frame.labels()}, {"items", std::move(items)}};
}

MassDataset dataset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("frame")) bad("dataset", "missing \"frame\"");
  Frame frame = frame_from_json(j.at("frame"), "dataset.frame");
  if (!j.contains("items") || !j.at("items").is_array() || j.at("items").empty())
    bad("dataset", "missing non-empty \"items\" array");
  std::vector<MassFunction> items;
  items.reserve(j.at("items").size());
  int index = 0;
  for (const auto& item : j.at("items"))
    items.push_back(
        mass_from_json_impl(item, &frame, "dataset.items[" + std::to_string(index++) + "]"));
  return MassDataset::make(std::move(frame), std::move(items));
}

json product_mass_to_json(const MassFunction& m, const ProductFrame& pf) {
  require_same_frame(m.frame(), pf.frame(), errc::frame_mismatch);
  json focals = json::array();
  for (const auto& [bits, value] : m.canonical_entries()) {
    json pairs = json::array();
    for (int i = 0; i < pf.left().size(); ++i)
      for (int j = 0; j < pf.right().size(); ++j)
        if ((bits >> pf.pair_index(i, j)) & 1u)
          pairs.push_back(json::array({pf.left().label(i), pf.right().label(j)}));
    focals.push_back({{"set", std::move(pairs)}, {"mass", value}});
  }
  return {{"frame", {{"left", pf.left().labels()}, {"right", pf.right().labels()}}},
          {"focals", std::move(focals)}};
}

std::pair<ProductFrame, MassFunction> product_mass_from_json(const json& j) {
  if (!j.is_object() || !j.contains("frame") || !j.at("frame").is_object())
    bad("product mass", "missing \"frame\" object");
  Frame left = frame_from_json(j.at("frame").value("left", json()), "product mass.frame.left");
  Frame right =
      frame_from_json(j.at("frame").value("right", json()), "product mass.frame.right");
  ProductFrame pf(std::move(left), std::move(right));
  if (!j.contains("focals") || !j.at("focals").is_array())
    bad("product mass", "missing \"focals\" array");
  std::vector<std::pair<std::uint64_t, double>> entries;
  int index = 0;
  for (const auto& f : j.at("focals")) {
    const std::string fwhere = "product mass.focals[" + std::to_string(index++) + "]";
    if (!f.is_object() || !f.contains("set") || !f.contains("mass") ||
        !f.at("mass").is_number())
      bad(fwhere, "expected {\"set\": [[left,right],...], \"mass\": number}");
    std::uint64_t bits = 0;
    for (const auto& pair : f.at("set")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
        bad(fwhere + ".set", "pair atoms must be [left,right] label pairs");
      int li = pf.left().index_of(pair[0].get<std::string>());
      int ri = pf.right().index_of(pair[1].get<std::string>());
      if (li < 0 || ri < 0) bad(fwhere + ".set", "pair atom outside the product frame");
      bits |= std::uint64_t{1} << pf.pair_index(li, ri);
    }
    entries.emplace_back(bits, f.at("mass").get<double>());
  }
  MassFunction m = [&] {
    try {
      return MassFunction::make_bits(pf.frame(), std::move(entries));
    } catch (const Error& e) {
      bad("product mass", e.what());
    }
  }();
  return {std::move(pf), std::move(m)};
}

namespace {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(errc::parse_error, e.what());
  }
  return j;
}

}  // namespace

MassFunction load_mass_file(const std::string& path) {
  try {
    return mass_from_json(load_json_file(path));
  } catch (const Error& e) {
    fail(errc::parse_error, path + ": " + e.message());
  }
}

MassDataset load_dataset_file(const std::string& path) {
  try {
    return dataset_from_json(load_json_file(path));
  } catch (const Error& e) {
    fail(errc::parse_error, path + ": " + e.message());
  }
}

}  // namespace bfi
