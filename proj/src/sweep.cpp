#include "bfi/sweep.hpp"

#include <algorithm>

#include "bfi/format.hpp"
#include "bfi/independence_discounting.hpp"
#include "bfi/json_io.hpp"

namespace bfi {

const char* to_string(SweepParam p) {
  switch (p) {
    case SweepParam::alpha: return "alpha";
    case SweepParam::beta: return "beta";
    case SweepParam::gamma: return "gamma";
  }
  return "?";
}

std::optional<SweepParam> sweep_param_from_string(const std::string& name) {
  if (name == "alpha") return SweepParam::alpha;
  if (name == "beta") return SweepParam::beta;
  if (name == "gamma") return SweepParam::gamma;
  return std::nullopt;
}

MassFunction default_sweep_base() {
  static const Frame frame{"w1", "w2", "w3"};
  return MassFunction::make_bits(frame, {{0b001, 0.5}, {0b011, 0.3}, {0b110, 0.2}});
}

namespace {

struct Axis {
  SweepParam param;
  std::vector<double> values;
};

double grid_value(int step, int steps) {
  return static_cast<double>(step) / static_cast<double>(steps - 1);
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  bool seen[3] = {false, false, false};
  auto mark = [&](SweepParam p) {
    if (seen[static_cast<int>(p)])
      fail(errc::out_of_range, std::string("parameter ") + to_string(p) + " given twice");
    seen[static_cast<int>(p)] = true;
  };
  double fixed_values[3] = {0, 0, 0};
  for (const auto& [p, v] : spec.fixed) {
    mark(p);
    if (!(v >= 0.0 && v <= 1.0))
      fail(errc::out_of_range, std::string(to_string(p)) + " must lie in [0,1]");
    fixed_values[static_cast<int>(p)] = v;
  }
  std::vector<Axis> axes;
  for (const auto& [p, steps] : spec.varying) {
    mark(p);
    if (steps < 2) fail(errc::out_of_range, "a varying parameter needs at least 2 steps");
    Axis axis{p, {}};
    axis.values.reserve(steps);
    for (int s = 0; s < steps; ++s) axis.values.push_back(grid_value(s, steps));
    axes.push_back(std::move(axis));
  }
  if (!(seen[0] && seen[1] && seen[2]))
    fail(errc::out_of_range, "alpha, beta and gamma must each be fixed or varied");
  // row-major nesting in canonical (alpha, beta, gamma) order
  std::sort(axes.begin(), axes.end(),
            [](const Axis& a, const Axis& b) { return a.param < b.param; });

  std::size_t total = 1;
  for (const auto& axis : axes) total *= axis.values.size();
  std::vector<SweepRow> rows;
  rows.reserve(total);
  std::vector<std::size_t> index(axes.size(), 0);
  for (std::size_t row = 0; row < total; ++row) {
    double value[3] = {fixed_values[0], fixed_values[1], fixed_values[2]};
    for (std::size_t a = 0; a < axes.size(); ++a)
      value[static_cast<int>(axes[a].param)] = axes[a].values[index[a]];
    IndependenceParams params(value[0], value[1], value[2]);
    auto result = discount_by_independence_closed_form(spec.base, params);
    SweepRow out{value[0], value[1], value[2], result.conflict(), result.ignorance(),
                 std::nullopt};
    if (spec.track_full_mass) out.mass = std::move(result);
    rows.push_back(std::move(out));
    for (std::size_t a = axes.size(); a-- > 0;) {
      if (++index[a] < axes[a].values.size()) break;
      index[a] = 0;
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool track_full_mass) {
  std::string out = "alpha,beta,gamma,m_empty,m_omega";
  if (track_full_mass) out += ",mass";
  out += "\n";
  for (const auto& row : rows) {
    out += format_number(row.alpha) + "," + format_number(row.beta) + "," +
           format_number(row.gamma) + "," + format_number(row.m_empty) + "," +
           format_number(row.m_omega);
    if (track_full_mass) {
      std::string mass_json = row.mass ? mass_to_json(*row.mass).dump() : "";
      out += ",\"";
      for (char c : mass_json) {  // CSV-quote the embedded JSON
        if (c == '"') out += "\"\"";
        else out += c;
      }
      out += "\"";
    }
    out += "\n";
  }
  return out;
}

}  // namespace bfi
