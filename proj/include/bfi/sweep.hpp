#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bfi/mass.hpp"

namespace bfi {

enum class SweepParam { alpha, beta, gamma };

const char* to_string(SweepParam p);
std::optional<SweepParam> sweep_param_from_string(const std::string& name);

/// Parameter grid for independence discounting of a base mass: every one of
/// alpha/beta/gamma is either fixed to a value or varied over an evenly
/// spaced [0,1] grid (at least 2 steps), each exactly once. Rows are
/// emitted row-major with varying parameters nested in (alpha, beta,
/// gamma) order.
struct SweepSpec {
  MassFunction base;
  std::vector<std::pair<SweepParam, double>> fixed;
  std::vector<std::pair<SweepParam, int>> varying;  // steps over [0,1]
  bool track_full_mass = false;
};

struct SweepRow {
  double alpha;
  double beta;
  double gamma;
  double m_empty;
  double m_omega;
  std::optional<MassFunction> mass;  // only when track_full_mass
};

/// Default base when the CLI gets none: a dogmatic mass (m(Ω) = 0,
/// m(∅) = 0) on a 3-atom frame.
MassFunction default_sweep_base();

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV rows "alpha,beta,gamma,m_empty,m_omega[,mass]", 6 significant
/// digits, locale-independent.
std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool track_full_mass);

}  // namespace bfi
