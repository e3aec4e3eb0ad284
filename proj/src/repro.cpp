#include "bfi/repro.hpp"

#include <cmath>
#include <map>

#include <json.hpp>

#include "bfi/combination.hpp"
#include "bfi/format.hpp"
#include "bfi/independence_discounting.hpp"

namespace bfi {

namespace {

using nlohmann::json;

constexpr double kPrintedTolerance = 1e-3;
constexpr double kOracleTolerance = 1e-9;

MassFunction mass_from_fixture(const Frame& frame, const json& focals) {
  std::vector<std::pair<std::uint64_t, double>> entries;
  for (const auto& f : focals) {
    std::uint64_t bits = 0;
    for (const auto& l : f.at("set")) bits |= std::uint64_t{1} << frame.index_of(l.get<std::string>());
    entries.emplace_back(bits, f.at("mass").get<double>());
  }
  return MassFunction::make_bits(frame, std::move(entries));
}

std::uint64_t plain_set_bits(const Frame& frame, const json& set) {
  std::uint64_t bits = 0;
  for (const auto& l : set) bits |= std::uint64_t{1} << frame.index_of(l.get<std::string>());
  return bits;
}

std::uint64_t product_set_bits(const ProductFrame& pf, const json& terms) {
  std::uint64_t bits = 0;
  for (const auto& term : terms) {
    std::uint64_t left = term.at("left").is_null() ? pf.left().full_bits()
                                                   : plain_set_bits(pf.left(), term.at("left"));
    std::uint64_t right = plain_set_bits(pf.right(), term.at("right"));
    bits |= pf.cylinder_bits(left, right);
  }
  return bits;
}

IndependenceParams params_from_fixture(const json& j) {
  return IndependenceParams(j.at("alpha").get<double>(), j.at("beta").get<double>(),
                            j.at("gamma").get<double>());
}

ReproCell evaluate_cell(const json& cell, double computed, std::string focal) {
  ReproCell out;
  out.column = cell.at("column").get<std::string>();
  out.focal = std::move(focal);
  out.status = cell.at("status").get<std::string>();
  out.note = cell.value("note", "");
  out.computed = computed;
  if (!cell.at("printed").is_null()) out.printed = cell.at("printed").get<double>();
  if (cell.contains("oracle")) out.oracle = cell.at("oracle").get<double>();
  out.flagged = out.status != "match";
  if (out.flagged)
    out.pass = out.oracle && std::abs(computed - *out.oracle) <= kOracleTolerance;
  else
    out.pass = out.printed && std::abs(computed - *out.printed) <= kPrintedTolerance;
  return out;
}

ReproReport repro_table1(const json& fixture) {
  ReproReport report;
  report.table = 1;
  Frame frame(fixture.at("frame").get<std::vector<std::string>>());
  auto m1 = mass_from_fixture(frame, fixture.at("m1"));
  auto params = params_from_fixture(fixture.at("table1").at("params"));
  auto trace = discount_by_independence_trace(m1, params.to_mass());

  const std::map<std::string, const MassFunction*> columns{
      {"extended", &trace.extended},
      {"cond_i", &trace.given_independent},
      {"cond_neg", &trace.given_negative},
      {"combined", &trace.combined},
  };
  std::vector<std::uint64_t> printed_combined;
  for (const auto& cell : fixture.at("table1").at("cells")) {
    std::uint64_t bits = product_set_bits(trace.pf, cell.at("terms"));
    const auto& column = columns.at(cell.at("column").get<std::string>());
    report.cells.push_back(
        evaluate_cell(cell, column->mass_bits(bits), trace.pf.format_product_set(bits)));
    if (cell.at("column") == "combined" && !cell.at("printed").is_null())
      printed_combined.push_back(bits);
  }

  double printed_total = 0.0;
  for (std::uint64_t bits : printed_combined) printed_total += trace.combined.mass_bits(bits);
  report.notes.push_back("printed combined cells cover " + format_number(printed_total) +
                         " of the total mass");
  bool total_ok = std::abs(trace.combined.total() - 1.0) <= 1e-12;
  report.notes.push_back(std::string("recomputed combined column sums to 1: ") +
                         (total_ok ? "yes" : "NO"));
  // every recomputed focal beyond the printed ones must be the flagged omission
  const std::uint64_t omission_bits =
      trace.pf.cylinder_bits(trace.pf.left().full_bits(), 0b011);  // Ω×(I∪P)
  bool extras_ok = true;
  for (const auto& [bits, value] : trace.combined.entries()) {
    (void)value;
    bool printed = false;
    for (std::uint64_t p : printed_combined) printed = printed || p == bits;
    if (!printed && bits != omission_bits) extras_ok = false;
  }
  report.notes.push_back(std::string("supplementary focals beyond the flagged omission: ") +
                         (extras_ok ? "none" : "PRESENT"));
  report.ok = total_ok && extras_ok;
  for (const auto& cell : report.cells) report.ok = report.ok && cell.pass;
  return report;
}

ReproReport repro_table2(const json& fixture) {
  ReproReport report;
  report.table = 2;
  Frame frame(fixture.at("frame").get<std::vector<std::string>>());
  auto m1 = mass_from_fixture(frame, fixture.at("m1"));
  auto m2 = mass_from_fixture(frame, fixture.at("m2"));
  auto params = params_from_fixture(fixture.at("table2").at("params"));
  auto marginal = discount_by_independence(m1, params.to_mass());
  auto fused = fuse_with_independence(m1, m2, params, std::nullopt);

  const std::map<std::string, const MassFunction*> columns{
      {"marginal", &marginal}, {"m2", &m2}, {"fused", &fused}};
  for (const auto& cell : fixture.at("table2").at("cells")) {
    std::uint64_t bits = plain_set_bits(frame, cell.at("set"));
    const auto& column = columns.at(cell.at("column").get<std::string>());
    report.cells.push_back(evaluate_cell(cell, column->mass_bits(bits), format_set(frame, bits)));
  }
  report.ok = true;
  for (const auto& cell : report.cells) report.ok = report.ok && cell.pass;
  return report;
}

ReproReport repro_table3(const json& fixture) {
  ReproReport report;
  report.table = 3;
  Frame frame(fixture.at("frame").get<std::vector<std::string>>());
  auto m1 = mass_from_fixture(frame, fixture.at("m1"));
  auto m2 = mass_from_fixture(frame, fixture.at("m2"));
  const auto& t3 = fixture.at("table3");
  const double s1_alpha = t3.at("s1_alpha").get<double>();
  const double s2_alpha = t3.at("s2_alpha").get<double>();

  std::vector<MassFunction> m1_cases, m2_cases;
  std::vector<IndependenceParams> p1_cases, p2_cases;
  for (const auto& c : t3.at("s1_cases")) {
    p1_cases.emplace_back(s1_alpha, c.at("beta").get<double>(), c.at("gamma").get<double>());
    m1_cases.push_back(discount_by_independence(m1, p1_cases.back()));
  }
  for (const auto& c : t3.at("s2_cases")) {
    p2_cases.emplace_back(s2_alpha, c.at("beta").get<double>(), c.at("gamma").get<double>());
    m2_cases.push_back(discount_by_independence(m2, p2_cases.back()));
  }

  for (const auto& cell : t3.at("cells")) {
    std::uint64_t bits = plain_set_bits(frame, cell.at("set"));
    const std::string column = cell.at("column").get<std::string>();
    double computed = 0.0;
    std::string where;
    if (column == "m1") {
      int s1 = cell.at("s1").get<int>();
      computed = m1_cases[s1].mass_bits(bits);
      where = "case " + std::to_string(s1 + 1);
    } else {
      int s1 = cell.at("s1").get<int>();
      int s2 = cell.at("s2").get<int>();
      where = "case " + std::to_string(s1 + 1) + "x" + std::to_string(s2 + 1);
      if (column == "m2") {
        computed = m2_cases[s2].mass_bits(bits);
      } else {
        computed = fuse_with_independence(m1, m2, p1_cases[s1], p2_cases[s2]).mass_bits(bits);
      }
    }
    auto evaluated = evaluate_cell(cell, computed, format_set(frame, bits));
    evaluated.column = where + " " + evaluated.column;
    report.cells.push_back(std::move(evaluated));
  }
  report.ok = true;
  for (const auto& cell : report.cells) report.ok = report.ok && cell.pass;
  return report;
}

}  // namespace

int ReproReport::matched() const {
  int n = 0;
  for (const auto& c : cells) n += !c.flagged && c.pass;
  return n;
}

int ReproReport::flagged_count() const {
  int n = 0;
  for (const auto& c : cells) n += c.flagged;
  return n;
}

int ReproReport::failed() const {
  int n = 0;
  for (const auto& c : cells) n += !c.pass;
  return n;
}

ReproReport run_repro(int table) {
  const json fixture = json::parse(golden_tables_json());
  switch (table) {
    case 1: return repro_table1(fixture);
    case 2: return repro_table2(fixture);
    case 3: return repro_table3(fixture);
    default: fail(errc::out_of_range, "table must be 1, 2 or 3");
  }
}

std::string format_repro_report(const ReproReport& report) {
  std::string out;
  for (const auto& cell : report.cells) {
    std::string line = cell.pass ? (cell.flagged ? "FLAG " : "PASS ") : "FAIL ";
    line += "t" + std::to_string(report.table) + " " + cell.column + " " + cell.focal + ": ";
    line += "printed=" + (cell.printed ? format_number(*cell.printed) : std::string("-"));
    line += " computed=" + format_number(cell.computed);
    if (cell.printed)
      line += " diff=" + format_number(std::abs(cell.computed - *cell.printed), 3);
    if (cell.flagged) {
      line += " [" + cell.status;
      if (cell.oracle) line += ", oracle=" + format_number(*cell.oracle);
      line += "]";
    }
    out += line + "\n";
    if (!cell.note.empty()) out += "     note: " + cell.note + "\n";
  }
  for (const auto& note : report.notes) out += "note: " + note + "\n";
  out += "table " + std::to_string(report.table) + ": " + std::to_string(report.cells.size()) +
         " cells, " + std::to_string(report.matched()) + " matched, " +
         std::to_string(report.flagged_count()) + " flagged, " +
         std::to_string(report.failed()) + " failed -> " + (report.ok ? "OK" : "MISMATCH") +
         "\n";
  return out;
}

}  // namespace bfi
