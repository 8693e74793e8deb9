#include <cmath>
#include <sstream>

#include "ihara_towers/graph.hpp"
#include "ihara_towers/mahler.hpp"
#include "towers_cli/towers_cli.hpp"

namespace towers_cli {

using ihara_towers::BigInt;
using ihara_towers::to_string;

namespace {

Json coefficient_list(const ihara_towers::IntPoly& f) {
  Json out = Json::array();
  for (const BigInt& c : f.coeffs()) out.push_back(to_string(c));
  return out;
}

Json poly_json(const ihara_towers::IntPoly& f) {
  return {{"coefficients", coefficient_list(f)}, {"text", f.to_string()}};
}

}  // namespace

Json analyze_summary(const GraphFile& g, const std::vector<std::uint64_t>& primes) {
  const ihara_towers::VoltagedGraph vg = to_voltaged(g);
  const ihara_towers::TowerAnalysis ta = ihara_towers::analyze(vg);
  const ihara_towers::ArchMeasure arch = ihara_towers::mahler_archimedean(ta.j_poly);

  Json padic = Json::array();
  for (std::uint64_t p : primes) {
    const auto measure = ihara_towers::mahler_padic(ta.j_poly, BigInt(std::to_string(p)));
    padic.push_back({{"prime", std::to_string(p)}, {"exponent", measure.exponent}});
  }
  return {
      {"vertices", vg.base().vertex_count()},
      {"edge_pairs", vg.base().edge_pair_count()},
      {"chi", ta.chi},
      {"kappa", to_string(ta.kappa_base)},
      {"monodromy_index", ihara_towers::monodromy_index(vg)},
      {"ihara", {{"low", ta.ihara.low()}, {"coefficients", coefficient_list(ta.ihara.body())},
                 {"text", ta.ihara.to_string()}}},
      {"b", ta.b},
      {"e", ta.e},
      {"I", poly_json(ta.i_poly)},
      {"J", poly_json(ta.j_poly)},
      {"delta1", to_string(ta.delta1)},
      {"mahler_padic", padic},
      {"mahler_inf", {{"M_inf", arch.value}, {"m_inf", arch.log_value}}},
      {"unit_circle_roots", ihara_towers::count_unit_circle_roots(ta.j_poly)},
  };
}

std::vector<TableRow> table_rows(const ihara_towers::TowerAnalysis& ta, std::uint64_t n_max, unsigned jobs) {
  const std::vector<BigInt> deltas = ihara_towers::pierce_lehmer_range(ta.j_poly, n_max);
  std::vector<TableRow> rows(n_max);
  parallel_for(n_max, jobs, [&](std::size_t i) {
    const std::uint64_t n = i + 1;
    rows[i] = {n, ihara_towers::kappa_via_formula(ta, n, deltas[i]), ihara_towers::resultant_row(ta, n), deltas[i]};
  });
  return rows;
}

Json table_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const TableRow& r : rows)
    out.push_back({{"n", r.n}, {"kappa", to_string(r.kappa)}, {"resultant", to_string(r.resultant)},
                   {"delta", to_string(r.delta)}});
  return {{"rows", out}};
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,kappa,resultant,delta\n";
  for (const TableRow& r : rows)
    out << r.n << ',' << to_string(r.kappa) << ',' << to_string(r.resultant) << ',' << to_string(r.delta) << '\n';
  return out.str();
}

Json verification_json(const ihara_towers::TowerVerification& v) {
  Json layers = Json::array();
  for (const auto& l : v.layers)
    layers.push_back({{"n", l.n}, {"formula", to_string(l.formula)}, {"oracle", to_string(l.oracle)},
                      {"oracle_kind", l.oracle_kind}, {"match", l.match}});
  Json out = {{"ok", v.ok()}, {"layers", layers}};
  out["first_mismatch"] = v.first_mismatch ? Json(*v.first_mismatch) : Json(nullptr);
  return out;
}

std::vector<ihara_towers::PadicReport> padic_reports(const ihara_towers::TowerAnalysis& ta,
                                                     const std::vector<std::uint64_t>& primes, std::uint64_t n_max,
                                                     const ihara_towers::PadicOptions& options, unsigned jobs) {
  std::vector<ihara_towers::PadicReport> reports(primes.size());
  parallel_for(primes.size(), jobs,
               [&](std::size_t i) { reports[i] = ihara_towers::padic_report(ta, primes[i], n_max, options); });
  return reports;
}

Json padic_json(const std::vector<ihara_towers::PadicReport>& reports) {
  Json out = Json::array();
  for (const auto& rep : reports) {
    Json factors = Json::array();
    for (const auto& f : rep.structure.factors) {
      Json entry = {{"factor", f.factor.to_string()}, {"degree", f.degree}, {"multiplicity", f.multiplicity}};
      entry["order"] = f.order ? Json(to_string(*f.order)) : Json(nullptr);
      if (f.lift)
        entry["lift"] = {{"ord_difference", f.lift->ord_difference}, {"s", f.lift->s}, {"ord_at_s", f.lift->ord_at_s}};
      factors.push_back(std::move(entry));
    }
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
      Json row = {{"n", r.n},       {"ord", r.ord}, {"mu_term", r.mu_term},
                  {"lambda", r.lambda}, {"nu", to_string(r.nu)}, {"c", rep.c},
                  {"source", ihara_towers::to_string(r.source)}};
      row["nu_oracle"] = to_string(r.nu_oracle);
      row["nu_structural"] = r.nu_structural ? Json(to_string(*r.nu_structural)) : Json(nullptr);
      rows.push_back(std::move(row));
    }
    out.push_back({{"prime", std::to_string(rep.prime)},
                   {"mu", rep.mu},
                   {"c", rep.c},
                   {"ramified", rep.structure.ramified},
                   {"saturation", {{"value", rep.saturation.value}, {"is_bound", rep.saturation.is_bound}}},
                   {"unit_factors", factors},
                   {"rows", rows}});
  }
  return {{"reports", out}};
}

std::string padic_csv(const std::vector<ihara_towers::PadicReport>& reports) {
  std::ostringstream out;
  out << "prime,n,ord,mu_term,lambda,nu,c,source\n";
  for (const auto& rep : reports)
    for (const auto& r : rep.rows)
      out << rep.prime << ',' << r.n << ',' << r.ord << ',' << r.mu_term << ',' << r.lambda << ',' << to_string(r.nu)
          << ',' << rep.c << ',' << ihara_towers::to_string(r.source) << '\n';
  return out.str();
}

Json asymptotics_json(const ihara_towers::TowerAnalysis& ta, std::uint64_t n_probe) {
  const ihara_towers::ArchimedeanAsymptotic law = ihara_towers::archimedean_asymptotic(ta);
  const double predicted = law.predicted_log_kappa(n_probe);
  const double actual = ihara_towers::log_abs(ihara_towers::kappa_via_formula(ta, n_probe));
  return {{"m_inf", law.rate},
          {"poly_order", law.poly_order},
          {"constant", law.constant},
          {"applicable", law.applicable},
          {"n_probe", n_probe},
          {"predicted_log_kappa", predicted},
          {"actual_log_kappa", actual},
          {"gap", std::abs(actual - predicted)}};
}

}  // namespace towers_cli
