#include "quadtor/scan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>
#include <tuple>

namespace quadtor {

namespace {

std::string at(const GrowthEntry& e) { return e.structure.name() + " at D = " + to_string(e.d); }

void check_growth(const TorsionStructure& G, const std::vector<GrowthEntry>& growth, CurveReport& rep) {
  for (const GrowthEntry& e : growth) {
    const TorsionStructure& H = e.structure;
    if (!in_phi_q2(H)) {
      rep.anomalies.push_back("closure: " + at(e) + " is not a quadratic torsion group of a rational curve");
      continue;
    }
    if (const Admissibility a = allowed_pair(G, H); !a.allowed)
      rep.anomalies.push_back("closure: " + G.name() + " -> " + at(e) + " excluded (" + describe(a.rule) + ")");
    if (!weil_constraint(H, e.d)) rep.anomalies.push_back("weil: " + at(e));
    // full 3-torsion over Q(sqrt -3) needs rational 3-torsion
    if (H.n1() % 3 == 0 && e.d.value() == -3 && G.order() % 3 != 0)
      rep.anomalies.push_back("full 3-torsion: " + at(e) + " with " + G.name() + " over Q");
  }
  std::set<SquarefreeD> fields;
  for (const GrowthEntry& e : growth) fields.insert(e.d);
  if (static_cast<long>(fields.size()) > growth_bound(G))
    rep.anomalies.push_back("bound: " + std::to_string(fields.size()) + " growth fields exceed k = " +
                            std::to_string(growth_bound(G)) + " for " + G.name());
}

void check_odd_parts(DivisionPolynomials& dp, const std::vector<GrowthEntry>& growth, CurveReport& rep) {
  for (const GrowthEntry& e : growth) {
    DivisionPolynomials tdp(quadratic_twist(dp.curve(), e.d));
    for (int n : {3, 5, 7, 9, 15}) {
      const OddPartCounts c = odd_part_check(dp, tdp, e.d, n);
      if (!c)
        rep.anomalies.push_back("odd part: n = " + std::to_string(n) + " at D = " + to_string(e.d) + ": " +
                                std::to_string(c.over_k) + " != " + std::to_string(c.over_q) + " * " +
                                std::to_string(c.over_twist));
    }
  }
}

}  // namespace

std::size_t ScanReport::anomaly_count() const {
  std::size_t n = 0;
  for (const auto& c : curves) n += c.anomalies.size();
  return n;
}

CurveReport scan_record(const CurveRecord& record, const ScanOptions& options) {
  CurveReport rep;
  rep.label = record.label();
  rep.conductor = record.conductor;
  rep.iso_class = record.iso_class;
  rep.index = record.index;
  try {
    const ShortModel sm = short_model_from_long(record.model);
    DivisionPolynomials dp(sm.curve);
    const TorsionStructure G = torsion_Q(dp).structure;
    rep.torsion_q = G;
    if (G.order() != record.torsion_order)
      rep.anomalies.push_back("torsion mismatch: computed " + G.name() + " but the file lists order " +
                              std::to_string(record.torsion_order));
    if (options.mode == ScanMode::Growth) {
      rep.growth = growth_fields(dp, G, options.policy).entries;
      check_growth(G, rep.growth, rep);
      if (options.odd_part_checks) check_odd_parts(dp, rep.growth, rep);
    }
  } catch (const InconsistencyError& e) {
    rep.anomalies.push_back(std::string("inconsistency: ") + e.what());
  } catch (const DomainError& e) {
    rep.anomalies.push_back(std::string("error: ") + e.what());
  }
  return rep;
}

std::vector<AggregateCell> aggregate_of(const std::vector<CurveReport>& curves) {
  std::map<std::tuple<TorsionStructure, TorsionStructure, char>, long> cells;
  for (const auto& c : curves) {
    if (!c.torsion_q) continue;
    for (const auto& e : c.growth) ++cells[{*c.torsion_q, e.structure, e.d.is_real() ? '+' : '-'}];
  }
  std::vector<AggregateCell> out;
  for (const auto& [key, n] : cells) out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), n});
  return out;
}

ScanReport scan(const std::vector<CurveRecord>& records, const ScanOptions& options) {
  std::vector<const CurveRecord*> work;
  for (const auto& r : records)
    if (r.conductor <= options.max_conductor) work.push_back(&r);
  std::sort(work.begin(), work.end(), [](const CurveRecord* a, const CurveRecord* b) {
    if (label_less(*a, *b) || label_less(*b, *a)) return label_less(*a, *b);
    return to_line(*a) < to_line(*b);
  });

  std::vector<CurveReport> results(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < work.size();) results[i] = scan_record(*work[i], options);
  };
  const int jobs = std::clamp(options.jobs, 1, 256);
  if (jobs == 1 || work.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  ScanReport report;
  report.curves = std::move(results);
  report.aggregate = aggregate_of(report.curves);
  return report;
}

}  // namespace quadtor
