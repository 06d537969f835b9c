#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadtor/classify.hpp"
#include "quadtor/record.hpp"

namespace quadtor {

enum class ScanMode { Growth, TorsionOnly };

struct ScanOptions {
  long max_conductor = 0;  // records above this are skipped
  ScanMode mode = ScanMode::Growth;
  LevelPolicy policy = LevelPolicy::Restricted;
  int jobs = 1;
  /// Also verify |E(K)[n]| = |E(Q)[n]| |E_D(Q)[n]| for n in {3,5,7,9,15} at every growth field.
  bool odd_part_checks = false;
};

struct CurveReport {
  std::string label;
  long conductor = 0;
  std::string iso_class;
  int index = 0;
  std::optional<TorsionStructure> torsion_q;  // absent if the computation failed
  std::vector<GrowthEntry> growth;
  std::vector<std::string> anomalies;  // excluded pairs carry their rule tag in the text

  friend bool operator==(const CurveReport&, const CurveReport&) = default;
};

struct AggregateCell {
  TorsionStructure g;
  TorsionStructure h;
  char d_sign;  // '+' or '-'
  long count;

  friend bool operator==(const AggregateCell&, const AggregateCell&) = default;
};

struct ScanReport {
  std::vector<CurveReport> curves;      // label order
  std::vector<AggregateCell> aggregate;  // ordered by (g, h, sign)

  std::size_t anomaly_count() const;

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Processes one record: torsion over Q, the cross-check against the file, and in growth mode
/// every growth field with closure, bound, roots-of-unity and full-3-torsion checks.
CurveReport scan_record(const CurveRecord& record, const ScanOptions& options);

/// Runs scan_record over the records (possibly on several threads) and merges deterministically.
ScanReport scan(const std::vector<CurveRecord>& records, const ScanOptions& options);

/// Aggregate counts recomputed from the per-curve entries.
std::vector<AggregateCell> aggregate_of(const std::vector<CurveReport>& curves);

}  // namespace quadtor
