#pragma once

#include <string>

#include "quadtor/scan.hpp"

namespace quadtor {

enum class ReportFormat { Json, Csv };

/// JSON:
///   {"curves": [{"label", "conductor", "torsion_q": [n1,n2], "growth": [{"d", "torsion": [n1,n2]}],
///                "anomalies": [text]}],
///    "aggregate": [{"g": [n1,n2], "h": [n1,n2], "d_sign": "+"|"-", "count"}]}
/// CSV: header label,conductor,g_n1,g_n2,d,h_n1,h_n2 and one row per growth entry.
std::string emit_report(const ScanReport& report, ReportFormat format);

/// Inverse of the JSON emitter. Throws ParseError on malformed documents.
ScanReport parse_report_json(const std::string& text);

}  // namespace quadtor
