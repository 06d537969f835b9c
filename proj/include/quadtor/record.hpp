#pragma once

// Lines of the Cremona "allcurves" tables:
//   conductor class index [a1,a2,a3,a4,a6] rank torsion_order
// e.g. "11 a 1 [0,-1,1,-10,-20] 0 5".

#include <istream>
#include <string>
#include <vector>

#include "quadtor/curve.hpp"

namespace quadtor {

struct CurveRecord {
  long conductor = 0;
  std::string iso_class;  // lowercase letters
  int index = 0;
  LongModel model;
  int rank = 0;
  int torsion_order = 1;

  std::string label() const { return std::to_string(conductor) + iso_class + std::to_string(index); }

  friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

/// Throws ParseError carrying line_number on malformed input (including empty lines).
CurveRecord parse_curve_line(const std::string& line, std::size_t line_number = 0);

/// Single-space rendering in the same format.
std::string to_line(const CurveRecord& r);

/// Reads a whole file; blank lines and lines starting with '#' are skipped.
std::vector<CurveRecord> read_curve_records(std::istream& in);

/// Label order used by reports: conductor, then class by (length, letters), then index.
bool label_less(const CurveRecord& a, const CurveRecord& b);

}  // namespace quadtor
