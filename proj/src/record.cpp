#include "quadtor/record.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "quadtor/errors.hpp"

namespace quadtor {

namespace {

long parse_count(const std::string& s, const char* what, std::size_t line_number, long max_value) {
  if (s.empty() || s.size() > 12 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError(line_number, std::string("bad ") + what + " '" + s + "'");
  const long v = std::stol(s);
  if (v > max_value) throw ParseError(line_number, std::string(what) + " out of range: " + s);
  return v;
}

bool valid_torsion_order(long t) { return (t >= 1 && t <= 10) || t == 12 || t == 16; }

}  // namespace

CurveRecord parse_curve_line(const std::string& line, std::size_t line_number) {
  std::istringstream in(line);
  std::string conductor, cls, index;
  if (!(in >> conductor)) throw ParseError(line_number, "empty line");
  if (!(in >> cls >> index)) throw ParseError(line_number, "missing class or index");
  // the bracket list may contain spaces; read up to the closing bracket
  std::string coeffs, tok;
  while (coeffs.find(']') == std::string::npos && in >> tok) coeffs += tok;
  std::string rank, torsion, extra;
  if (!(in >> rank >> torsion)) throw ParseError(line_number, "missing rank or torsion order");
  if (in >> extra) throw ParseError(line_number, "trailing field '" + extra + "'");

  CurveRecord r;
  r.conductor = parse_count(conductor, "conductor", line_number, 1L << 40);
  if (r.conductor < 1) throw ParseError(line_number, "conductor must be positive");
  if (!std::all_of(cls.begin(), cls.end(), [](unsigned char c) { return std::islower(c); }))
    throw ParseError(line_number, "isogeny class must be lowercase letters: '" + cls + "'");
  r.iso_class = cls;
  r.index = static_cast<int>(parse_count(index, "index", line_number, 1 << 20));
  if (r.index < 1) throw ParseError(line_number, "index must be positive");
  try {
    r.model = parse_long_model(coeffs);
  } catch (const ParseError& e) {
    throw ParseError(line_number, e.what());
  }
  r.rank = static_cast<int>(parse_count(rank, "rank", line_number, 1 << 20));
  r.torsion_order = static_cast<int>(parse_count(torsion, "torsion order", line_number, 1 << 20));
  if (!valid_torsion_order(r.torsion_order))
    throw ParseError(line_number, "torsion order " + torsion + " is not the order of a rational torsion group");
  r.model.label = r.label();
  return r;
}

std::string to_line(const CurveRecord& r) {
  return std::to_string(r.conductor) + " " + r.iso_class + " " + std::to_string(r.index) + " " +
         r.model.coefficient_list() + " " + std::to_string(r.rank) + " " + std::to_string(r.torsion_order);
}

std::vector<CurveRecord> read_curve_records(std::istream& in) {
  std::vector<CurveRecord> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_curve_line(line, n));
  }
  return out;
}

bool label_less(const CurveRecord& a, const CurveRecord& b) {
  if (a.conductor != b.conductor) return a.conductor < b.conductor;
  if (a.iso_class.size() != b.iso_class.size()) return a.iso_class.size() < b.iso_class.size();
  if (a.iso_class != b.iso_class) return a.iso_class < b.iso_class;
  return a.index < b.index;
}

}  // namespace quadtor
