#pragma once

// Curve fixtures looked up by Cremona label in the shipped data files.

#include <fstream>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "quadtor/record.hpp"

namespace quadtor::fixtures {

inline std::string data_path(const std::string& name) { return std::string(QUADTOR_DATA_DIR) + "/" + name; }

inline std::vector<CurveRecord> load_records(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing fixture file " + name);
  return read_curve_records(in);
}

inline const std::vector<CurveRecord>& small_conductor_records() {
  static const std::vector<CurveRecord> r = load_records("allcurves.00001-00500");
  return r;
}

inline const std::vector<CurveRecord>& exemplar_records() {
  static const std::vector<CurveRecord> r = load_records("table2_exemplars.txt");
  return r;
}

inline const CurveRecord& record(const std::string& label) {
  static const std::map<std::string, CurveRecord> by_label = [] {
    std::map<std::string, CurveRecord> m;
    for (const auto* v : {&small_conductor_records(), &exemplar_records()})
      for (const auto& r : *v) m.emplace(r.label(), r);
    return m;
  }();
  auto it = by_label.find(label);
  if (it == by_label.end()) throw std::runtime_error("no fixture curve " + label);
  return it->second;
}

inline ShortModel short_model(const std::string& label) { return short_model_from_long(record(label).model); }

inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
  return make_rational(Integer(num(rng)), Integer(den(rng)));
}

/// Uniform integer in [-10^digits, 10^digits].
inline Integer random_big(std::mt19937_64& rng, int digits) {
  static const char kDigits[] = "0123456789";
  std::uniform_int_distribution<int> d(0, 9), sign(0, 1);
  std::string s;
  for (int i = 0; i < digits; ++i) s += kDigits[d(rng)];
  Integer v(s, 10);
  return sign(rng) ? Integer(-v) : v;
}

}  // namespace quadtor::fixtures
