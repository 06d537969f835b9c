#include "quadtor/report.hpp"

#include <cctype>
#include <limits>

#include "json.hpp"
#include "quadtor/errors.hpp"

namespace quadtor {

namespace {

using Json = nlohmann::ordered_json;

Json pair_json(const TorsionStructure& t) { return Json::array({t.n1(), t.n2()}); }

Json d_json(const SquarefreeD& d) {
  if (d.value().fits_slong_p()) return d.value().get_si();
  return to_string(d.value());  // beyond 64 bits: decimal string
}

TorsionStructure pair_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw ParseError(0, "expected [n1,n2]");
  return {j[0].get<int>(), j[1].get<int>()};
}

SquarefreeD d_from(const Json& j) {
  if (j.is_number_integer()) return SquarefreeD(Integer(std::to_string(j.get<long long>()), 10));
  if (j.is_string()) return SquarefreeD(Integer(j.get<std::string>(), 10));
  throw ParseError(0, "expected an integer field discriminant");
}

/// "450b4" -> (450, "b", 4)
void split_label(const std::string& label, CurveReport& c) {
  std::size_t i = 0;
  while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
  std::size_t j = i;
  while (j < label.size() && std::islower(static_cast<unsigned char>(label[j]))) ++j;
  if (i == 0 || j == i || j == label.size() || j + 9 < label.size()) throw ParseError(0, "bad label '" + label + "'");
  for (std::size_t k = j; k < label.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(label[k]))) throw ParseError(0, "bad label '" + label + "'");
  c.iso_class = label.substr(i, j - i);
  c.index = std::stoi(label.substr(j));
}

std::string emit_json(const ScanReport& report) {
  Json curves = Json::array();
  for (const auto& c : report.curves) {
    Json growth = Json::array();
    for (const auto& e : c.growth) growth.push_back(Json{{"d", d_json(e.d)}, {"torsion", pair_json(e.structure)}});
    curves.push_back(Json{{"label", c.label},
                          {"conductor", c.conductor},
                          {"torsion_q", c.torsion_q ? pair_json(*c.torsion_q) : Json(nullptr)},
                          {"growth", growth},
                          {"anomalies", c.anomalies}});
  }
  Json aggregate = Json::array();
  for (const auto& a : report.aggregate)
    aggregate.push_back(Json{{"g", pair_json(a.g)},
                             {"h", pair_json(a.h)},
                             {"d_sign", std::string(1, a.d_sign)},
                             {"count", a.count}});
  return Json{{"curves", curves}, {"aggregate", aggregate}}.dump(2) + "\n";
}

std::string emit_csv(const ScanReport& report) {
  std::string out = "label,conductor,g_n1,g_n2,d,h_n1,h_n2\n";
  for (const auto& c : report.curves) {
    if (!c.torsion_q) continue;
    for (const auto& e : c.growth) {
      out += c.label + "," + std::to_string(c.conductor) + "," + std::to_string(c.torsion_q->n1()) + "," +
             std::to_string(c.torsion_q->n2()) + "," + to_string(e.d) + "," + std::to_string(e.structure.n1()) +
             "," + std::to_string(e.structure.n2()) + "\n";
    }
  }
  return out;
}

}  // namespace

std::string emit_report(const ScanReport& report, ReportFormat format) {
  return format == ReportFormat::Json ? emit_json(report) : emit_csv(report);
}

ScanReport parse_report_json(const std::string& text) {
  ScanReport report;
  try {
    const Json doc = Json::parse(text);
    for (const Json& jc : doc.at("curves")) {
      CurveReport c;
      c.label = jc.at("label").get<std::string>();
      c.conductor = jc.at("conductor").get<long>();
      split_label(c.label, c);
      if (!jc.at("torsion_q").is_null()) c.torsion_q = pair_from(jc.at("torsion_q"));
      for (const Json& je : jc.at("growth")) c.growth.push_back({d_from(je.at("d")), pair_from(je.at("torsion"))});
      c.anomalies = jc.at("anomalies").get<std::vector<std::string>>();
      report.curves.push_back(std::move(c));
    }
    for (const Json& ja : doc.at("aggregate")) {
      const std::string sign = ja.at("d_sign").get<std::string>();
      if (sign != "+" && sign != "-") throw ParseError(0, "d_sign must be + or -");
      report.aggregate.push_back({pair_from(ja.at("g")), pair_from(ja.at("h")), sign[0], ja.at("count").get<long>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("report JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(0, std::string("report JSON: ") + e.what());
  }
  return report;
}

}  // namespace quadtor
