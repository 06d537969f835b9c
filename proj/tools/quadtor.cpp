// quadtor: torsion of rational elliptic curves over quadratic fields.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quadtor/report.hpp"

using namespace quadtor;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAnomalies = 1;
constexpr int kExitUsage = 2;

LevelPolicy policy_of(bool exhaustive) { return exhaustive ? LevelPolicy::Exhaustive : LevelPolicy::Restricted; }

template <class Field>
void print_torsion(const ShortModel& sm, const TorsionData<Field>& t) {
  std::cout << "torsion: " << t.structure.name() << " over " << t.field.name() << "\n";
  for (const auto& P : t.generators) {
    const auto order = point_order(sm.curve, P).value_or(0);
    const auto [x, y] = sm.coord_map.to_long(P.x(), P.y());
    std::cout << "  generator of order " << order << ": (" << to_string(x) << ", " << to_string(y) << ")\n";
  }
}

void print_growth(const GrowthRecord& rec) {
  std::cout << "E(Q)_tors = " << rec.baseline.name() << "\n";
  if (rec.entries.empty()) std::cout << "stable: no quadratic field enlarges the torsion\n";
  for (const auto& e : rec.entries) std::cout << "  D = " << to_string(e.d) << ": " << e.structure.name() << "\n";
}

void print_tables() {
  auto names = [](const std::vector<GroupId>& v) {
    std::string s;
    for (const auto& g : v) s += (s.empty() ? "" : " ") + g.name();
    return s;
  };
  std::cout << "torsion over Q (" << phi1().size() << "): " << names(phi1()) << "\n";
  std::cout << "torsion over quadratic fields (" << phi_q2().size() << "): " << names(phi_q2()) << "\n\n";
  std::cout << "G        k_G  possible E(K)_tors\n";
  for (const auto& g : phi1()) {
    std::string n = g.name();
    n.resize(8, ' ');
    std::string k = std::to_string(growth_bound(g));
    k.resize(4, ' ');
    std::cout << n << " " << k << " " << names(phi_q2_of(g)) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion of rational elliptic curves over quadratic fields"};
  app.require_subcommand(1);

  std::string curve_text;
  long field_d = 0;
  bool exhaustive = false;

  auto* torsion = app.add_subcommand("torsion", "torsion subgroup over Q or Q(sqrt D)");
  torsion->add_option("--curve", curve_text, "a-invariants \"[a1,a2,a3,a4,a6]\"")->required();
  torsion->add_option("--field", field_d, "squarefree D for Q(sqrt D)");
  torsion->add_flag("--exhaustive", exhaustive, "search every prime-power level");

  auto* growth = app.add_subcommand("growth", "quadratic fields where the torsion grows");
  growth->add_option("--curve", curve_text, "a-invariants \"[a1,a2,a3,a4,a6]\"")->required();
  growth->add_flag("--exhaustive", exhaustive, "search every prime-power level");

  auto* twist = app.add_subcommand("twist", "quadratic twist and its rational torsion");
  twist->add_option("--curve", curve_text, "a-invariants \"[a1,a2,a3,a4,a6]\"")->required();
  twist->add_option("--d", field_d, "squarefree D")->required();

  std::string g_text, h_text;
  auto* classify = app.add_subcommand("classify", "is H a possible E(K)_tors for E(Q)_tors = G?");
  classify->set_help_flag("--help", "print this help message and exit");
  classify->add_option("--g", g_text, "n1,n2 or C2xC4")->required();
  classify->add_option("--h", h_text, "n1,n2 or C2xC4")->required();

  std::string file, out_path = "-", format = "json", mode = "growth";
  long max_conductor = 0;
  int jobs = 1;
  bool odd_parts = false;
  auto* scan_cmd = app.add_subcommand("scan", "scan a Cremona allcurves file");
  scan_cmd->add_option("--file", file, "allcurves file")->required();
  scan_cmd->add_option("--max-conductor", max_conductor, "largest conductor scanned")->required();
  scan_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
  scan_cmd->add_option("--out", out_path, "output path, - for stdout");
  scan_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  scan_cmd->add_option("--mode", mode, "growth or torsion")->check(CLI::IsMember({"growth", "torsion"}));
  scan_cmd->add_flag("--exhaustive", exhaustive, "search every prime-power level");
  scan_cmd->add_flag("--odd-parts", odd_parts, "also check odd-part counts at each growth field");

  app.add_subcommand("tables", "print the classification constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*torsion) {
      const ShortModel sm = short_model_from_long(parse_long_model(curve_text));
      std::cout << "short model: " << sm.curve.to_string() << "\n";
      DivisionPolynomials dp(sm.curve);
      const auto tq = torsion_Q(dp);
      if (field_d == 0) {
        print_torsion(sm, tq);
      } else {
        print_torsion(sm, torsion_K(dp, SquarefreeD(field_d), tq.structure, policy_of(exhaustive)));
      }
    } else if (*growth) {
      const ShortModel sm = short_model_from_long(parse_long_model(curve_text));
      print_growth(growth_fields(sm.curve, policy_of(exhaustive)));
    } else if (*twist) {
      const ShortModel sm = short_model_from_long(parse_long_model(curve_text));
      const SquarefreeD d(field_d);
      const CurveQ Ed = quadratic_twist(sm.curve, d);
      std::cout << "twist: " << Ed.to_string() << "\n";
      const auto t = torsion_Q(Ed);
      std::cout << "E_D(Q)_tors = " << t.structure.name() << "\n";
      for (const auto& P : t.generators) std::cout << "  generator: " << to_string(P) << "\n";
    } else if (*classify) {
      const GroupId g = parse_structure(g_text);
      const GroupId h = parse_structure(h_text);
      const Admissibility a = allowed_pair(g, h);
      std::cout << g.name() << " -> " << h.name() << ": " << (a.allowed ? "allowed" : "excluded");
      if (!a.allowed) std::cout << " (" << describe(a.rule) << ")";
      std::cout << "\n";
    } else if (*scan_cmd) {
      std::ifstream in(file);
      if (!in) {
        std::cerr << "cannot open " << file << "\n";
        return kExitUsage;
      }
      ScanOptions opt;
      opt.max_conductor = max_conductor;
      opt.mode = mode == "growth" ? ScanMode::Growth : ScanMode::TorsionOnly;
      opt.policy = policy_of(exhaustive);
      opt.jobs = jobs;
      opt.odd_part_checks = odd_parts;
      const ScanReport report = scan(read_curve_records(in), opt);
      const std::string text = emit_report(report, format == "json" ? ReportFormat::Json : ReportFormat::Csv);
      if (out_path == "-") {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        out << text;
        if (!out) {
          std::cerr << "cannot write " << out_path << "\n";
          return kExitUsage;
        }
      }
      std::cerr << report.curves.size() << " curves, " << report.anomaly_count() << " anomalies\n";
      return report.anomaly_count() == 0 ? kExitOk : kExitAnomalies;
    } else {
      print_tables();
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitAnomalies;
  }
  return kExitOk;
}
