#include "quadtor/torsion.hpp"

#include <algorithm>
#include <set>

#include "quadtor/tables.hpp"

namespace quadtor {

namespace {

struct PrimeCap {
  int p;
  int cap;  // largest power of p searched
};

constexpr PrimeCap kQuadraticCaps[] = {{2, 16}, {3, 9}, {5, 5}, {7, 7}};
constexpr PrimeCap kRationalCaps[] = {{2, 8}, {3, 9}, {5, 5}, {7, 7}};

int p_part(int n, int p) {
  int q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

template <class Field>
bool less_point(const Point<Field>& a, const Point<Field>& b) {
  return compare_points(a, b) < 0;
}

template <class Field>
TorsionData<Field> assemble(DivisionPolynomials& dp, const Field& F, const std::vector<PrimeCap>& caps) {
  const CurveQ& E = dp.curve();
  std::vector<Point<Field>> group{Point<Field>::infinity(F)};
  for (const auto [p, cap] : caps) {
    std::vector<Point<Field>> part{Point<Field>::infinity(F)};
    for (int q = p; q <= cap; q *= p) {
      auto pts = points_of_order(dp, q, F);
      if (pts.empty()) break;
      part.insert(part.end(), pts.begin(), pts.end());
    }
    if (part.size() == 1) continue;
    std::vector<Point<Field>> next;
    next.reserve(group.size() * part.size());
    for (const auto& g : group)
      for (const auto& s : part) next.push_back(add_points(E, g, s));
    group = std::move(next);
  }
  std::sort(group.begin(), group.end(), less_point<Field>);

  const int N = static_cast<int>(group.size());
  std::vector<int> order(group.size());
  int n2 = 1;
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto o = point_order(E, group[i], N);
    if (!o) throw InconsistencyError("torsion element without finite order on " + E.to_string());
    order[i] = *o;
    n2 = std::max(n2, *o);
  }
  if (N % n2 != 0 || n2 % (N / n2) != 0)
    throw InconsistencyError("torsion of order " + std::to_string(N) + " and exponent " + std::to_string(n2) +
                             " is not of the form C_n1 x C_n2");
  const int n1 = N / n2;
  TorsionData<Field> out{TorsionStructure(n1, n2), {}, group, F};
  if (n2 == 1) return out;

  const auto first_of_order = std::find(order.begin(), order.end(), n2) - order.begin();
  const Point<Field> P = group[first_of_order];
  out.generators.push_back(P);
  if (n1 == 1) return out;

  for (std::size_t j = 0; j < group.size(); ++j) {
    if (order[j] != n1) continue;
    std::vector<Point<Field>> span;
    Point<Field> jQ = Point<Field>::infinity(F);
    for (int b = 0; b < n1; ++b) {
      Point<Field> R = jQ;
      for (int a = 0; a < n2; ++a) {
        span.push_back(R);
        R = add_points(E, R, P);
      }
      jQ = add_points(E, jQ, group[j]);
    }
    std::sort(span.begin(), span.end(), less_point<Field>);
    span.erase(std::unique(span.begin(), span.end()), span.end());
    if (span == group) {
      out.generators.push_back(group[j]);
      return out;
    }
  }
  throw InconsistencyError("no second generator for " + out.structure.name() + " on " + E.to_string());
}

void add_fields_from_level(DivisionPolynomials& dp, int q, std::set<SquarefreeD>& out) {
  const CurveQ& E = dp.curve();
  for (const UniPoly& g : dp.factors(q)) {
    if (g.degree() == 1) {
      const Rational v = E.rhs(Rational(-g[0]));
      if (sgn(v) == 0) continue;
      if (auto d = SquarefreeD::of_radicand(v)) out.insert(*d);
    } else if (g.degree() == 2) {
      if (auto d = SquarefreeD::of_radicand(Rational(g[1] * g[1] - 4 * g[0]))) out.insert(*d);
    }
  }
}

}  // namespace

TorsionData<RationalField> torsion_Q(DivisionPolynomials& dp) {
  auto data = assemble(dp, RationalField{}, {std::begin(kRationalCaps), std::end(kRationalCaps)});
  if (!in_phi1(data.structure))
    throw InconsistencyError(data.structure.name() + " is not a torsion group over Q (" + dp.curve().to_string() + ")");
  return data;
}

TorsionData<RationalField> torsion_Q(const CurveQ& E) {
  DivisionPolynomials dp(E);
  return torsion_Q(dp);
}

TorsionData<QuadraticField> torsion_K(DivisionPolynomials& dp, const SquarefreeD& D, const TorsionStructure& G,
                                      LevelPolicy policy) {
  std::vector<PrimeCap> caps;
  for (const auto pc : kQuadraticCaps) {
    if (policy == LevelPolicy::Exhaustive) {
      caps.push_back(pc);
      continue;
    }
    int cap = 1;
    for (const GroupId& h : phi_q2_of(G)) cap = std::max(cap, p_part(h.n2(), pc.p));
    if (cap > 1) caps.push_back({pc.p, cap});
  }
  auto data = assemble(dp, QuadraticField(D), caps);
  const auto& H = data.structure;
  const std::string where = " over Q(sqrt(" + to_string(D) + ")) on " + dp.curve().to_string();
  if (!in_phi_q2(H)) throw InconsistencyError(H.name() + " cannot occur" + where);
  if (!H.contains(G)) throw InconsistencyError(H.name() + " does not contain " + G.name() + where);
  if (!weil_constraint(H, D)) throw InconsistencyError(H.name() + " violates the roots-of-unity constraint" + where);
  return data;
}

TorsionData<QuadraticField> torsion_K(const CurveQ& E, const SquarefreeD& D, LevelPolicy policy) {
  DivisionPolynomials dp(E);
  const TorsionStructure G = torsion_Q(dp).structure;
  return torsion_K(dp, D, G, policy);
}

std::vector<int> candidate_levels(const TorsionStructure& G, LevelPolicy policy) {
  std::vector<int> levels;
  for (const auto [p, cap] : kQuadraticCaps) {
    for (int q = p; q <= cap; q *= p) {
      if (q != p && G.n2() % (q / p) != 0) break;
      bool room = policy == LevelPolicy::Exhaustive;
      if (!room)
        for (const GroupId& h : phi_q2_of(G))  // q is the first level where h has more points than G
          room = room || (h.count_killed_by(q) > G.count_killed_by(q) &&
                          h.count_killed_by(q / p) == G.count_killed_by(q / p));
      if (room) levels.push_back(q);
    }
  }
  std::sort(levels.begin(), levels.end());
  return levels;
}

std::vector<SquarefreeD> candidate_fields(DivisionPolynomials& dp, const TorsionStructure& G, LevelPolicy policy) {
  std::set<SquarefreeD> fields;
  for (int q : candidate_levels(G, policy)) add_fields_from_level(dp, q, fields);
  return {fields.begin(), fields.end()};
}

std::pair<PointQ, PointQ> psi_forward(const CurveQ& E, const SquarefreeD& D, const PointK& P) {
  if (!(P.field().d() == D)) throw DomainError("psi_forward: point over " + P.field().name());
  const PointK sP = conjugate(P);
  auto trace = to_rational(add_points(E, P, sP));
  if (!trace) throw InconsistencyError("P + sigma P is not rational");
  return {*trace, to_twist_rational(D, subtract_points(E, P, sP))};
}

PointK psi_backward(const CurveQ& E, const SquarefreeD& D, const PointQ& P, const PointQ& R) {
  const QuadraticField K(D);
  return add_points(E, promote(P, K), from_twist(D, R));
}

namespace {

template <class Field>
long killed_by(DivisionPolynomials& dp, int n, const Field& F) {
  long count = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) count += static_cast<long>(points_of_order(dp, d, F).size());
  return count;
}

}  // namespace

OddPartCounts odd_part_check(DivisionPolynomials& dp, DivisionPolynomials& twist_dp, const SquarefreeD& D, int n) {
  if (n != 3 && n != 5 && n != 7 && n != 9 && n != 15)
    throw DomainError("odd_part_check: n must be one of 3, 5, 7, 9, 15");
  if (!(twist_dp.curve() == quadratic_twist(dp.curve(), D)))
    throw DomainError("odd_part_check: second cache does not belong to the twist by " + to_string(D));
  OddPartCounts c;
  c.over_k = killed_by(dp, n, QuadraticField(D));
  c.over_q = killed_by(dp, n, RationalField{});
  c.over_twist = killed_by(twist_dp, n, RationalField{});
  return c;
}

OddPartCounts odd_part_check(const CurveQ& E, const SquarefreeD& D, int n) {
  DivisionPolynomials dp(E);
  DivisionPolynomials tdp(quadratic_twist(E, D));
  return odd_part_check(dp, tdp, D, n);
}

std::vector<TwistEntry> twist_survey(DivisionPolynomials& dp, LevelPolicy policy) {
  const TorsionStructure G = torsion_Q(dp).structure;
  std::set<SquarefreeD> fields;
  for (int q : candidate_levels(G, policy)) add_fields_from_level(dp, q, fields);
  add_fields_from_level(dp, 2, fields);
  std::vector<TwistEntry> out;
  for (const SquarefreeD& d : fields) {
    const TorsionStructure T = torsion_Q(quadratic_twist(dp.curve(), d)).structure;
    if (T.n2() > 2) out.push_back({d, T});
  }
  return out;
}

std::vector<TwistEntry> twist_survey(const CurveQ& E, LevelPolicy policy) {
  DivisionPolynomials dp(E);
  return twist_survey(dp, policy);
}

}  // namespace quadtor
