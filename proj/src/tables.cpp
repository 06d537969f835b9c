#include "quadtor/tables.hpp"

#include <algorithm>
#include <map>

#include "quadtor/errors.hpp"

namespace quadtor {

namespace {

GroupId C(int n) { return GroupId::cyclic(n); }
GroupId C(int n1, int n2) { return {n1, n2}; }

template <class V>
V sorted(V v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct Row {
  std::vector<GroupId> h;
  int k;
};

const std::map<GroupId, Row>& growth_table() {
  static const std::map<GroupId, Row> table = {
      {C(1), {sorted(std::vector{C(1), C(3), C(5), C(7), C(9)}), 80}},
      {C(2),
       {sorted(std::vector{C(2), C(4), C(6), C(8), C(10), C(12), C(16), C(2, 2), C(2, 6), C(2, 10)}), 182}},
      {C(3), {sorted(std::vector{C(3), C(15), C(3, 3)}), 16}},
      {C(4), {sorted(std::vector{C(4), C(8), C(12), C(2, 4), C(2, 8), C(2, 12), C(4, 4)}), 43}},
      {C(5), {sorted(std::vector{C(5), C(15)}), 4}},
      {C(6), {sorted(std::vector{C(6), C(12), C(2, 6), C(3, 6)}), 12}},
      {C(7), {{C(7)}, 0}},
      {C(8), {sorted(std::vector{C(8), C(16), C(2, 8)}), 128}},
      {C(9), {{C(9)}, 0}},
      {C(10), {sorted(std::vector{C(10), C(2, 10)}), 1}},
      {C(12), {sorted(std::vector{C(12), C(2, 12)}), 1}},
      {C(2, 2), {sorted(std::vector{C(2, 2), C(2, 4), C(2, 6), C(2, 8), C(2, 12)}), 42}},
      {C(2, 4), {sorted(std::vector{C(2, 4), C(2, 8), C(4, 4)}), 38}},
      {C(2, 6), {sorted(std::vector{C(2, 6), C(2, 12)}), 7}},
      {C(2, 8), {{C(2, 8)}, 0}},
  };
  return table;
}

const Row& row(const GroupId& g) {
  const auto& t = growth_table();
  auto it = t.find(g);
  if (it == t.end()) throw DomainError(g.name() + " is not a torsion group over Q");
  return it->second;
}

// Tags for pairs with G inside H that the table excludes, keyed by cyclic G.
RuleTag cyclic_tag(int g, const GroupId& h) {
  switch (g) {
    case 1:
      if (h == C(15)) return RuleTag::FifteenOnly;
      if (h == C(3, 3)) return RuleTag::NoThreeFull;
      if (h == C(3, 6)) return RuleTag::FullThreeAndEven;
      if (h.order() % 2 == 0) return RuleTag::NoEvenGrowth;
      break;
    case 2:
      if (h == C(3, 6)) return RuleTag::NoThreeFull;
      if (h == C(2, 4) || h == C(2, 8) || h == C(2, 12) || h == C(4, 4)) return RuleTag::NoFourByTwo;
      break;
    case 3:
      if (h == C(9)) return RuleTag::NoNine;
      if (h.order() % 2 == 0) return RuleTag::NoEvenGrowth;
      break;
    case 4:
      if (h == C(16)) return RuleTag::NoSixteen;
      break;
    case 5:
      if (h.order() % 2 == 0) return RuleTag::NoEvenGrowth;
      break;
    case 6:
      if (h == C(2, 12)) return RuleTag::NoFourByTwo;
      break;
    default:
      break;
  }
  return RuleTag::None;
}

}  // namespace

const std::vector<GroupId>& phi1() {
  static const std::vector<GroupId> v = sorted(std::vector{C(1), C(2), C(3), C(4), C(5), C(6), C(7), C(8), C(9),
                                                           C(10), C(12), C(2, 2), C(2, 4), C(2, 6), C(2, 8)});
  return v;
}

const std::vector<GroupId>& phi_q2() {
  static const std::vector<GroupId> v =
      sorted(std::vector{C(1), C(2), C(3), C(4), C(5), C(6), C(7), C(8), C(9), C(10), C(12), C(15), C(16),
                         C(2, 2), C(2, 4), C(2, 6), C(2, 8), C(2, 10), C(2, 12), C(3, 3), C(3, 6), C(4, 4)});
  return v;
}

bool in_phi1(const GroupId& g) { return std::binary_search(phi1().begin(), phi1().end(), g); }
bool in_phi_q2(const GroupId& h) { return std::binary_search(phi_q2().begin(), phi_q2().end(), h); }

const std::vector<GroupId>& phi_q2_of(const GroupId& g) { return row(g).h; }

int growth_bound(const GroupId& g) { return row(g).k; }

std::string describe(RuleTag tag) {
  switch (tag) {
    case RuleTag::None: return "";
    case RuleTag::NotSubgroup: return "G not a subgroup of H";
    case RuleTag::NoThreeFull: return "rule (i)";
    case RuleTag::NoEvenGrowth: return "rule (ii)";
    case RuleTag::NoFourByTwo: return "rule (iii)";
    case RuleTag::NoSixteen: return "rule (iv)";
    case RuleTag::NoNine: return "rule (v)";
    case RuleTag::FifteenOnly: return "rule (vi)";
    case RuleTag::FullThreeAndEven: return "rules (i),(ii)";
    case RuleTag::NonCyclic: return "non-cyclic exclusion";
  }
  return "";
}

Admissibility allowed_pair(const GroupId& g, const GroupId& h) {
  const auto& hs = phi_q2_of(g);
  if (!in_phi_q2(h)) throw DomainError(h.name() + " is not a torsion group of a rational curve over a quadratic field");
  if (std::binary_search(hs.begin(), hs.end(), h)) return {true, RuleTag::None};
  if (!h.contains(g)) return {false, RuleTag::NotSubgroup};
  if (!g.is_cyclic()) return {false, RuleTag::NonCyclic};
  const RuleTag t = cyclic_tag(g.n2(), h);
  if (t == RuleTag::None) throw InconsistencyError("no rule recorded for excluded pair " + g.name() + " -> " + h.name());
  return {false, t};
}

bool weil_constraint(const GroupId& h, const SquarefreeD& d) {
  if (h.n1() % 3 == 0) return d.value() == -3;
  if (h.n1() % 4 == 0) return d.value() == -1;
  return true;
}

}  // namespace quadtor
