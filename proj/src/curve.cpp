#include "quadtor/curve.hpp"

#include <cctype>
#include <sstream>

#include "quadtor/errors.hpp"

namespace quadtor {

Integer LongModel::b2() const { return a1() * a1() + 4 * a2(); }
Integer LongModel::b4() const { return 2 * a4() + a1() * a3(); }
Integer LongModel::b6() const { return a3() * a3() + 4 * a6(); }
Integer LongModel::b8() const {
  return a1() * a1() * a6() + 4 * a2() * a6() - a1() * a3() * a4() + a2() * a3() * a3() - a4() * a4();
}
Integer LongModel::c4() const { return b2() * b2() - 24 * b4(); }
Integer LongModel::c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
Integer LongModel::discriminant() const {
  const Integer B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
  return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
}

std::string LongModel::coefficient_list() const {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += quadtor::to_string(a[i]);
  }
  return out + "]";
}

LongModel parse_long_model(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError(0, "a-invariants must be a bracketed list: '" + text + "'");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (!s.empty() && s.back() == ',') parts.push_back("");
  if (parts.size() != 5) throw ParseError(0, "expected 5 a-invariants in '" + text + "'");
  LongModel m;
  for (std::size_t i = 0; i < 5; ++i) {
    const std::string& p = parts[i];
    std::size_t k = (!p.empty() && p[0] == '-') ? 1 : 0;
    if (k >= p.size()) throw ParseError(0, "empty or malformed a-invariant in '" + text + "'");
    for (std::size_t j = k; j < p.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(p[j])))
        throw ParseError(0, "non-integer a-invariant '" + p + "'");
    m.a[i] = Integer(p, 10);
  }
  return m;
}

Rational short_discriminant(const Rational& A, const Rational& B) {
  return Rational(-16) * (4 * A * A * A + 27 * B * B);
}

CurveQ::CurveQ(Rational A, Rational B, std::optional<LongModel> origin)
    : A_(std::move(A)), B_(std::move(B)), origin_(std::move(origin)) {
  if (sgn(short_discriminant(A_, B_)) == 0)
    throw SingularCurveError("A=" + quadtor::to_string(A_) + ", B=" + quadtor::to_string(B_) +
                             " gives discriminant 0");
}

std::string CurveQ::to_string() const {
  return "Y^2 = X^3 + (" + quadtor::to_string(A_) + ")X + (" + quadtor::to_string(B_) + ")";
}

ShortModel short_model_from_long(const LongModel& m) {
  const Integer disc = m.discriminant();
  if (disc == 0)
    throw SingularCurveError("long model " + m.coefficient_list() + " has discriminant 0");
  CurveQ E(Rational(-27 * m.c4()), Rational(-54 * m.c6()), m);
  return {std::move(E), CoordMap(m)};
}

}  // namespace quadtor
