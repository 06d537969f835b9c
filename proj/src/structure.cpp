#include "quadtor/structure.hpp"

#include <cctype>
#include <numeric>

#include "quadtor/errors.hpp"

namespace quadtor {

TorsionStructure::TorsionStructure(int n1, int n2) : n1_(n1), n2_(n2) {
  if (n1 < 1 || n2 < 1 || n2 % n1 != 0)
    throw DomainError("invalid torsion structure (" + std::to_string(n1) + "," + std::to_string(n2) + ")");
}

bool TorsionStructure::contains(const TorsionStructure& g) const noexcept {
  return n1_ % g.n1_ == 0 && n2_ % g.n2_ == 0;
}

int TorsionStructure::count_killed_by(int k) const noexcept {
  return std::gcd(n1_, k) * std::gcd(n2_, k);
}

std::string TorsionStructure::name() const {
  if (n1_ == 1) return "C" + std::to_string(n2_);
  return "C" + std::to_string(n1_) + "xC" + std::to_string(n2_);
}

namespace {

int parse_positive(const std::string& s, const std::string& whole) {
  if (s.empty() || s.size() > 6) throw DomainError("cannot parse group '" + whole + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("cannot parse group '" + whole + "'");
  return std::stoi(s);
}

}  // namespace

TorsionStructure parse_structure(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  // normalise the multiplication sign to 'x'
  for (std::string::size_type pos; (pos = s.find("\xC3\x97")) != std::string::npos;) s.replace(pos, 2, "x");
  if (!s.empty() && (s[0] == 'C' || s[0] == 'c')) {
    const auto x = s.find_first_of("xX");
    if (x == std::string::npos) return TorsionStructure::cyclic(parse_positive(s.substr(1), text));
    std::string rhs = s.substr(x + 1);
    if (rhs.empty() || (rhs[0] != 'C' && rhs[0] != 'c')) throw DomainError("cannot parse group '" + text + "'");
    return {parse_positive(s.substr(1, x - 1), text), parse_positive(rhs.substr(1), text)};
  }
  const auto comma = s.find(',');
  if (comma == std::string::npos) return TorsionStructure::cyclic(parse_positive(s, text));
  return {parse_positive(s.substr(0, comma), text), parse_positive(s.substr(comma + 1), text)};
}

}  // namespace quadtor
