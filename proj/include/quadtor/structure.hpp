#pragma once

#include <compare>
#include <string>

namespace quadtor {

/// C_{n1} x C_{n2} with n1 | n2; cyclic groups are (1, n).
class TorsionStructure {
 public:
  /// Throws DomainError unless 1 <= n1, 1 <= n2 and n1 | n2.
  TorsionStructure(int n1, int n2);
  static TorsionStructure cyclic(int n) { return {1, n}; }

  int n1() const noexcept { return n1_; }
  int n2() const noexcept { return n2_; }
  int order() const noexcept { return n1_ * n2_; }
  bool is_cyclic() const noexcept { return n1_ == 1; }

  /// Abstract subgroup test: C_a x C_b embeds in C_c x C_d iff a | c and b | d.
  bool contains(const TorsionStructure& g) const noexcept;

  /// Number of elements killed by k.
  int count_killed_by(int k) const noexcept;

  /// "C5", "C2xC8".
  std::string name() const;

  friend bool operator==(const TorsionStructure&, const TorsionStructure&) = default;
  friend auto operator<=>(const TorsionStructure& a, const TorsionStructure& b) {
    if (auto c = a.order() <=> b.order(); c != 0) return c;
    return a.n1_ <=> b.n1_;
  }

 private:
  int n1_, n2_;
};

/// Accepts "n1,n2", "n" or names such as "C2xC4" / "C2×C4". Throws DomainError.
TorsionStructure parse_structure(const std::string& text);

}  // namespace quadtor
