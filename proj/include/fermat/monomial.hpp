#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace fermat {

/// Exponent vector for up to four variables, packed 16 bits per variable with
/// variable 0 in the most significant word. Exponents must stay below 2^15.
class Monomial {
 public:
  static constexpr int kMaxVars = 4;
  static constexpr int kMaxExponent = (1 << 15) - 1;

  constexpr Monomial() = default;
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(const std::vector<int>& exponents);
  static constexpr Monomial from_bits(std::uint64_t bits) {
    Monomial m;
    m.bits_ = bits;
    return m;
  }
  /// x_i^e.
  static Monomial variable(int index, int exponent = 1);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int operator[](int i) const { return static_cast<int>((bits_ >> shift(i)) & 0xFFFFu); }
  constexpr int degree() const {
    return static_cast<int>((bits_ & 0xFFFF) + ((bits_ >> 16) & 0xFFFF) + ((bits_ >> 32) & 0xFFFF) +
                            (bits_ >> 48));
  }
  std::array<int, kMaxVars> exponents() const;
  constexpr bool is_one() const { return bits_ == 0; }

  constexpr bool divides(Monomial other) const {
    // Guard bits detect a borrow in any field.
    constexpr std::uint64_t kGuard = 0x8000800080008000ULL;
    return (((other.bits_ | kGuard) - bits_) & kGuard) == kGuard;
  }
  constexpr Monomial operator*(Monomial o) const { return from_bits(bits_ + o.bits_); }
  /// Exact quotient; the divisor must divide *this.
  constexpr Monomial operator/(Monomial o) const { return from_bits(bits_ - o.bits_); }
  Monomial lcm(Monomial o) const;
  Monomial gcd(Monomial o) const;
  bool coprime(Monomial o) const { return gcd(o).is_one(); }

  /// Moves every exponent `by` slots toward higher variable indices (embedding into a
  /// ring with `by` extra leading variables); negative values shift back.
  Monomial shifted(int by) const;

  /// `x^a*y^b` over the given names; empty string for 1.
  std::string str(const std::vector<std::string>& names) const;

  friend constexpr bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }

 private:
  static constexpr int shift(int i) { return 16 * (kMaxVars - 1 - i); }
  std::uint64_t bits_ = 0;
};

/// Monomial orders used by the engine. Block-elimination compares the first
/// `block` variables by graded reverse lex, then the rest by graded reverse lex.
class MonomialOrder {
 public:
  enum class Kind { GradedReverseLex, Lex, BlockElimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::GradedReverseLex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder block_elimination(int block) { return MonomialOrder(Kind::BlockElimination, block); }

  Kind kind() const { return kind_; }
  int block() const { return block_; }
  bool degree_compatible() const { return kind_ == Kind::GradedReverseLex; }

  std::strong_ordering compare(Monomial a, Monomial b) const;
  /// True when a is strictly larger than b.
  bool greater(Monomial a, Monomial b) const { return compare(a, b) == std::strong_ordering::greater; }

  std::string name() const;
  static MonomialOrder parse(const std::string& name);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
  friend auto operator<=>(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, int block) : kind_(kind), block_(block) {}
  Kind kind_;
  int block_;
};

/// All monomials of total degree `degree` in the first `nvars` variables, in
/// decreasing lex order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace fermat

template <>
struct std::hash<fermat::Monomial> {
  std::size_t operator()(fermat::Monomial m) const noexcept { return std::hash<std::uint64_t>{}(m.bits()); }
};
