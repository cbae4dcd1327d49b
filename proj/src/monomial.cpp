#include "fermat/monomial.hpp"

#include <algorithm>

#include "fermat/detail/term_text.hpp"
#include "fermat/errors.hpp"

namespace fermat {

namespace {

std::uint64_t pack(const int* exps, std::size_t count) {
  if (count > static_cast<std::size_t>(Monomial::kMaxVars)) throw Error("monomial: too many variables");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (exps[i] < 0 || exps[i] > Monomial::kMaxExponent) throw Error("monomial: exponent out of range");
    bits |= static_cast<std::uint64_t>(exps[i]) << (16 * (Monomial::kMaxVars - 1 - i));
  }
  return bits;
}

// Graded reverse lex on the index range [lo, hi).
std::strong_ordering grevlex_range(Monomial a, Monomial b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (int i = hi - 1; i >= lo; --i) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::initializer_list<int> exponents) : bits_(pack(exponents.begin(), exponents.size())) {}

Monomial::Monomial(const std::vector<int>& exponents) : bits_(pack(exponents.data(), exponents.size())) {}

Monomial Monomial::variable(int index, int exponent) {
  if (index < 0 || index >= kMaxVars) throw Error("monomial: variable index out of range");
  std::vector<int> e(kMaxVars, 0);
  e[index] = exponent;
  return Monomial(e);
}

std::array<int, Monomial::kMaxVars> Monomial::exponents() const {
  std::array<int, kMaxVars> e{};
  for (int i = 0; i < kMaxVars; ++i) e[i] = (*this)[i];
  return e;
}

Monomial Monomial::lcm(Monomial o) const {
  std::uint64_t bits = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    bits |= static_cast<std::uint64_t>(std::max((*this)[i], o[i])) << shift(i);
  }
  return from_bits(bits);
}

Monomial Monomial::gcd(Monomial o) const {
  std::uint64_t bits = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    bits |= static_cast<std::uint64_t>(std::min((*this)[i], o[i])) << shift(i);
  }
  return from_bits(bits);
}

Monomial Monomial::shifted(int by) const {
  if (by >= 0) return from_bits(bits_ >> (16 * by));
  return from_bits(bits_ << (16 * -by));
}

std::string Monomial::str(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    int e = (*this)[static_cast<int>(i)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += detail::power_text(names[i], e);
  }
  return out;
}

std::strong_ordering MonomialOrder::compare(Monomial a, Monomial b) const {
  switch (kind_) {
    case Kind::Lex:
      return a.bits() <=> b.bits();
    case Kind::GradedReverseLex:
      // Unused trailing variables are zero and never break a tie.
      return grevlex_range(a, b, 0, Monomial::kMaxVars);
    case Kind::BlockElimination: {
      auto first = grevlex_range(a, b, 0, block_);
      if (first != std::strong_ordering::equal) return first;
      return grevlex_range(a, b, block_, Monomial::kMaxVars);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GradedReverseLex:
      return "grevlex";
    case Kind::BlockElimination:
      return "block" + std::to_string(block_);
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(const std::string& name) {
  if (name == "lex") return lex();
  if (name == "grevlex") return grevlex();
  if (name.rfind("block", 0) == 0 && name.size() > 5) {
    return block_elimination(std::stoi(name.substr(5)));
  }
  throw ParseError("unknown monomial order '" + name + "'");
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || nvars <= 0) return out;
  std::vector<int> e(nvars, 0);
  // Recursive composition enumeration, first variable descending.
  auto rec = [&](auto&& self, int index, int remaining) -> void {
    if (index == nvars - 1) {
      e[index] = remaining;
      out.emplace_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[index] = k;
      self(self, index + 1, remaining - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace fermat
