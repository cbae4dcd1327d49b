#include "fermat/poly_text.hpp"

#include <cctype>
#include <numeric>
#include <optional>
#include <string>

#include "fermat/errors.hpp"

namespace fermat {

namespace {

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  CPoly parse() {
    CPoly value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + std::string(text_) + "'", 0, static_cast<int>(pos_ + 1));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::optional<char> peek() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    return text_[pos_];
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  CPoly expr() {
    CPoly total(ring_);
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    CPoly first = term();
    total = negative ? -first : first;
    while (true) {
      if (accept('+')) {
        total += term();
      } else if (accept('-')) {
        total -= term();
      } else {
        return total;
      }
    }
  }

  CPoly term() {
    CPoly value = factor();
    while (true) {
      if (accept('*')) {
        value = value * factor();
      } else if (accept('/')) {
        CPoly divisor = factor();
        if (divisor.is_zero()) fail("division by zero");
        if (divisor.size() != 1 || !divisor.leading_monomial().is_one()) fail("division by a non-constant");
        value = value.scaled(divisor.leading_coeff().inverse());
      } else {
        return value;
      }
    }
  }

  CPoly factor() {
    CPoly base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }

  CPoly atom() {
    auto c = peek();
    if (!c) fail("unexpected end of input");
    if (*c == '(') {
      ++pos_;
      CPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(*c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)), 10);
      return CPoly::constant(ring_, Rational(n, 1));
    }
    if (std::isalpha(static_cast<unsigned char>(*c)) || *c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      for (int i = 0; i < ring_->nvars(); ++i) {
        if (ring_->vars[i] == name) return CPoly::variable(ring_, i);
      }
      if (name.size() > 2 && name.rfind("z_", 0) == 0) {
        int k = std::stoi(name.substr(2));
        int n = ring_->conductor();
        if (k < 1 || n % k != 0) {
          pos_ = start;
          fail("root of unity '" + name + "' is not in Q(z_" + std::to_string(n) + ")");
        }
        return CPoly::term(ring_, Monomial(), CycloNumber::zeta_power(ring_->field, n / k));
      }
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail("unexpected '" + std::string(1, *c) + "'");
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

int conductor_mentioned(std::string_view text) {
  int conductor = 1;
  for (std::size_t i = 0; i + 2 < text.size(); ++i) {
    bool boundary = i == 0 || !(std::isalnum(static_cast<unsigned char>(text[i - 1])) || text[i - 1] == '_');
    if (!boundary || text[i] != 'z' || text[i + 1] != '_') continue;
    std::size_t j = i + 2;
    int k = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) k = 10 * k + (text[j++] - '0');
    if (j > i + 2 && k > 0) conductor = std::lcm(conductor, k);
  }
  return conductor;
}

CPoly parse_cpoly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

QPoly parse_qpoly(std::string_view text, const RingPtr& ring) {
  if (!ring->is_rational()) throw RingMismatch("parse_qpoly: ring is not over Q");
  RingPtr wide = with_conductor(ring, conductor_mentioned(text));
  CPoly p = parse_cpoly(text, wide);
  std::vector<QPoly::TermType> terms;
  for (const auto& t : p.terms()) {
    if (!t.coeff.is_rational()) throw ParseError("irrational coefficient in a polynomial over Q: '" + std::string(text) + "'");
    terms.push_back({t.mono, t.coeff.coeffs()[0]});
  }
  return QPoly(ring, std::move(terms));
}

CycloNumber parse_cyclo(std::string_view text, const CycloFieldPtr& field) {
  auto ring = std::make_shared<const Ring>(Ring{{"_"}, MonomialOrder::grevlex(), field});
  CPoly p = parse_cpoly(text, ring);
  if (p.is_zero()) return CycloNumber(field);
  if (p.size() != 1 || !p.leading_monomial().is_one()) throw ParseError("expected a constant: '" + std::string(text) + "'");
  return p.leading_coeff();
}

CycloNumber parse_cyclo(std::string_view text) {
  return parse_cyclo(text, CycloField::make(conductor_mentioned(text)));
}

}  // namespace fermat
