#pragma once

#include <cctype>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/group.hpp"
#include "invforge/multi_index.hpp"
#include "invforge/scalar.hpp"
#include "invforge/sparse_poly.hpp"

namespace invforge {

// Generator of Psi: x_i (coordinate) or d_i (the derivation, GL only), 1-based.
struct PsiVar {
  enum class Kind : unsigned char { X, D };
  Kind kind;
  unsigned index;

  auto operator<=>(const PsiVar&) const = default;

  std::string to_string() const { return (kind == Kind::X ? "x" : "d") + std::to_string(index); }
};

using PsiPoly = SparsePoly<PsiVar, Rational>;

// An element of Psi = P(V) (O, Sp) or P(V + V*) (GL).
class PsiElement {
 public:
  PsiElement(GroupKind group, PsiPoly poly) : group_(group), poly_(std::move(poly)) {
    const unsigned m = group_.dim_v();
    for (const auto& [mono, coeff] : poly_) {
      for (const auto& [var, exponent] : mono.factors()) {
        if (var.index == 0 || var.index > m) {
          throw DimensionMismatch(var.to_string() + " is out of range for " + group_.to_string());
        }
        if (var.kind == PsiVar::Kind::D && group_.family() != Family::GL) {
          throw DimensionMismatch("derivations d_i only exist for GL");
        }
      }
    }
  }

  const GroupKind& group() const { return group_; }
  const PsiPoly& poly() const { return poly_; }

  std::string to_string() const {
    return poly_.to_string([](const PsiVar& v) { return v.to_string(); },
                           [](const Rational& c) {
                             return is_integral(c) ? c.get_str() : "(" + c.get_str() + ")";
                           });
  }

  friend bool operator==(const PsiElement&, const PsiElement&) = default;

 private:
  GroupKind group_;
  PsiPoly poly_;
};

// The literal coefficient of x^alpha d^beta in psi (beta empty for O, Sp).
inline Rational coefficient(const PsiElement& psi, const MultiIndex& alpha, const MultiIndex& beta = {}) {
  const bool dual = psi.group().family() == Family::GL;
  const unsigned m = psi.group().dim_v();
  if (alpha.size() != m || beta.size() != (dual ? m : 0)) {
    throw LengthMismatch("multi-index lengths " + std::to_string(alpha.size()) + "/" +
                         std::to_string(beta.size()) + " do not match " + psi.group().to_string());
  }
  std::vector<Monomial<PsiVar>::Factor> factors;
  for (unsigned i = 0; i < alpha.size(); ++i) factors.emplace_back(PsiVar{PsiVar::Kind::X, i + 1}, alpha[i]);
  for (unsigned i = 0; i < beta.size(); ++i) factors.emplace_back(PsiVar{PsiVar::Kind::D, i + 1}, beta[i]);
  return psi.poly().coefficient(Monomial<PsiVar>(std::move(factors)));
}

namespace detail {

// Recursive-descent parser for polynomials in x1.., d1.. with rational
// literals. Juxtaposition multiplies; '/' divides by a literal.
class PsiParser {
 public:
  explicit PsiParser(std::string_view text) : text_(text) {}

  PsiPoly parse() {
    PsiPoly value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  PsiPoly expression() {
    skip_space();
    PsiPoly value;
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = text_[pos_++] == '-';
    value = term();
    if (negate) value = -value;
    for (;;) {
      skip_space();
      if (peek() != '+' && peek() != '-') return value;
      const bool minus = text_[pos_++] == '-';
      PsiPoly rhs = term();
      if (minus) {
        value -= rhs;
      } else {
        value += rhs;
      }
    }
  }

  PsiPoly term() {
    PsiPoly value = power();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        value *= power();
      } else if (c == '/') {
        ++pos_;
        skip_space();
        const Rational divisor = number();
        if (divisor == 0) fail("division by zero");
        value *= Rational(1 / divisor);
      } else if (c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'd') {
        value *= power();
      } else {
        return value;
      }
    }
  }

  PsiPoly power() {
    PsiPoly base = primary();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      base = base.pow(natural());
    }
    return base;
  }

  PsiPoly primary() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      PsiPoly inner = expression();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return PsiPoly(number());
    if (c == 'x' || c == 'd') {
      ++pos_;
      const unsigned index = natural();
      if (index == 0) fail("variable indices start at 1");
      return PsiPoly::variable({c == 'x' ? PsiVar::Kind::X : PsiVar::Kind::D, index});
    }
    fail(pos_ < text_.size() ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  Rational number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Rational(parse_integer(text_.substr(start, pos_ - start)));
  }

  unsigned natural() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("psi: " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses e.g. "(x1^2 + 2 x1 x2 + 1) d1 + (1/4) x1^2 d2".
inline PsiElement parse_psi(const GroupKind& group, std::string_view text) {
  return PsiElement(group, detail::PsiParser(text).parse());
}

// The conic A x^2 + B xy + C y^2 + D x + E y + F under O(2).
inline PsiElement conic(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                        const Rational& e, const Rational& f) {
  auto x = PsiPoly::variable({PsiVar::Kind::X, 1});
  auto y = PsiPoly::variable({PsiVar::Kind::X, 2});
  PsiPoly p = PsiPoly(a) * x * x + PsiPoly(b) * x * y + PsiPoly(c) * y * y + PsiPoly(d) * x +
              PsiPoly(e) * y + PsiPoly(f);
  return PsiElement(GroupKind::o(2), std::move(p));
}

// The binary form sum_i coeffs[i] x^{m-i} y^i under Sp(1), m = coeffs.size()-1.
inline PsiElement binary_form(const std::vector<Rational>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
  const unsigned m = static_cast<unsigned>(coeffs.size() - 1);
  PsiPoly p;
  for (unsigned i = 0; i <= m; ++i) {
    p.add_term(Monomial<PsiVar>({{PsiVar{PsiVar::Kind::X, 1}, m - i}, {PsiVar{PsiVar::Kind::X, 2}, i}}), coeffs[i]);
  }
  return PsiElement(GroupKind::sp(1), std::move(p));
}

}  // namespace invforge
