#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace invforge {

// Product of variables with positive exponents, kept sorted by variable and
// merged, so equal monomials have equal representations.
template <class Var>
class Monomial {
 public:
  using Factor = std::pair<Var, unsigned>;

  Monomial() = default;

  explicit Monomial(std::vector<Factor> factors) : factors_(std::move(factors)) { normalize(); }

  static Monomial variable(Var v, unsigned exponent = 1) {
    return Monomial(std::vector<Factor>{{std::move(v), exponent}});
  }

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  unsigned exponent(const Var& v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const Var& key) { return f.first < key; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
      if (i->first < j->first) {
        out.factors_.push_back(*i++);
      } else if (j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    out.degree_ = a.degree_ + b.degree_;
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  void normalize() {
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    std::vector<Factor> merged;
    merged.reserve(factors_.size());
    for (auto& f : factors_) {
      if (f.second == 0) continue;
      if (!merged.empty() && merged.back().first == f.first) {
        merged.back().second += f.second;
      } else {
        merged.push_back(std::move(f));
      }
    }
    factors_ = std::move(merged);
    degree_ = 0;
    for (const auto& f : factors_) degree_ += f.second;
  }

  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

// Graded lexicographic: total degree first, then the (variable, exponent)
// pair lists compared lexicographically.
template <class Var>
struct GradedLexOrder {
  bool operator()(const Monomial<Var>& a, const Monomial<Var>& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.factors().begin(), a.factors().end(),
                                        b.factors().begin(), b.factors().end());
  }
};

// Sparse multivariate polynomial with exact coefficients. No stored term has a
// zero coefficient.
template <class Var, class Coeff>
class SparsePoly {
 public:
  using Mono = Monomial<Var>;
  using TermMap = std::map<Mono, Coeff, GradedLexOrder<Var>>;
  using const_iterator = typename TermMap::const_iterator;

  SparsePoly() = default;
  SparsePoly(const Coeff& constant) {  // NOLINT(google-explicit-constructor)
    add_term(Mono{}, constant);
  }

  static SparsePoly variable(Var v, unsigned exponent = 1) {
    SparsePoly out;
    out.add_term(Mono::variable(std::move(v), exponent), Coeff(1));
    return out;
  }

  static SparsePoly term(Mono mono, const Coeff& coeff) {
    SparsePoly out;
    out.add_term(std::move(mono), coeff);
    return out;
  }

  void add_term(const Mono& mono, const Coeff& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  Coeff coefficient(const Mono& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  SparsePoly& operator+=(const SparsePoly& other) {
    for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
    return *this;
  }

  SparsePoly& operator-=(const SparsePoly& other) {
    for (const auto& [mono, coeff] : other.terms_) add_term(mono, Coeff(-coeff));
    return *this;
  }

  SparsePoly& operator*=(const Coeff& scalar) {
    if (scalar == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= scalar;
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) {
    for (auto& [mono, coeff] : a.terms_) coeff = -coeff;
    return a;
  }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Coeff product = ca;
        product *= cb;
        out.add_term(ma * mb, product);
      }
    }
    return out;
  }

  SparsePoly& operator*=(const SparsePoly& other) { return *this = *this * other; }

  SparsePoly pow(unsigned exponent) const {
    SparsePoly result(Coeff(1));
    for (unsigned i = 0; i < exponent; ++i) result *= *this;
    return result;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

  // Canonical text: terms in monomial order, "coeff*v1^e1*v2" with unit
  // coefficients elided, joined by " + " / " - ".
  template <class VarPrinter, class CoeffPrinter>
  std::string to_string(VarPrinter&& print_var, CoeffPrinter&& print_coeff) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : terms_) {
      const bool negative = coeff < 0;
      Coeff magnitude = negative ? Coeff(-coeff) : coeff;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string body;
      if (mono.is_one() || !(magnitude == 1)) body = print_coeff(magnitude);
      for (const auto& [var, exponent] : mono.factors()) {
        if (!body.empty()) body += '*';
        body += print_var(var);
        if (exponent > 1) body += "^" + std::to_string(exponent);
      }
      out += body;
    }
    return out;
  }

 private:
  TermMap terms_;
};

// Substitutes `lookup(var)` for each variable and sums, in the value ring T.
// `convert` lifts a coefficient into T.
template <class T, class Var, class Coeff, class Lookup, class Convert>
T evaluate(const SparsePoly<Var, Coeff>& poly, Lookup&& lookup, Convert&& convert) {
  T total = convert(Coeff(0));
  std::map<Var, T> cache;
  for (const auto& [mono, coeff] : poly) {
    T term = convert(coeff);
    for (const auto& [var, exponent] : mono.factors()) {
      auto it = cache.find(var);
      if (it == cache.end()) it = cache.emplace(var, lookup(var)).first;
      for (unsigned e = 0; e < exponent; ++e) term *= it->second;
    }
    total += term;
  }
  return total;
}

template <class T, class Var, class Coeff, class Lookup>
T evaluate(const SparsePoly<Var, Coeff>& poly, Lookup&& lookup) {
  return evaluate<T>(poly, std::forward<Lookup>(lookup), [](const Coeff& c) { return T(c); });
}

}  // namespace invforge
