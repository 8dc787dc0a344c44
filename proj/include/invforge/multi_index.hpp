#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "invforge/scalar.hpp"

namespace invforge {

// Exponent vector of a monomial x_1^a_1 ... x_m^a_m.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<unsigned> entries) : entries_(entries) {}

  static MultiIndex zeros(std::size_t length) {
    return MultiIndex(std::vector<unsigned>(length, 0));
  }

  // epsilon_l: 1 in slot l (0-based), 0 elsewhere.
  static MultiIndex unit(std::size_t length, std::size_t slot) {
    MultiIndex out = zeros(length);
    out.entries_.at(slot) = 1;
    return out;
  }

  std::size_t size() const { return entries_.size(); }
  unsigned operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<unsigned>& entries() const { return entries_; }

  unsigned norm() const {
    unsigned total = 0;
    for (unsigned e : entries_) total += e;
    return total;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(entries_[i]);
    }
    return out + ")";
  }

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<unsigned> entries_;
};

inline Integer multi_index_factorial(const MultiIndex& alpha) {
  Integer result = 1;
  for (unsigned e : alpha.entries()) result *= factorial(e);
  return result;
}

// alpha! * beta!, the scale relating c-hat_{alpha,beta} to c_{alpha,beta}.
inline Integer multi_index_factorial(const MultiIndex& alpha, const MultiIndex& beta) {
  Integer result = multi_index_factorial(alpha);
  result *= multi_index_factorial(beta);
  return result;
}

}  // namespace invforge
