#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "invforge/scalar.hpp"

namespace invforge {

// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) { validate(); }
  Partition(std::initializer_list<unsigned> parts) : parts_(parts) { validate(); }

  unsigned size() const {
    unsigned total = 0;
    for (unsigned p : parts_) total += p;
    return total;
  }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  unsigned operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<unsigned>& parts() const { return parts_; }

  // Number of parts equal to `value`.
  unsigned multiplicity(unsigned value) const {
    unsigned count = 0;
    for (unsigned p : parts_) count += (p == value);
    return count;
  }

  Partition conjugate() const {
    std::vector<unsigned> columns(parts_.empty() ? 0 : parts_.front(), 0);
    for (unsigned p : parts_) {
      for (unsigned c = 0; c < p; ++c) ++columns[c];
    }
    return Partition(std::move(columns));
  }

  bool all_parts_even() const {
    for (unsigned p : parts_) {
      if (p % 2) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  auto operator<=>(const Partition&) const = default;

 private:
  void validate() const {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
      if (i && parts_[i] > parts_[i - 1]) {
        throw std::invalid_argument("partition parts must be weakly decreasing");
      }
    }
  }

  std::vector<unsigned> parts_;
};

enum class Parity { any, even };

namespace detail {

inline void partitions_rec(unsigned remaining, unsigned max_part, unsigned max_length,
                           std::vector<unsigned>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (current.size() == max_length) return;
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, max_length, current, out);
    current.pop_back();
  }
}

}  // namespace detail

// Partitions of `size` with at most `max_length` parts, in descending
// lexicographic order, optionally keeping only those whose rows (parts) or
// columns (conjugate parts) all have even length.
inline std::vector<Partition> partitions(unsigned size, unsigned max_length,
                                         Parity rows = Parity::any, Parity cols = Parity::any) {
  std::vector<Partition> all;
  std::vector<unsigned> current;
  detail::partitions_rec(size, size, max_length, current, all);
  if (rows == Parity::any && cols == Parity::any) return all;
  std::vector<Partition> kept;
  for (auto& p : all) {
    if (rows == Parity::even && !p.all_parts_even()) continue;
    if (cols == Parity::even && !p.conjugate().all_parts_even()) continue;
    kept.push_back(std::move(p));
  }
  return kept;
}

// Order of the centralizer of a permutation with cycle type nu:
// prod_i i^{m_i} m_i!.
inline Integer centralizer_order(const Partition& nu) {
  Integer z = 1;
  if (nu.empty()) return z;
  for (unsigned i = 1; i <= nu[0]; ++i) {
    const unsigned m = nu.multiplicity(i);
    if (m == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), i, m);
    z *= power;
    z *= factorial(m);
  }
  return z;
}

}  // namespace invforge
