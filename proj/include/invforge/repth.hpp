#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/group.hpp"
#include "invforge/partition.hpp"
#include "invforge/scalar.hpp"

namespace invforge {

// Conjugacy class of S_d: cycle type nu and centralizer order z_nu.
struct CycleType {
  Partition nu;
  Integer z;

  explicit CycleType(Partition cycle_type) : nu(std::move(cycle_type)), z(centralizer_order(nu)) {}

  unsigned degree() const { return nu.size(); }

  // fix(sigma^r) = sum over i | r of i * m_i(nu).
  unsigned fixed_points_of_power(unsigned r) const {
    unsigned total = 0;
    for (unsigned i = 1; i <= r; ++i) {
      if (r % i == 0) total += i * nu.multiplicity(i);
    }
    return total;
  }
};

inline std::vector<CycleType> cycle_types(unsigned d) {
  std::vector<CycleType> out;
  for (auto& nu : partitions(d, d)) out.emplace_back(std::move(nu));
  return out;
}

// Memoized character and branching tables. Lookups after insertion are
// read-only; insertions are serialized and idempotent.
class CharacterTables {
 public:
  // chi^lambda(nu) by Murnaghan-Nakayama rim-hook removal on beta-sets.
  long symmetric_character(const Partition& lambda, const Partition& nu) {
    if (lambda.size() != nu.size()) {
      throw SizeMismatch("character of " + lambda.to_string() + " at class " + nu.to_string());
    }
    return character_rec(lambda.parts(), nu.parts());
  }

  // Trace of a permutation matrix of cycle type nu on F^lambda_d, i.e. the
  // Schur function s_lambda at its eigenvalues, via
  // s_lambda = sum_rho chi^lambda(rho) p_rho / z_rho with p_r -> fix(sigma^r).
  Integer gl_character_on_perm(const Partition& lambda, const CycleType& nu) {
    if (lambda.length() > nu.degree()) {
      throw LengthExceedsDegree("length of " + lambda.to_string() + " exceeds d = " +
                                std::to_string(nu.degree()));
    }
    const Key key{lambda.parts(), nu.nu.parts()};
    {
      std::lock_guard lock(mutex_);
      if (auto it = gl_cache_.find(key); it != gl_cache_.end()) return it->second;
    }
    Rational total = 0;
    for (const auto& rho : partitions(lambda.size(), lambda.size())) {
      const long chi = symmetric_character(lambda, rho);
      if (chi == 0) continue;
      Integer power_sum = 1;
      for (unsigned r : rho.parts()) power_sum *= nu.fixed_points_of_power(r);
      Rational term(power_sum * chi, centralizer_order(rho));
      term.canonicalize();
      total += term;
    }
    if (!is_integral(total)) {
      throw NonIntegerResult("Schur value at permutation is not integral: " + to_string(total));
    }
    Integer value = total.get_num();
    std::lock_guard lock(mutex_);
    gl_cache_.emplace(key, value);
    return value;
  }

  // b^lambda_mu: multiplicity of Y^mu in the restriction of F^lambda_d to S_d.
  Integer branching_multiplicity(const Partition& lambda, const Partition& mu) {
    const unsigned d = mu.size();
    const Key key{lambda.parts(), mu.parts()};
    {
      std::lock_guard lock(mutex_);
      if (auto it = branching_cache_.find(key); it != branching_cache_.end()) return it->second;
    }
    Rational total = 0;
    for (const auto& nu : cycle_types(d)) {
      const long chi = symmetric_character(mu, nu.nu);
      if (chi == 0) continue;
      Rational term(gl_character_on_perm(lambda, nu) * chi, nu.z);
      term.canonicalize();
      total += term;
    }
    if (!is_integral(total) || total < 0) {
      throw NonIntegerResult("branching multiplicity b^" + lambda.to_string() + "_" + mu.to_string() +
                             " = " + to_string(total));
    }
    Integer value = total.get_num();
    std::lock_guard lock(mutex_);
    branching_cache_.emplace(key, value);
    return value;
  }

 private:
  using Key = std::pair<std::vector<unsigned>, std::vector<unsigned>>;

  long character_rec(const std::vector<unsigned>& lambda, const std::vector<unsigned>& nu) {
    if (nu.empty()) return 1;  // lambda is empty too
    const Key key{lambda, nu};
    {
      std::lock_guard lock(mutex_);
      if (auto it = character_cache_.find(key); it != character_cache_.end()) return it->second;
    }
    const unsigned r = nu.front();
    const std::vector<unsigned> rest(nu.begin() + 1, nu.end());
    // Beta-set: lambda_i + (l - 1 - i), strictly decreasing.
    const std::size_t l = lambda.size();
    std::vector<unsigned> beta(l);
    for (std::size_t i = 0; i < l; ++i) beta[i] = lambda[i] + static_cast<unsigned>(l - 1 - i);
    const std::set<unsigned> beads(beta.begin(), beta.end());

    long value = 0;
    for (std::size_t i = 0; i < l; ++i) {
      if (beta[i] < r || beads.count(beta[i] - r)) continue;
      const unsigned target = beta[i] - r;
      unsigned between = 0;
      for (unsigned b : beta) between += (b > target && b < beta[i]);
      std::vector<unsigned> moved = beta;
      moved[i] = target;
      std::sort(moved.rbegin(), moved.rend());
      std::vector<unsigned> smaller;
      for (std::size_t t = 0; t < l; ++t) {
        const unsigned part = moved[t] - static_cast<unsigned>(l - 1 - t);
        if (part) smaller.push_back(part);
      }
      const long sub = character_rec(smaller, rest);
      value += (between % 2 ? -sub : sub);
    }
    std::lock_guard lock(mutex_);
    character_cache_.emplace(key, value);
    return value;
  }

  std::mutex mutex_;
  std::map<Key, long> character_cache_;
  std::map<Key, Integer> gl_cache_;
  std::map<Key, Integer> branching_cache_;
};

// Process-wide tables used by the free functions below.
inline CharacterTables& character_tables() {
  static CharacterTables tables;
  return tables;
}

inline long symmetric_character(const Partition& lambda, const CycleType& nu) {
  return character_tables().symmetric_character(lambda, nu.nu);
}

inline Integer gl_character_on_perm(const Partition& lambda, const CycleType& nu) {
  return character_tables().gl_character_on_perm(lambda, nu);
}

inline Integer branching_multiplicity(const Partition& lambda, const Partition& mu, unsigned d) {
  if (mu.size() != d) throw SizeMismatch("mu = " + mu.to_string() + " is not a partition of " + std::to_string(d));
  return character_tables().branching_multiplicity(lambda, mu);
}

// dim of the (d, k) component of the invariant ring:
//   GL: sum over lambda in Par(k, min(d, n)), mu |- d of (b^lambda_mu)^2
//   O:  sum over lambda in Par(2k, min(d, n)) with even rows of b^lambda_(d)
//   Sp: sum over lambda in Par(2k, min(d, 2n)) with even columns of b^lambda_(d)
inline Integer dimension(const GroupKind& group, unsigned d, unsigned k) {
  const unsigned n = group.rank();
  const Partition trivial = d ? Partition{d} : Partition{};
  Integer total = 0;
  switch (group.family()) {
    case Family::GL:
      for (const auto& lambda : partitions(k, std::min(d, n))) {
        for (const auto& mu : partitions(d, d)) {
          const Integer b = branching_multiplicity(lambda, mu, d);
          total += b * b;
        }
      }
      break;
    case Family::O:
      for (const auto& lambda : partitions(2 * k, std::min(d, n), Parity::even, Parity::any)) {
        total += branching_multiplicity(lambda, trivial, d);
      }
      break;
    case Family::Sp:
      for (const auto& lambda : partitions(2 * k, std::min(d, 2 * n), Parity::any, Parity::even)) {
        total += branching_multiplicity(lambda, trivial, d);
      }
      break;
  }
  return total;
}

namespace detail {

// Multisets of d pairs (a, b) with sum a = sum b = k, generated as
// non-decreasing sequences of pair indices.
inline Integer count_pair_multisets(unsigned d, unsigned k) {
  const unsigned side = k + 1;
  auto rec = [&](auto&& self, unsigned slots, unsigned min_index, unsigned ra, unsigned rb) -> Integer {
    if (slots == 0) return (ra == 0 && rb == 0) ? 1 : 0;
    Integer count = 0;
    for (unsigned idx = min_index; idx < side * side; ++idx) {
      const unsigned a = idx / side;
      const unsigned b = idx % side;
      if (a > ra) break;
      if (b > rb) continue;
      count += self(self, slots - 1, idx, ra - a, rb - b);
    }
    return count;
  };
  return rec(rec, d, 0, k, k);
}

}  // namespace detail

// Degree-sequence counts at rank one: GL(1) counts multisets of d
// (in-degree, out-degree) pairs with both sums k; O(1) counts partitions of 2k
// into at most d parts.
inline Integer closed_form_rank1(const GroupKind& group, unsigned d, unsigned k) {
  if (group.rank() != 1 || group.family() == Family::Sp) {
    throw WrongGroup("closed_form_rank1 needs GL(1) or O(1), got " + group.to_string());
  }
  if (group.family() == Family::GL) return detail::count_pair_multisets(d, k);
  return static_cast<unsigned long>(partitions(2 * k, d).size());
}

// table[d][k] = dimension(group, d, k) for 0 <= d <= d_max, 0 <= k <= k_max.
inline std::vector<std::vector<Integer>> hilbert_series(const GroupKind& group, unsigned d_max, unsigned k_max) {
  std::vector<std::vector<Integer>> table(d_max + 1, std::vector<Integer>(k_max + 1));
  for (unsigned d = 0; d <= d_max; ++d) {
    for (unsigned k = 0; k <= k_max; ++k) table[d][k] = dimension(group, d, k);
  }
  return table;
}

}  // namespace invforge
