#pragma once

#include <algorithm>
#include <cstdint>
#include <atomic>
#include <exception>
#include <optional>
#include <numeric>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/graphs.hpp"
#include "invforge/group.hpp"
#include "invforge/linalg.hpp"
#include "invforge/psi.hpp"
#include "invforge/repth.hpp"
#include "invforge/umbral.hpp"

namespace invforge {

// Evaluates I at psi by substituting c_{alpha,beta}(psi) for every factor.
inline Rational evaluate(const Invariant& inv, const PsiElement& psi) {
  if (!(inv.group == psi.group())) {
    throw GroupMismatch("invariant for " + inv.group.to_string() + " evaluated on element of " +
                        psi.group().to_string());
  }
  return evaluate<Rational>(inv.poly, [&](const CoeffVar& v) { return coefficient(psi, v.alpha, v.beta); },
                            [](const Integer& c) { return Rational(c); });
}

// A rational point of the group together with its exact inverse.
class GroupElement {
 public:
  GroupElement(GroupKind group, RationalMatrix matrix) : group_(group), matrix_(std::move(matrix)) {
    const std::size_t m = group_.dim_v();
    if (matrix_.rows() != m || matrix_.cols() != m) {
      throw DimensionMismatch("group element for " + group_.to_string() + " must be " + std::to_string(m) +
                              "x" + std::to_string(m));
    }
    bool invertible = false;
    inverse_ = matrix_.inverse(&invertible);
    if (!invertible) throw WrongGroup("matrix is singular");
    switch (group_.family()) {
      case Family::GL:
        break;
      case Family::O:
        if (!(matrix_.transpose() * matrix_ == RationalMatrix::identity(m))) {
          throw WrongGroup("matrix is not orthogonal: " + matrix_.to_string());
        }
        break;
      case Family::Sp: {
        const RationalMatrix j = RationalMatrix::symplectic_form(group_.rank());
        if (!(matrix_.transpose() * j * matrix_ == j)) {
          throw WrongGroup("matrix is not symplectic: " + matrix_.to_string());
        }
        break;
      }
    }
  }

  const GroupKind& group() const { return group_; }
  const RationalMatrix& matrix() const { return matrix_; }
  const RationalMatrix& inverse() const { return inverse_; }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    if (!(a.group_ == b.group_)) throw GroupMismatch("product of elements of different groups");
    return GroupElement(a.group_, a.matrix_ * b.matrix_);
  }

 private:
  GroupKind group_;
  RationalMatrix matrix_;
  RationalMatrix inverse_;
};

// (g . psi)(v) = psi(g^{-1} v): x_i -> sum_j (g^{-1})_{ij} x_j, and for GL the
// derivations transform through g itself, d_j -> sum_i g_{ij} d_i.
inline PsiElement group_action(const GroupElement& g, const PsiElement& psi) {
  if (!(g.group() == psi.group())) {
    throw DimensionMismatch("group element of " + g.group().to_string() + " acting on element of " +
                            psi.group().to_string());
  }
  const unsigned m = g.group().dim_v();
  std::map<PsiVar, PsiPoly> image;
  for (unsigned i = 1; i <= m; ++i) {
    PsiPoly xi;
    for (unsigned j = 1; j <= m; ++j) {
      xi += PsiPoly::term(Monomial<PsiVar>::variable({PsiVar::Kind::X, j}), g.inverse()(i - 1, j - 1));
    }
    image.emplace(PsiVar{PsiVar::Kind::X, i}, std::move(xi));
    if (g.group().family() == Family::GL) {
      PsiPoly dj;
      for (unsigned r = 1; r <= m; ++r) {
        dj += PsiPoly::term(Monomial<PsiVar>::variable({PsiVar::Kind::D, r}), g.matrix()(r - 1, i - 1));
      }
      image.emplace(PsiVar{PsiVar::Kind::D, i}, std::move(dj));
    }
  }
  PsiPoly out = evaluate<PsiPoly>(psi.poly(), [&](const PsiVar& v) { return image.at(v); },
                                  [](const Rational& c) { return PsiPoly(c); });
  return PsiElement(psi.group(), std::move(out));
}

namespace detail {

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline RationalMatrix signed_permutation(std::mt19937_64& rng, std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  RationalMatrix out(m, m);
  std::bernoulli_distribution flip(0.5);
  for (std::size_t i = 0; i < m; ++i) out(i, p[i]) = flip(rng) ? -1 : 1;
  return out;
}

// (I - a)(I + a)^{-1}; fails when I + a is singular.
inline bool cayley(const RationalMatrix& a, RationalMatrix& out) {
  const RationalMatrix id = RationalMatrix::identity(a.rows());
  bool ok = false;
  RationalMatrix inv = (id + a).inverse(&ok);
  if (!ok) return false;
  out = (id - a) * inv;
  return true;
}

}  // namespace detail

// Seeded rational group point; seed 0 gives the identity.
//   GL: elementary integer row operations, times a diagonal rational scaling
//   O:  Cayley transform of a skew matrix, sometimes times a signed permutation
//   Sp: Cayley transform of a Hamiltonian matrix -J S (S symmetric), sometimes times J
inline GroupElement random_group_element(const GroupKind& group, std::uint64_t seed) {
  const std::size_t m = group.dim_v();
  if (seed == 0) return GroupElement(group, RationalMatrix::identity(m));
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  switch (group.family()) {
    case Family::GL: {
      RationalMatrix g = RationalMatrix::identity(m);
      std::uniform_int_distribution<std::size_t> pick(0, m - 1);
      std::uniform_int_distribution<int> mult(-2, 2);
      for (std::size_t step = 0; m > 1 && step < 2 * m + 2; ++step) {
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        if (i == j) j = (j + 1) % m;
        const int c = mult(rng);
        for (std::size_t col = 0; col < m; ++col) g(i, col) += c * g(j, col);
      }
      static const int scales[][2] = {{1, 1}, {2, 1}, {-1, 2}, {3, 1}, {-2, 3}, {-1, 1}};
      std::uniform_int_distribution<std::size_t> scale(0, std::size(scales) - 1);
      RationalMatrix diag = RationalMatrix::identity(m);
      for (std::size_t i = 0; i < m; ++i) {
        const auto& s = scales[scale(rng)];
        diag(i, i) = Rational(s[0], s[1]);
      }
      return GroupElement(group, g * diag);
    }
    case Family::O:
    case Family::Sp: {
      for (int attempt = 0; attempt < 64; ++attempt) {
        RationalMatrix a(m, m);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = i; j < m; ++j) {
            if (group.family() == Family::O) {
              if (i == j) continue;
              const Rational q = detail::small_rational(rng);
              a(i, j) = q;
              a(j, i) = -q;
            } else {
              const Rational q = detail::small_rational(rng);
              a(i, j) = q;
              a(j, i) = q;
            }
          }
        }
        if (group.family() == Family::Sp) {
          RationalMatrix j = RationalMatrix::symplectic_form(group.rank());
          a = (RationalMatrix(m, m) - j) * a;
        }
        RationalMatrix g;
        if (!detail::cayley(a, g)) continue;
        if (coin(rng)) {
          g = g * (group.family() == Family::O ? detail::signed_permutation(rng, m)
                                               : RationalMatrix::symplectic_form(group.rank()));
        }
        return GroupElement(group, std::move(g));
      }
      throw SingularCayley("could not draw a nonsingular Cayley transform");
    }
  }
  throw WrongGroup("unknown group family");
}

// I(g . psi) == I(psi), exactly.
inline bool invariance_check(const Invariant& inv, const PsiElement& psi, const GroupElement& g) {
  return evaluate(inv, group_action(g, psi)) == evaluate(inv, psi);
}

// Rank over Q of the coefficient matrix (rows: invariants, columns: c-monomials).
inline std::size_t span_rank(const std::vector<Invariant>& invariants) {
  if (invariants.empty()) return 0;
  const Invariant& first = invariants.front();
  std::map<Monomial<CoeffVar>, std::size_t, GradedLexOrder<CoeffVar>> columns;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> rows;
  rows.reserve(invariants.size());
  for (const auto& inv : invariants) {
    if (!(inv.group == first.group) || inv.degree != first.degree || inv.weight != first.weight) {
      throw MixedComponents("span_rank needs invariants from a single bigraded component");
    }
    std::vector<std::pair<std::size_t, Integer>> row;
    for (const auto& [mono, coeff] : inv.poly) {
      auto it = columns.try_emplace(mono, columns.size()).first;
      row.emplace_back(it->second, coeff);
    }
    rows.push_back(std::move(row));
  }
  return sparse_rank(rows, columns.size());
}

inline std::size_t span_rank(const std::vector<SpanningElement>& elements) {
  std::vector<Invariant> invariants;
  invariants.reserve(elements.size());
  for (const auto& e : elements) invariants.push_back(e.invariant);
  return span_rank(invariants);
}

// n >= min(d, k) for GL and O; n >= min(floor(d/2), floor(k/2)) for Sp.
inline bool stable_range(const GroupKind& group, unsigned d, unsigned k) {
  const unsigned n = group.rank();
  if (group.family() == Family::Sp) return n >= std::min(d / 2, k / 2);
  return n >= std::min(d, k);
}

struct DimensionReport {
  GroupKind group;
  unsigned d;
  unsigned k;
  std::size_t graph_count;
  std::size_t rank;
  Integer dimension;
  bool stable;

  // rank agrees with the branching formula, and with the graph count in the
  // stable range.
  bool consistent() const {
    if (!(Integer(static_cast<unsigned long>(rank)) == dimension)) return false;
    return !stable || Integer(static_cast<unsigned long>(graph_count)) == dimension;
  }

  std::string to_string() const {
    return group.to_string() + " d=" + std::to_string(d) + " k=" + std::to_string(k) +
           " graphs=" + std::to_string(graph_count) + " rank=" + std::to_string(rank) +
           " dim=" + dimension.get_str() + (stable ? " stable" : " unstable") +
           (consistent() ? " ok" : " MISMATCH");
  }
};

inline DimensionReport check_dimension(const GroupKind& group, unsigned d, unsigned k, unsigned jobs = 1) {
  const auto elements = spanning_set(group, d, k, jobs);
  return DimensionReport{group, d, k, elements.size(), span_rank(elements), dimension(group, d, k),
                         stable_range(group, d, k)};
}

// As check_dimension, but throws VerificationFailure on any disagreement.
inline DimensionReport verify_dimension(const GroupKind& group, unsigned d, unsigned k, unsigned jobs = 1) {
  DimensionReport report = check_dimension(group, d, k, jobs);
  if (!report.consistent()) throw VerificationFailure(group.to_string(), d, k, report.to_string());
  return report;
}

// Runs check_dimension over every listed triple on a bounded pool of workers.
// Reports come back in input order.
struct SweepItem {
  GroupKind group;
  unsigned d;
  unsigned k;
};

inline std::vector<DimensionReport> verification_sweep(const std::vector<SweepItem>& items, unsigned jobs = 1) {
  std::vector<std::optional<DimensionReport>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(std::max(1u, jobs));
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = next++; i < items.size(); i = next++) {
        slots[i] = check_dimension(items[i].group, items[i].d, items[i].k);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<DimensionReport> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace invforge
