#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/graphs.hpp"
#include "invforge/group.hpp"
#include "invforge/multi_index.hpp"
#include "invforge/scalar.hpp"
#include "invforge/sparse_poly.hpp"

namespace invforge {

// Variable x_{row,col} (or y_{row,col} for the dual copy under GL) of the
// symbolic ring; rows index coordinates of V, columns index graph vertices.
// Both are 1-based.
struct SymVar {
  enum class Kind : unsigned char { X, Y };
  Kind kind;
  unsigned row;
  unsigned col;

  auto operator<=>(const SymVar&) const = default;

  std::string to_string() const {
    return std::string(kind == Kind::X ? "x" : "y") + "[" + std::to_string(row) + "," +
           std::to_string(col) + "]";
  }
};

using SymbolicPoly = SparsePoly<SymVar, Integer>;

// Coefficient functional c_{alpha,beta} (GL) or c_alpha (O, Sp; beta empty).
// Ordered by total norm, then lexicographically.
struct CoeffVar {
  MultiIndex alpha;
  MultiIndex beta;

  unsigned norm() const { return alpha.norm() + beta.norm(); }

  friend std::strong_ordering operator<=>(const CoeffVar& a, const CoeffVar& b) {
    if (auto c = a.norm() <=> b.norm(); c != 0) return c;
    if (auto c = a.alpha <=> b.alpha; c != 0) return c;
    return a.beta <=> b.beta;
  }
  friend bool operator==(const CoeffVar&, const CoeffVar&) = default;

  std::string to_string() const {
    if (beta.size() == 0) return "c[" + alpha.to_string() + "]";
    return "c[" + alpha.to_string() + "," + beta.to_string() + "]";
  }
};

using InvariantPoly = SparsePoly<CoeffVar, Integer>;

// Element of the (d, k) bigraded component, in the unscaled c-basis.
struct Invariant {
  GroupKind group;
  unsigned degree;
  unsigned weight;
  InvariantPoly poly;

  bool is_zero() const { return poly.is_zero(); }

  std::string to_string() const {
    return poly.to_string([](const CoeffVar& v) { return v.to_string(); },
                          [](const Integer& c) { return c.get_str(); });
  }

  friend bool operator==(const Invariant& a, const Invariant& b) {
    return a.group == b.group && a.degree == b.degree && a.weight == b.weight && a.poly == b.poly;
  }
};

// The fundamental quadratic r_ij (1-based vertices):
//   GL: sum_l y_{l i} x_{l j}
//   O:  sum_l x_{l i} x_{l j},                         i <= j
//   Sp: sum_l x_{l i} x_{l+n, j} - x_{l+n, i} x_{l j},  i < j
inline SymbolicPoly r_quadratic(const GroupKind& group, unsigned i, unsigned j) {
  if (i == 0 || j == 0) throw IndexOrder("vertex indices are 1-based");
  const unsigned n = group.rank();
  auto x = [](unsigned row, unsigned col) { return SymbolicPoly::variable({SymVar::Kind::X, row, col}); };
  auto y = [](unsigned row, unsigned col) { return SymbolicPoly::variable({SymVar::Kind::Y, row, col}); };
  SymbolicPoly r;
  switch (group.family()) {
    case Family::GL:
      for (unsigned l = 1; l <= n; ++l) r += y(l, i) * x(l, j);
      break;
    case Family::O:
      if (i > j) throw IndexOrder("O quadratics require i <= j");
      for (unsigned l = 1; l <= n; ++l) r += x(l, i) * x(l, j);
      break;
    case Family::Sp:
      if (i >= j) throw IndexOrder("Sp quadratics require i < j");
      for (unsigned l = 1; l <= n; ++l) {
        r += x(l, i) * x(l + n, j);
        r -= x(l + n, i) * x(l, j);
      }
      break;
  }
  return r;
}

namespace detail {

inline void require_flavor(const GroupKind& group, const Multigraph& graph) {
  if (graph.flavor() != group.flavor()) {
    throw WrongFlavor(group.to_string() + " needs " + to_string(group.flavor()) + " graphs, got " +
                      to_string(graph.flavor()));
  }
}

}  // namespace detail

// s(Gamma) = prod over stored cells of r_ij^{A_ij}, expanded and collected
// after every factor.
inline SymbolicPoly symbolic_product(const GroupKind& group, const Multigraph& graph) {
  detail::require_flavor(group, graph);
  SymbolicPoly product(Integer(1));
  for (const auto& [i, j] : cell_positions(graph.flavor(), graph.vertex_count())) {
    const unsigned m = graph.at(i, j);
    if (m == 0) continue;
    const SymbolicPoly r = r_quadratic(group, i + 1, j + 1);
    for (unsigned e = 0; e < m; ++e) product *= r;
  }
  return product;
}

// The umbral operator: each monomial prod x^{p_ij} y^{q_ij} goes to
// prod_j c-hat_{p_.j, q_.j} = prod_j (p_.j)! (q_.j)! c_{p_.j, q_.j}.
inline Invariant umbral_apply(const GroupKind& group, const SymbolicPoly& p, unsigned d) {
  const unsigned m = group.dim_v();
  const bool dual = group.family() == Family::GL;
  InvariantPoly out;
  unsigned weight = 0;
  bool weight_set = false;
  for (const auto& [mono, coeff] : p) {
    std::vector<std::vector<unsigned>> alpha(d, std::vector<unsigned>(m, 0));
    std::vector<std::vector<unsigned>> beta(d, std::vector<unsigned>(dual ? m : 0, 0));
    for (const auto& [var, exponent] : mono.factors()) {
      if (var.col == 0 || var.col > d || var.row == 0 || var.row > m) {
        throw std::invalid_argument("symbolic variable " + var.to_string() + " out of range");
      }
      if (var.kind == SymVar::Kind::Y) {
        if (!dual) throw std::invalid_argument("y variables only exist for GL");
        beta[var.col - 1][var.row - 1] += exponent;
      } else {
        alpha[var.col - 1][var.row - 1] += exponent;
      }
    }
    Integer scaled = coeff;
    std::vector<Monomial<CoeffVar>::Factor> factors;
    factors.reserve(d);
    for (unsigned j = 0; j < d; ++j) {
      CoeffVar v{MultiIndex(std::move(alpha[j])), MultiIndex(std::move(beta[j]))};
      scaled *= multi_index_factorial(v.alpha, v.beta);
      factors.emplace_back(std::move(v), 1);
    }
    if (!weight_set) {
      weight = mono.degree() / 2;
      weight_set = true;
    }
    out.add_term(Monomial<CoeffVar>(std::move(factors)), scaled);
  }
  return Invariant{group, d, weight, std::move(out)};
}

// phi(s(Gamma)), the invariant attached to a graph.
inline Invariant graph_invariant(const GroupKind& group, const Multigraph& graph) {
  Invariant inv = umbral_apply(group, symbolic_product(group, graph), graph.vertex_count());
  inv.weight = graph.edge_count();
  return inv;
}

struct SpanningElement {
  Multigraph graph;
  Invariant invariant;
};

// Graph invariants for every graph of the (d, k) class, in enumeration order.
// `jobs` > 1 computes them on that many threads; the order is unaffected.
inline std::vector<SpanningElement> spanning_set(const GroupKind& group, unsigned d, unsigned k,
                                                 unsigned jobs = 1) {
  const auto graphs = enumerate_graphs(group, d, k);
  std::vector<SpanningElement> out;
  out.reserve(graphs.size());
  for (const auto& g : graphs) out.push_back({g, Invariant{group, d, k, {}}});
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(graphs.size())));
  if (jobs <= 1) {
    for (auto& e : out) e.invariant = graph_invariant(group, e.graph);
    return out;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < out.size(); i += jobs) {
          out[i].invariant = graph_invariant(group, out[i].graph);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace invforge
