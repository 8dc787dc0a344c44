#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "invforge/errors.hpp"
#include "invforge/group.hpp"
#include "invforge/scalar.hpp"

namespace invforge {

// perm[i] is the image of vertex i (0-based).
using Permutation = std::vector<unsigned>;

inline constexpr unsigned kDefaultMaxVertices = 8;

// Vertex bound for the brute-force canonicalizer; INVFORGE_MAX_D overrides.
inline unsigned max_vertices() {
  if (const char* env = std::getenv("INVFORGE_MAX_D")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return kDefaultMaxVertices;
}

inline std::vector<Permutation> all_permutations(unsigned d) {
  std::vector<Permutation> out;
  Permutation p(d);
  std::iota(p.begin(), p.end(), 0u);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool is_identity(const Permutation& p) {
  for (unsigned i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

// Positions (row, col) of the stored adjacency cells, in flattening order:
// full matrix (directed), upper triangle with diagonal (undirected-loops),
// strict upper triangle (loopless). Row-major.
inline std::vector<std::pair<unsigned, unsigned>> cell_positions(Flavor flavor, unsigned d) {
  std::vector<std::pair<unsigned, unsigned>> cells;
  for (unsigned i = 0; i < d; ++i) {
    for (unsigned j = 0; j < d; ++j) {
      if (flavor == Flavor::DirectedLoops || (flavor == Flavor::UndirectedLoops && i <= j) ||
          (flavor == Flavor::UndirectedLoopless && i < j)) {
        cells.emplace_back(i, j);
      }
    }
  }
  return cells;
}

// Vertex-labeled multigraph on d vertices. Undirected flavors store only the
// upper triangle; at() reads symmetrically.
class Multigraph {
 public:
  Multigraph(Flavor flavor, unsigned d) : flavor_(flavor), d_(d), adj_(std::size_t(d) * d, 0) {}

  static Multigraph from_cells(Flavor flavor, unsigned d, const std::vector<unsigned>& cells) {
    Multigraph g(flavor, d);
    const auto positions = cell_positions(flavor, d);
    if (positions.size() != cells.size()) {
      throw std::invalid_argument("cell vector has wrong length for flavor");
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      g.adj_[positions[c].first * d + positions[c].second] = cells[c];
    }
    return g;
  }

  // Builds from a full d x d matrix; undirected flavors read the upper triangle
  // and require symmetry.
  static Multigraph from_matrix(Flavor flavor, const std::vector<std::vector<unsigned>>& a) {
    const unsigned d = static_cast<unsigned>(a.size());
    Multigraph g(flavor, d);
    for (unsigned i = 0; i < d; ++i) {
      if (a[i].size() != d) throw std::invalid_argument("adjacency matrix must be square");
      for (unsigned j = 0; j < d; ++j) {
        if (flavor == Flavor::DirectedLoops) {
          g.adj_[i * d + j] = a[i][j];
        } else {
          if (a[i][j] != a[j][i]) throw std::invalid_argument("undirected adjacency must be symmetric");
          if (i <= j) g.add_edge(i, j, a[i][j]);
        }
      }
    }
    return g;
  }

  Flavor flavor() const { return flavor_; }
  unsigned vertex_count() const { return d_; }

  unsigned at(unsigned i, unsigned j) const {
    if (flavor_ != Flavor::DirectedLoops && i > j) std::swap(i, j);
    return adj_[std::size_t(i) * d_ + j];
  }

  // 0-based endpoints; for directed graphs the edge runs i -> j.
  void add_edge(unsigned i, unsigned j, unsigned multiplicity = 1) {
    if (i >= d_ || j >= d_) throw std::out_of_range("edge endpoint out of range");
    if (flavor_ == Flavor::UndirectedLoopless && i == j) {
      throw WrongFlavor("loops are not allowed in undirected-loopless graphs");
    }
    if (flavor_ != Flavor::DirectedLoops && i > j) std::swap(i, j);
    adj_[std::size_t(i) * d_ + j] += multiplicity;
  }

  std::vector<unsigned> cells() const {
    std::vector<unsigned> out;
    for (const auto& [i, j] : cell_positions(flavor_, d_)) out.push_back(adj_[i * d_ + j]);
    return out;
  }

  unsigned edge_count() const {
    unsigned k = 0;
    for (unsigned v : adj_) k += v;
    return k;
  }

  unsigned out_degree(unsigned i) const {
    unsigned s = 0;
    for (unsigned j = 0; j < d_; ++j) s += at(i, j);
    return s;
  }

  unsigned in_degree(unsigned j) const {
    unsigned s = 0;
    for (unsigned i = 0; i < d_; ++i) s += at(i, j);
    return s;
  }

  // Undirected degree; a loop counts twice.
  unsigned degree(unsigned i) const {
    unsigned s = 0;
    for (unsigned j = 0; j < d_; ++j) s += at(i, j);
    return s + at(i, i);
  }

  // sigma . Gamma: the edge {i, j} becomes {sigma(i), sigma(j)}.
  Multigraph permuted(const Permutation& sigma) const {
    if (sigma.size() != d_) throw std::invalid_argument("permutation size mismatch");
    Multigraph out(flavor_, d_);
    for (const auto& [i, j] : cell_positions(flavor_, d_)) {
      const unsigned m = adj_[i * d_ + j];
      if (m) out.add_edge(sigma[i], sigma[j], m);
    }
    return out;
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  Flavor flavor_;
  unsigned d_;
  std::vector<unsigned> adj_;
};

namespace detail {

inline void check_vertex_bound(unsigned d) {
  const unsigned bound = max_vertices();
  if (d > bound) throw VertexBoundExceeded(d, bound);
}

inline void require_loopless(const Multigraph& g) {
  if (g.flavor() != Flavor::UndirectedLoopless) {
    throw WrongFlavor("operation requires an undirected-loopless graph, got " + to_string(g.flavor()));
  }
}

// Compares the flattened cells of sigma^{-1} . g against g, cell by cell.
// Returns <0, 0, >0 like a three-way comparison; stops at the first difference.
inline int compare_relabeled(const Multigraph& g, const std::vector<std::pair<unsigned, unsigned>>& cells,
                             const Permutation& inverse) {
  for (const auto& [i, j] : cells) {
    const unsigned relabeled = g.at(inverse[i], inverse[j]);
    const unsigned original = g.at(i, j);
    if (relabeled != original) return relabeled < original ? -1 : 1;
  }
  return 0;
}

}  // namespace detail

// True iff g's flattened cells are lexicographically minimal in its orbit.
inline bool is_canonical(const Multigraph& g) {
  detail::check_vertex_bound(g.vertex_count());
  const auto cells = cell_positions(g.flavor(), g.vertex_count());
  Permutation p(g.vertex_count());
  std::iota(p.begin(), p.end(), 0u);
  while (std::next_permutation(p.begin(), p.end())) {
    if (detail::compare_relabeled(g, cells, p) < 0) return false;
  }
  return true;
}

// Representative with lexicographically minimal flattened cells over all
// simultaneous row/column permutations.
inline Multigraph canonical_form(const Multigraph& g) {
  detail::check_vertex_bound(g.vertex_count());
  Multigraph best = g;
  auto best_cells = g.cells();
  Permutation p(g.vertex_count());
  std::iota(p.begin(), p.end(), 0u);
  while (std::next_permutation(p.begin(), p.end())) {
    Multigraph candidate = g.permuted(p);
    auto cells = candidate.cells();
    if (cells < best_cells) {
      best_cells = std::move(cells);
      best = std::move(candidate);
    }
  }
  return best;
}

inline std::vector<Permutation> stabilizer(const Multigraph& g) {
  detail::check_vertex_bound(g.vertex_count());
  std::vector<Permutation> out;
  for (auto& sigma : all_permutations(g.vertex_count())) {
    if (g.permuted(sigma) == g) out.push_back(std::move(sigma));
  }
  return out;
}

// Number of edges {i < j} (with multiplicity) that sigma sends to
// sigma(i) > sigma(j).
inline unsigned inversion_count(const Multigraph& g, const Permutation& sigma) {
  detail::require_loopless(g);
  if (sigma.size() != g.vertex_count()) throw std::invalid_argument("permutation size mismatch");
  unsigned count = 0;
  for (unsigned i = 0; i < g.vertex_count(); ++i) {
    for (unsigned j = i + 1; j < g.vertex_count(); ++j) {
      if (sigma[i] > sigma[j]) count += g.at(i, j);
    }
  }
  return count;
}

// Every stabilizing permutation inverts an even number of edges.
inline bool sp_admissible(const Multigraph& g) {
  detail::require_loopless(g);
  for (const auto& sigma : stabilizer(g)) {
    if (inversion_count(g, sigma) % 2) return false;
  }
  return true;
}

// All canonical graphs of the given flavor with d vertices and k edges, in
// generation order (lexicographically decreasing first cell).
inline std::vector<Multigraph> enumerate_graphs(Flavor flavor, unsigned d, unsigned k) {
  std::vector<Multigraph> out;
  if (d == 0) {
    if (k == 0) out.emplace_back(flavor, 0);
    return out;
  }
  detail::check_vertex_bound(d);
  const auto positions = cell_positions(flavor, d);
  if (positions.empty()) {
    if (k == 0) out.emplace_back(flavor, d);
    return out;
  }
  std::vector<unsigned> cells(positions.size(), 0);
  // Cell-by-cell generation with running-sum pruning; the final cell takes
  // whatever remains.
  auto recurse = [&](auto&& self, std::size_t index, unsigned remaining) -> void {
    if (index + 1 == cells.size()) {
      cells[index] = remaining;
      Multigraph g = Multigraph::from_cells(flavor, d, cells);
      if (is_canonical(g)) out.push_back(std::move(g));
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      cells[index] = v;
      self(self, index + 1, remaining - v);
    }
    cells[index] = 0;
  };
  recurse(recurse, 0, k);
  return out;
}

// The class of graphs attached to `group`; for Sp only admissible graphs.
inline std::vector<Multigraph> enumerate_graphs(const GroupKind& group, unsigned d, unsigned k) {
  auto graphs = enumerate_graphs(group.flavor(), d, k);
  if (group.family() != Family::Sp) return graphs;
  std::vector<Multigraph> kept;
  for (auto& g : graphs) {
    if (sp_admissible(g)) kept.push_back(std::move(g));
  }
  return kept;
}

// Orbit count by Burnside's lemma, independent of enumerate_graphs. For each
// sigma, arrays fixed by sigma are constant on sigma's cell orbits, so they are
// counted by the t^k coefficient of prod_orbits 1/(1 - s t^{|orbit|}), where
// s = -1 when `sp_weighted` and sigma inverts an odd number of cells on the
// orbit. With the sign weighting the average counts admissible orbits.
inline Integer count_graphs_burnside(Flavor flavor, unsigned d, unsigned k, bool sp_weighted = false) {
  if (d == 0) return k == 0 ? 1 : 0;
  const auto positions = cell_positions(flavor, d);
  std::vector<std::vector<int>> cell_index(d, std::vector<int>(d, -1));
  for (std::size_t c = 0; c < positions.size(); ++c) {
    cell_index[positions[c].first][positions[c].second] = static_cast<int>(c);
  }
  auto image_cell = [&](const Permutation& sigma, std::size_t c) {
    unsigned i = sigma[positions[c].first];
    unsigned j = sigma[positions[c].second];
    if (flavor != Flavor::DirectedLoops && i > j) std::swap(i, j);
    return static_cast<std::size_t>(cell_index[i][j]);
  };

  Integer total = 0;
  for (const auto& sigma : all_permutations(d)) {
    std::vector<Integer> series(k + 1, 0);
    series[0] = 1;
    std::vector<bool> seen(positions.size(), false);
    for (std::size_t start = 0; start < positions.size(); ++start) {
      if (seen[start]) continue;
      unsigned length = 0;
      unsigned inverted = 0;
      for (std::size_t c = start; !seen[c]; c = image_cell(sigma, c)) {
        seen[c] = true;
        ++length;
        if (sigma[positions[c].first] > sigma[positions[c].second]) ++inverted;
      }
      const int sign = (sp_weighted && inverted % 2) ? -1 : 1;
      // Multiply by 1 / (1 - sign t^length).
      for (unsigned e = length; e <= k; ++e) {
        if (sign > 0) {
          series[e] += series[e - length];
        } else {
          series[e] -= series[e - length];
        }
      }
    }
    total += series[k];
  }
  const Integer order = factorial(d);
  if (total % order != 0) throw NonIntegerResult("Burnside average is not an integer");
  return total / order;
}

inline Integer count_graphs_burnside(const GroupKind& group, unsigned d, unsigned k) {
  return count_graphs_burnside(group.flavor(), d, k, group.family() == Family::Sp);
}

}  // namespace invforge
