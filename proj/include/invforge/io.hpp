#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "invforge/errors.hpp"
#include "invforge/graphs.hpp"
#include "invforge/group.hpp"
#include "invforge/umbral.hpp"

namespace invforge {

using nlohmann::json;

// {"flavor": ..., "d": ..., "edges": [[i, j, m], ...]}, 1-based vertices.
inline json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& [i, j] : cell_positions(g.flavor(), g.vertex_count())) {
    if (const unsigned m = g.at(i, j)) edges.push_back({i + 1, j + 1, m});
  }
  return {{"flavor", to_string(g.flavor())}, {"d", g.vertex_count()}, {"edges", edges}};
}

inline Multigraph graph_from_json(const json& j) {
  try {
    const Flavor flavor = parse_flavor(j.at("flavor").get<std::string>());
    const unsigned d = j.at("d").get<unsigned>();
    Multigraph g(flavor, d);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) throw ParseError("edge must be [i, j] or [i, j, m]");
      const unsigned a = e[0].get<unsigned>();
      const unsigned b = e[1].get<unsigned>();
      const unsigned m = e.size() == 3 ? e[2].get<unsigned>() : 1;
      if (a == 0 || b == 0 || a > d || b > d) throw ParseError("edge endpoint out of range 1..d");
      if (flavor != Flavor::DirectedLoops && a > b) throw ParseError("undirected edges must satisfy i <= j");
      g.add_edge(a - 1, b - 1, m);
    }
    return g;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("graph json: ") + ex.what());
  } catch (const WrongFlavor& ex) {
    throw ParseError(std::string("graph json: ") + ex.what());
  }
}

// "1->2, 2->3:2, 3->3" (directed) or "1--2:2, 2--3" (undirected).
inline std::string graph_to_text(const Multigraph& g) {
  const char* arrow = g.flavor() == Flavor::DirectedLoops ? "->" : "--";
  std::string out;
  for (const auto& [i, j] : cell_positions(g.flavor(), g.vertex_count())) {
    const unsigned m = g.at(i, j);
    if (!m) continue;
    if (!out.empty()) out += ", ";
    out += std::to_string(i + 1) + arrow + std::to_string(j + 1);
    if (m > 1) out += ":" + std::to_string(m);
  }
  return out;
}

// Parses the compact edge list. The vertex count is the largest endpoint, or
// `min_vertices` if larger. Arrow style must agree with `flavor`.
inline Multigraph graph_from_text(std::string_view text, Flavor flavor, unsigned min_vertices = 0) {
  struct Edge {
    unsigned a, b, m;
  };
  std::vector<Edge> edges;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto natural = [&]() -> unsigned {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("graph text: expected a vertex number at offset " + std::to_string(start));
    return static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
  };
  skip();
  unsigned d = min_vertices;
  while (pos < text.size()) {
    const unsigned a = natural();
    skip();
    const std::string_view arrow = text.substr(pos, 2);
    if (arrow != "->" && arrow != "--") throw ParseError("graph text: expected '->' or '--'");
    const bool directed = arrow == "->";
    if (directed != (flavor == Flavor::DirectedLoops)) {
      throw ParseError("graph text: arrow '" + std::string(arrow) + "' does not match flavor " + to_string(flavor));
    }
    pos += 2;
    const unsigned b = natural();
    skip();
    unsigned m = 1;
    if (pos < text.size() && text[pos] == ':') {
      ++pos;
      m = natural();
      skip();
    }
    if (a == 0 || b == 0) throw ParseError("graph text: vertices are 1-based");
    edges.push_back({a, b, m});
    d = std::max({d, a, b});
    if (pos < text.size()) {
      if (text[pos] != ',') throw ParseError("graph text: expected ','");
      ++pos;
      skip();
    }
  }
  Multigraph g(flavor, d);
  try {
    for (const auto& e : edges) g.add_edge(e.a - 1, e.b - 1, e.m);
  } catch (const WrongFlavor& ex) {
    throw ParseError(std::string("graph text: ") + ex.what());
  }
  return g;
}

namespace detail {

inline json integer_to_json(const Integer& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError("expected an integer coefficient");
}

}  // namespace detail

// {"group", "n", "d", "k", "terms": [{"coeff", "factors": [{"alpha", "beta"?}, ...]}]};
// repeated factors are listed once per multiplicity.
inline json invariant_to_json(const Invariant& inv) {
  json terms = json::array();
  for (const auto& [mono, coeff] : inv.poly) {
    json factors = json::array();
    for (const auto& [var, exponent] : mono.factors()) {
      json f = {{"alpha", var.alpha.entries()}};
      if (inv.group.family() == Family::GL) f["beta"] = var.beta.entries();
      for (unsigned e = 0; e < exponent; ++e) factors.push_back(f);
    }
    terms.push_back({{"coeff", detail::integer_to_json(coeff)}, {"factors", factors}});
  }
  return {{"group", to_string(inv.group.family())},
          {"n", inv.group.rank()},
          {"d", inv.degree},
          {"k", inv.weight},
          {"terms", terms}};
}

inline Invariant invariant_from_json(const json& j) {
  try {
    const GroupKind group(parse_family(j.at("group").get<std::string>()), j.at("n").get<unsigned>());
    const unsigned d = j.at("d").get<unsigned>();
    const unsigned k = j.at("k").get<unsigned>();
    const std::size_t m = group.dim_v();
    const bool dual = group.family() == Family::GL;
    InvariantPoly poly;
    for (const auto& t : j.at("terms")) {
      std::vector<Monomial<CoeffVar>::Factor> factors;
      for (const auto& f : t.at("factors")) {
        CoeffVar v{MultiIndex(f.at("alpha").get<std::vector<unsigned>>()),
                   dual ? MultiIndex(f.at("beta").get<std::vector<unsigned>>()) : MultiIndex{}};
        if (v.alpha.size() != m || v.beta.size() != (dual ? m : 0)) {
          throw ParseError("invariant json: multi-index length does not match " + group.to_string());
        }
        factors.emplace_back(std::move(v), 1);
      }
      poly.add_term(Monomial<CoeffVar>(std::move(factors)), detail::integer_from_json(t.at("coeff")));
    }
    return Invariant{group, d, k, std::move(poly)};
  } catch (const json::exception& ex) {
    throw ParseError(std::string("invariant json: ") + ex.what());
  } catch (const WrongGroup& ex) {
    throw ParseError(std::string("invariant json: ") + ex.what());
  }
}

}  // namespace invforge
