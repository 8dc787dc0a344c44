#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "invforge/invforge.hpp"

namespace {

using namespace invforge;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;

struct GroupFlags {
  std::string family;
  unsigned n = 1;

  GroupKind kind() const { return GroupKind(parse_family(family), n); }
};

void add_group_flags(CLI::App* cmd, GroupFlags& g) {
  cmd->add_option("--group", g.family, "gl | o | sp")->required()->check(CLI::IsMember({"gl", "o", "sp"}));
  cmd->add_option("--n", g.n, "rank parameter (Sp(n) acts on C^2n)")->required()->check(CLI::PositiveNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --graph accepts a JSON file, an inline JSON object, or the compact edge list.
Multigraph load_graph(const std::string& spec, const GroupKind& group, unsigned min_vertices) {
  std::string text = spec;
  if (std::filesystem::is_regular_file(spec)) text = read_file(spec);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& ex) {
      throw ParseError(std::string("graph json: ") + ex.what());
    }
    Multigraph g = graph_from_json(j);
    if (min_vertices > g.vertex_count()) {
      throw ParseError("--d is larger than the vertex count given in the graph file");
    }
    return g;
  }
  return graph_from_text(text, group.flavor(), min_vertices);
}

std::string graph_line(const Multigraph& g) {
  const std::string edges = graph_to_text(g);
  return "d=" + std::to_string(g.vertex_count()) + " k=" + std::to_string(g.edge_count()) + ": " +
         (edges.empty() ? "(no edges)" : edges);
}

json report_to_json(const DimensionReport& r) {
  return {{"group", to_string(r.group.family())},
          {"n", r.group.rank()},
          {"d", r.d},
          {"k", r.k},
          {"graphs", r.graph_count},
          {"rank", r.rank},
          {"dimension", detail::integer_to_json(r.dimension)},
          {"stable", r.stable},
          {"consistent", r.consistent()}};
}

void print_hilbert(const std::vector<std::vector<Integer>>& table) {
  std::size_t width = 1;
  for (const auto& row : table) {
    for (const auto& v : row) width = std::max(width, v.get_str().size());
  }
  for (const auto& row : table) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      const std::string s = row[k].get_str();
      if (k) std::cout << ' ';
      std::cout << std::string(width - s.size(), ' ') << s;
    }
    std::cout << '\n';
  }
}

// sum dim * q^d t^k, lowest degrees first.
std::string hilbert_polynomial(const std::vector<std::vector<Integer>>& table) {
  std::string out;
  for (std::size_t d = 0; d < table.size(); ++d) {
    for (std::size_t k = 0; k < table[d].size(); ++k) {
      const Integer& c = table[d][k];
      if (c == 0) continue;
      std::string mono;
      if (d) mono += d == 1 ? "q" : "q^" + std::to_string(d);
      if (k) mono += (mono.empty() ? "" : "*") + (k == 1 ? std::string("t") : "t^" + std::to_string(k));
      std::string term = c.get_str();
      if (!mono.empty()) term = c == 1 ? mono : term + "*" + mono;
      out += (out.empty() ? "" : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of classical groups from multigraphs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  GroupFlags eg;
  unsigned ed = 0, ek = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "list the canonical graphs for (group, d, k)");
  add_group_flags(enumerate_cmd, eg);
  enumerate_cmd->add_option("--d", ed, "vertices")->required();
  enumerate_cmd->add_option("--k", ek, "edges")->required();

  GroupFlags ig;
  std::string graph_spec;
  unsigned id = 0;
  auto* invariant_cmd = app.add_subcommand("invariant", "print the invariant of a graph");
  add_group_flags(invariant_cmd, ig);
  invariant_cmd->add_option("--graph", graph_spec, "graph JSON file, inline JSON, or edge list like '1->2, 2->2'")
      ->required();
  invariant_cmd->add_option("--d", id, "vertex count for edge lists (default: largest endpoint)");

  GroupFlags dg;
  unsigned dd = 0, dk = 0;
  auto* dimension_cmd = app.add_subcommand("dimension", "dimension of the (d, k) component");
  add_group_flags(dimension_cmd, dg);
  dimension_cmd->add_option("--d", dd, "degree")->required();
  dimension_cmd->add_option("--k", dk, "weight")->required();

  GroupFlags hg;
  unsigned dmax = 0, kmax = 0;
  bool series = false;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "table of dimensions for d <= dmax, k <= kmax");
  add_group_flags(hilbert_cmd, hg);
  hilbert_cmd->add_option("--dmax", dmax)->required();
  hilbert_cmd->add_option("--kmax", kmax)->required();
  hilbert_cmd->add_flag("--series", series, "print as a polynomial in q (degree) and t (weight)");

  std::string invariant_path, psi_text;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "evaluate an invariant on an element of Psi");
  evaluate_cmd->add_option("--invariant", invariant_path, "invariant JSON file, as written by 'invariant --json'")
      ->required();
  evaluate_cmd->add_option("--psi", psi_text, "polynomial in x1.. and d1.., e.g. '(x1^2 + 1) d1 + 1/4 x2 d2'")
      ->required();

  unsigned nmax = 3, vdmax = 4, vkmax = 4;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* verify_cmd = app.add_subcommand("verify", "check rank = dimension (= graph count when stable)");
  verify_cmd->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--dmax", vdmax);
  verify_cmd->add_option("--kmax", vkmax);
  verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*enumerate_cmd) {
      const GroupKind group = eg.kind();
      const auto graphs = enumerate_graphs(group, ed, ek);
      if (as_json) {
        json out = json::array();
        for (const auto& g : graphs) out.push_back(graph_to_json(g));
        std::cout << out.dump(2) << '\n';
      } else {
        for (const auto& g : graphs) std::cout << graph_line(g) << '\n';
      }
    } else if (*invariant_cmd) {
      const GroupKind group = ig.kind();
      const Multigraph g = load_graph(graph_spec, group, id);
      if (g.flavor() != group.flavor()) {
        throw WrongFlavor(to_string(g.flavor()) + " graph given for " + group.to_string() + ", expected " +
                          to_string(group.flavor()));
      }
      const Invariant inv = graph_invariant(group, g);
      if (as_json) {
        std::cout << invariant_to_json(inv).dump(2) << '\n';
      } else {
        std::cout << (inv.is_zero() ? "0" : inv.to_string()) << '\n';
      }
    } else if (*dimension_cmd) {
      const GroupKind group = dg.kind();
      const Integer dim = dimension(group, dd, dk);
      if (as_json) {
        std::cout << json{{"group", dg.family}, {"n", dg.n}, {"d", dd}, {"k", dk},
                          {"dimension", detail::integer_to_json(dim)}}
                         .dump()
                  << '\n';
      } else {
        std::cout << dim.get_str() << '\n';
      }
    } else if (*hilbert_cmd) {
      const GroupKind group = hg.kind();
      const auto table = hilbert_series(group, dmax, kmax);
      if (as_json) {
        json rows = json::array();
        for (const auto& row : table) {
          json r = json::array();
          for (const auto& v : row) r.push_back(detail::integer_to_json(v));
          rows.push_back(r);
        }
        std::cout << json{{"group", hg.family}, {"n", hg.n}, {"dmax", dmax}, {"kmax", kmax}, {"table", rows}}.dump()
                  << '\n';
      } else if (series) {
        std::cout << hilbert_polynomial(table) << '\n';
      } else {
        print_hilbert(table);
      }
    } else if (*evaluate_cmd) {
      json j;
      try {
        j = json::parse(read_file(invariant_path));
      } catch (const json::exception& ex) {
        throw ParseError(std::string("invariant json: ") + ex.what());
      }
      const Invariant inv = invariant_from_json(j);
      const PsiElement psi = parse_psi(inv.group, psi_text);
      const Rational value = evaluate(inv, psi);
      if (as_json) {
        std::cout << json{{"value", value.get_str()}}.dump() << '\n';
      } else {
        std::cout << value.get_str() << '\n';
      }
    } else if (*verify_cmd) {
      std::vector<SweepItem> items;
      for (unsigned n = 1; n <= nmax; ++n) {
        for (unsigned d = 0; d <= vdmax; ++d) {
          for (unsigned k = 0; k <= vkmax; ++k) {
            items.push_back({GroupKind::gl(n), d, k});
            items.push_back({GroupKind::o(n), d, k});
            items.push_back({GroupKind::sp(n), d, k});
          }
        }
      }
      const auto reports = verification_sweep(items, jobs);
      std::size_t bad = 0;
      json out = json::array();
      for (const auto& r : reports) {
        bad += !r.consistent();
        if (as_json) {
          out.push_back(report_to_json(r));
        } else {
          std::cout << r.to_string() << '\n';
        }
      }
      if (as_json) {
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << reports.size() - bad << "/" << reports.size() << " consistent\n";
      }
      if (bad) return kExitVerification;
    }
  } catch (const VerificationFailure& ex) {
    std::cerr << "invforge: " << ex.what() << '\n';
    return kExitVerification;
  } catch (const Error& ex) {
    std::cerr << "invforge: " << ex.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "invforge: " << ex.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
