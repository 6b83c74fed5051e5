#include "pcg/coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "pcg/error.hpp"

namespace pcg {

namespace {

bool is_red(const PcgEdge& e) { return e.weight < 0; }

void check_graph(const Pcg& g) {
  const QubitSet full = full_set(g.n);
  if (g.n < 1) throw PcgError("graph needs at least one vertex");
  if (g.hollow & ~full) throw PcgError("mark outside the vertex range");
  for (const PcgEdge& e : g.edges) {
    if (e.vertices & ~full) throw PcgError("edge outside the vertex range");
    if (set_size(e.vertices) < 2) throw PcgError("edge needs at least two vertices");
    if (e.weight != 1 && e.weight != -1) throw PcgError("edge weight must be +1 or -1");
  }
}

}  // namespace

ColorabilityResult check_colorable(const Pcg& graph) {
  check_graph(graph);
  const int n_edges = static_cast<int>(graph.edges.size());
  const int words = (n_edges + 63) / 64;

  // One GF(2) equation per edge, augmented with the set of original equations
  // folded into the row; that set becomes the certificate on inconsistency.
  struct Row {
    QubitSet vars = 0;
    bool rhs = false;
    std::vector<std::uint64_t> history;
  };
  std::vector<Row> rows(n_edges);
  for (int i = 0; i < n_edges; ++i) {
    rows[i].vars = graph.edges[i].vertices;
    rows[i].rhs = is_red(graph.edges[i]);
    rows[i].history.assign(words, 0);
    rows[i].history[i / 64] = std::uint64_t{1} << (i % 64);
  }

  // Gauss-Jordan with lowest-index pivots; free variables stay +1.
  std::vector<std::pair<int, int>> pivots;  // (vertex, row)
  int next = 0;
  for (int q = 1; q <= graph.n && next < n_edges; ++q) {
    int sel = -1;
    for (int r = next; r < n_edges; ++r) {
      if (contains(rows[r].vars, q)) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(rows[next], rows[sel]);
    for (int r = 0; r < n_edges; ++r) {
      if (r == next || !contains(rows[r].vars, q)) continue;
      rows[r].vars ^= rows[next].vars;
      rows[r].rhs = rows[r].rhs != rows[next].rhs;
      for (int w = 0; w < words; ++w) rows[r].history[w] ^= rows[next].history[w];
    }
    pivots.emplace_back(q, next);
    ++next;
  }

  for (const Row& row : rows) {
    if (row.vars == 0 && row.rhs) {
      std::vector<int> certificate;
      for (int i = 0; i < n_edges; ++i) {
        if ((row.history[i / 64] >> (i % 64)) & 1u) certificate.push_back(i);
      }
      ColorabilityResult result;
      result.colorable = false;
      result.certificate = std::move(certificate);
      return result;
    }
  }

  Coloring witness{graph.n, 0};
  for (const auto& [q, r] : pivots) {
    if (rows[r].rhs) witness.red |= qubit_bit(q);
  }
  return {true, witness, std::nullopt};
}

ColorabilityResult brute_force_colorable(const Pcg& graph) {
  check_graph(graph);
  if (graph.n > 20) {
    throw PcgError("brute-force coloring is limited to 20 vertices");
  }
  const std::uint32_t count = 1u << graph.n;
  for (std::uint32_t ordinal = 0; ordinal < count; ++ordinal) {
    const QubitSet red = mask_from_ordinal(ordinal, graph.n);
    bool proper = true;
    for (const PcgEdge& e : graph.edges) {
      if (odd_parity(red & e.vertices) != is_red(e)) {
        proper = false;
        break;
      }
    }
    if (proper) return {true, Coloring{graph.n, red}, std::nullopt};
  }
  return {false, Coloring{graph.n, 0}, std::nullopt};
}

std::optional<std::vector<int>> has_odd_red_loop(const Pcg& graph) {
  check_graph(graph);
  struct Arc {
    int edge;
    int other;
  };
  std::vector<std::vector<Arc>> adjacent(graph.n + 1);
  for (int i = 0; i < static_cast<int>(graph.edges.size()); ++i) {
    const PcgEdge& e = graph.edges[i];
    if (set_size(e.vertices) != 2) continue;
    const std::vector<int> uv = set_to_indices(e.vertices);
    adjacent[uv[0]].push_back({i, uv[1]});
    adjacent[uv[1]].push_back({i, uv[0]});
  }

  std::vector<char> visited(graph.n + 1, 0);
  std::vector<char> parity(graph.n + 1, 0);
  std::vector<int> parent_edge(graph.n + 1, -1);
  std::vector<int> parent_vertex(graph.n + 1, 0);

  auto path_to_root = [&](int v) {
    std::vector<int> edges;
    while (parent_edge[v] >= 0) {
      edges.push_back(parent_edge[v]);
      v = parent_vertex[v];
    }
    return edges;  // v is now the BFS root
  };

  for (int root = 1; root <= graph.n; ++root) {
    if (visited[root]) continue;
    visited[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const Arc& arc : adjacent[u]) {
        const bool red = is_red(graph.edges[arc.edge]);
        if (!visited[arc.other]) {
          visited[arc.other] = 1;
          parity[arc.other] = parity[u] ^ red;
          parent_edge[arc.other] = arc.edge;
          parent_vertex[arc.other] = u;
          queue.push_back(arc.other);
          continue;
        }
        if (arc.edge == parent_edge[u]) continue;
        if ((parity[u] ^ parity[arc.other] ^ red) == 0) continue;

        // Fundamental cycle of this non-tree edge: both tree paths trimmed
        // past their common ancestor, plus the closing edge.
        std::vector<int> up = path_to_root(u);
        std::vector<int> down = path_to_root(arc.other);
        while (!up.empty() && !down.empty() && up.back() == down.back()) {
          up.pop_back();
          down.pop_back();
        }
        std::vector<int> cycle = std::move(up);
        cycle.insert(cycle.end(), down.rbegin(), down.rend());
        cycle.push_back(arc.edge);
        return cycle;
      }
    }
  }
  return std::nullopt;
}

Pcg build_pcg(const Outcome& outcome, const ConditionSet& conditions) {
  if (!(conditions.outcome == outcome) || conditions.n != outcome.n) {
    throw PcgError("conditions were derived for a different outcome");
  }
  Pcg graph;
  graph.n = outcome.n;
  graph.hollow = outcome.minus;
  graph.edges.reserve(conditions.conditions.size());
  for (const HardyCondition& c : conditions.conditions) {
    graph.edges.push_back({c.edge, c.alpha});
  }
  std::sort(graph.edges.begin(), graph.edges.end(),
            [](const PcgEdge& a, const PcgEdge& b) {
              return support_lex_less(a.vertices, b.vertices);
            });
  return graph;
}

std::string export_dot(const Pcg& graph) {
  check_graph(graph);
  std::string out;
  out += "graph pcg {\n";
  out += "  layout=circo;\n";
  out += "  node [shape=circle fontname=\"Helvetica\" fixedsize=true width=0.35];\n";
  for (int q = 1; q <= graph.n; ++q) {
    out += "  " + std::to_string(q);
    if (graph.mark(q) == 1) {
      out += " [style=filled fillcolor=\"black\" fontcolor=\"white\"];\n";
    } else {
      out += " [style=filled fillcolor=\"white\" fontcolor=\"black\"];\n";
    }
  }
  for (int i = 0; i < static_cast<int>(graph.edges.size()); ++i) {
    const PcgEdge& e = graph.edges[i];
    const std::string color = is_red(e) ? "red" : "green";
    const std::vector<int> vertices = set_to_indices(e.vertices);
    if (vertices.size() == 2) {
      out += "  " + std::to_string(vertices[0]) + " -- " +
             std::to_string(vertices[1]) + " [color=\"" + color + "\"];\n";
      continue;
    }
    const std::string hub = "e" + std::to_string(i);
    out += "  " + hub + " [shape=point width=0.08 color=\"" + color + "\"];\n";
    for (int v : vertices) {
      out += "  " + hub + " -- " + std::to_string(v) + " [color=\"" + color +
             "\" style=dashed];\n";
    }
  }
  out += "}\n";
  return out;
}

bool coloring_satisfies(const Pcg& graph, const Coloring& coloring) {
  if (coloring.n != graph.n || (coloring.red & ~full_set(graph.n))) return false;
  for (const PcgEdge& e : graph.edges) {
    if (odd_parity(coloring.red & e.vertices) != is_red(e)) return false;
  }
  return true;
}

bool certificate_refutes(const Pcg& graph, const std::vector<int>& certificate) {
  if (certificate.empty()) return false;
  QubitSet folded = 0;
  int weight = 1;
  std::vector<char> seen(graph.edges.size(), 0);
  for (int idx : certificate) {
    if (idx < 0 || idx >= static_cast<int>(graph.edges.size())) return false;
    if (seen[idx]) return false;
    seen[idx] = 1;
    folded ^= graph.edges[idx].vertices;
    weight *= graph.edges[idx].weight;
  }
  // Each vertex cancels, yet the weights multiply to -1: no coloring can
  // satisfy the subset simultaneously.
  return folded == 0 && weight == -1;
}

}  // namespace pcg
