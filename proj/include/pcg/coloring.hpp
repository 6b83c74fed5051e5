#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcg/hardy.hpp"
#include "pcg/state.hpp"

namespace pcg {

// Weighted hyperedge of a projected-coloring graph. weight -1 draws red,
// +1 green.
struct PcgEdge {
  QubitSet vertices = 0;  // >= 2 vertices
  int weight = 1;

  friend bool operator==(const PcgEdge&, const PcgEdge&) = default;
};

// Marked multigraph built from one outcome's condition group. Vertices are
// qubits; mark +1 renders as a filled dot, -1 as a hollow dot. Marks carry
// the measurement record and never constrain colorability.
struct Pcg {
  int n = 0;
  QubitSet hollow = 0;  // vertices marked -1
  std::vector<PcgEdge> edges;

  int mark(int vertex) const { return contains(hollow, vertex) ? -1 : 1; }

  friend bool operator==(const Pcg&, const Pcg&) = default;
};

// Vertex 2-coloring c in {+1,-1}^n, stored as the set of -1 vertices.
struct Coloring {
  int n = 0;
  QubitSet red = 0;

  int value(int vertex) const { return contains(red, vertex) ? -1 : 1; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Verdict of a colorability check. When colorable, `witness` satisfies every
// edge. When not, `certificate` lists edge indices whose equations combine to
// 0 = 1 over GF(2); the brute-force oracle leaves it empty (exhaustion is its
// whole argument).
struct ColorabilityResult {
  bool colorable = false;
  Coloring witness;
  std::optional<std::vector<int>> certificate;
};

// A coloring is proper when prod_{v in e} c_v equals the weight of every
// edge. Equivalent GF(2) system: sum of x_v over e = b_e with c = (-1)^x,
// weight = (-1)^b.
ColorabilityResult check_colorable(const Pcg& graph);

// Independent oracle: tries all 2^n colorings in bitstring-lexicographic
// order (+1 sorts first) and returns the first proper one. Limited to n <= 20.
ColorabilityResult brute_force_colorable(const Pcg& graph);

// Looks for a cycle among the 2-vertex edges with an odd number of red edges;
// such a loop already makes the graph un-colorable. Returns the edge indices
// of one such cycle.
std::optional<std::vector<int>> has_odd_red_loop(const Pcg& graph);

// One vertex per qubit, marks from the outcome, one edge per derived
// condition (weight = alpha). The conditions must have been derived for this
// outcome.
Pcg build_pcg(const Outcome& outcome, const ConditionSet& conditions);

// Deterministic Graphviz rendering: filled/hollow vertex dots, red/green
// edges, point-nodes for hyperedges.
std::string export_dot(const Pcg& graph);

// Checks kept independent of the solvers, for verifying their outputs.
bool coloring_satisfies(const Pcg& graph, const Coloring& coloring);
bool certificate_refutes(const Pcg& graph, const std::vector<int>& certificate);

}  // namespace pcg
