#pragma once

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fairnet/errors.hpp"

namespace fairnet {

// Undirected simple graph used by the source problems.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted, unique
  std::vector<std::vector<int>> adj;

  static SimpleGraph make(int n, std::vector<std::pair<int, int>> edges);
  bool adjacent(int u, int v) const;
};

// Partition V into a part X of exactly part_size vertices and a separator S
// of at most budget vertices so that no edge leaves X for the remainder.
struct CuttingInstance {
  SimpleGraph graph;
  int part_size = 0;  // |X|
  int budget = 0;     // max |S|
};

struct CliqueInstance {
  SimpleGraph graph;
  int k = 1;
};

struct ColoringInstance {
  SimpleGraph graph;
};

// Literals are nonzero integers: +v is the positive literal of variable v
// (1-based), -v its negation.
using Lit = int;

inline int lit_var(Lit l) { return l > 0 ? l : -l; }
inline bool lit_positive(Lit l) { return l > 0; }

// SAT restricted to "linear" shape: q coupled clause pairs
// A_i = {s, shared}, B_i = {shared, t}, plus p isolated 3-literal clauses,
// all clauses mutually disjoint apart from the shared literal of a pair.
struct LsatFormula {
  int variable_count = 0;
  struct CoupledPair {
    Lit s = 0, shared = 0, t = 0;
  };
  std::vector<CoupledPair> pairs;
  std::vector<std::array<Lit, 3>> isolated;
};

// --- certificates ---

struct CuttingCertificate {
  std::vector<int> part;       // X, sorted
  std::vector<int> separator;  // S, sorted
};
struct CliqueCertificate {
  std::vector<int> vertices;  // sorted
};
struct ColoringCertificate {
  std::vector<int> colors;  // color 1..3 per vertex
};
using LsatAssignment = std::vector<bool>;  // index v-1 -> value of x_v

using SourceCertificate = std::variant<CuttingCertificate, CliqueCertificate,
                                       ColoringCertificate, LsatAssignment>;

bool verify_cutting(const CuttingInstance&, const CuttingCertificate&);
bool verify_clique(const CliqueInstance&, const CliqueCertificate&);
bool verify_coloring(const ColoringInstance&, const ColoringCertificate&);
bool lsat_satisfies(const LsatFormula&, const LsatAssignment&);

// --- text formats (see README for the grammar) ---

SimpleGraph parse_source_graph(const std::string& text);
CuttingInstance parse_cutting(const std::string& text);
CliqueInstance parse_clique(const std::string& text);
ColoringInstance parse_coloring(const std::string& text);
LsatFormula parse_lsat(const std::string& text);

std::string render_cutting(const CuttingInstance&);
std::string render_clique(const CliqueInstance&);
std::string render_coloring(const ColoringInstance&);
std::string render_lsat(const LsatFormula&);

}  // namespace fairnet
