#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairnet/instance.hpp"

namespace fairnet {

struct FlowArc {
  int from = 0, to = 0;
  long long lower = 0, upper = 0;
};

// Directed network with lower and upper bounds on arc flow.
struct FlowNetwork {
  int node_count = 0;
  int source = -1, sink = -1;
  std::vector<FlowArc> arcs;
  std::vector<std::string> node_labels;  // one per node
};

// The quasi-global proportionality feasibility network for an instance:
// source -> agent i with bounds (ceil(s_i/(d_i+1)), s_i), agent -> good
// wherever a_ij = 1 with bounds (0,1), and good -> sink with bounds (1,1)
// for every valued good. Goods valued by nobody are left out and reported.
struct QpNetwork {
  FlowNetwork net;
  std::vector<int> agent_node;         // instance agent -> node id
  std::vector<int> good_node;          // instance good -> node id (-1 if excluded)
  std::vector<int> valued_goods;
  std::vector<int> unvalued_goods;
  // arcs[k] for k in [agent_good_arcs_begin, agent_good_arcs_end) are the
  // agent -> good arcs, used to decode an allocation from a flow.
  int agent_good_arcs_begin = 0, agent_good_arcs_end = 0;
};

QpNetwork build_qp_network(const Instance& inst);

struct FeasibleFlow {
  bool feasible = false;
  std::vector<long long> arc_flow;  // parallel to FlowNetwork::arcs
};

// Integral flow meeting every bound, or infeasibility. Standard reduction:
// send each lower bound, balance the induced excess through a super
// source/sink pair, and check that the balancing max-flow saturates.
FeasibleFlow solve_feasible_flow(const FlowNetwork& net);

struct QpSolveResult {
  bool feasible = false;
  std::optional<Allocation> allocation;
  long long max_flow_value = 0;  // goods assigned when feasible
  std::vector<int> unvalued_goods;
};

// Decides whether a complete (over valued goods), non-wasteful allocation
// meeting the quasi-global proportionality threshold exists, and returns one
// when it does. Polynomial in the instance size.
QpSolveResult solve_qp_pareto(const Instance& inst);

// Arc-list text format for external verification (see README).
std::string render_flow_network(const FlowNetwork& net);

}  // namespace fairnet
