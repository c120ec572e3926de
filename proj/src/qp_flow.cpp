#include "fairnet/qp_flow.hpp"

#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "fairnet/criteria.hpp"

namespace fairnet {

namespace {

// Dinic's algorithm; deterministic for a fixed arc insertion order.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n) {}

  int add_edge(int u, int v, long long cap) {
    int id = int(edges_.size());
    edges_.push_back({v, cap});
    head_[u].push_back(id);
    edges_.push_back({u, 0});
    head_[v].push_back(id + 1);
    return id;
  }

  long long residual(int id) const { return edges_[id].cap; }

  long long run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      iter_.assign(head_.size(), 0);
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max()))
        total += f;
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    long long cap;
  };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int id : head_[u]) {
        const Edge& e = edges_[id];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[u] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  long long dfs(int u, int t, long long limit) {
    if (u == t) return limit;
    for (std::size_t& k = iter_[u]; k < head_[u].size(); ++k) {
      int id = head_[u][k];
      Edge& e = edges_[id];
      if (e.cap <= 0 || level_[e.to] != level_[u] + 1) continue;
      long long got = dfs(e.to, t, std::min(limit, e.cap));
      if (got > 0) {
        e.cap -= got;
        edges_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> head_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace

QpNetwork build_qp_network(const Instance& inst) {
  int n = inst.agent_count();
  QpNetwork qn;
  for (int j = 0; j < inst.good_count(); ++j)
    (inst.approvers(j).any() ? qn.valued_goods : qn.unvalued_goods).push_back(j);

  FlowNetwork& net = qn.net;
  net.source = 0;
  net.sink = 1;
  net.node_labels = {"source", "sink"};
  qn.agent_node.resize(n);
  for (int i = 0; i < n; ++i) {
    qn.agent_node[i] = int(net.node_labels.size());
    net.node_labels.push_back("agent" + std::to_string(i));
  }
  qn.good_node.assign(inst.good_count(), -1);
  for (int j : qn.valued_goods) {
    qn.good_node[j] = int(net.node_labels.size());
    net.node_labels.push_back("good" + std::to_string(j));
  }
  net.node_count = int(net.node_labels.size());

  for (int i = 0; i < n; ++i) {
    long long s_i = inst.valued_count(i);
    long long share = inst.degree(i) + 1;
    long long demand = (s_i + share - 1) / share;  // ceil(s_i / (d_i + 1))
    net.arcs.push_back({net.source, qn.agent_node[i], demand, s_i});
  }
  qn.agent_good_arcs_begin = int(net.arcs.size());
  for (int i = 0; i < n; ++i)
    for (int j : qn.valued_goods)
      if (inst.values(i, j))
        net.arcs.push_back({qn.agent_node[i], qn.good_node[j], 0, 1});
  qn.agent_good_arcs_end = int(net.arcs.size());
  for (int j : qn.valued_goods)
    net.arcs.push_back({qn.good_node[j], net.sink, 1, 1});
  return qn;
}

FeasibleFlow solve_feasible_flow(const FlowNetwork& net) {
  for (const FlowArc& a : net.arcs) {
    if (a.lower > a.upper)
      throw ValidationError("arc has lower bound above its upper bound");
    if (a.from < 0 || a.from >= net.node_count || a.to < 0 ||
        a.to >= net.node_count)
      throw ValidationError("arc references an invalid node");
    if (a.lower < 0) throw ValidationError("negative lower bound");
  }

  // Transformed graph: original nodes, plus a balancing source/sink pair.
  int ss = net.node_count, tt = net.node_count + 1;
  MaxFlow mf(net.node_count + 2);
  std::vector<long long> excess(net.node_count, 0);
  std::vector<int> arc_edge(net.arcs.size());
  for (std::size_t k = 0; k < net.arcs.size(); ++k) {
    const FlowArc& a = net.arcs[k];
    arc_edge[k] = mf.add_edge(a.from, a.to, a.upper - a.lower);
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
  }
  const long long inf = std::numeric_limits<long long>::max() / 4;
  mf.add_edge(net.sink, net.source, inf);
  long long required = 0;
  for (int v = 0; v < net.node_count; ++v) {
    if (excess[v] > 0) {
      mf.add_edge(ss, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      mf.add_edge(v, tt, -excess[v]);
    }
  }

  FeasibleFlow out;
  out.feasible = (mf.run(ss, tt) == required);
  if (out.feasible) {
    out.arc_flow.resize(net.arcs.size());
    for (std::size_t k = 0; k < net.arcs.size(); ++k) {
      const FlowArc& a = net.arcs[k];
      long long sent = (a.upper - a.lower) - mf.residual(arc_edge[k]);
      out.arc_flow[k] = a.lower + sent;
    }
  }
  return out;
}

QpSolveResult solve_qp_pareto(const Instance& inst) {
  QpNetwork qn = build_qp_network(inst);
  FeasibleFlow flow = solve_feasible_flow(qn.net);

  QpSolveResult res;
  res.unvalued_goods = qn.unvalued_goods;
  res.feasible = flow.feasible;
  if (!flow.feasible) return res;

  std::vector<int> node_good(qn.net.node_count, -1);
  for (int j : qn.valued_goods) node_good[qn.good_node[j]] = j;
  Allocation alloc(inst);
  for (int k = qn.agent_good_arcs_begin; k < qn.agent_good_arcs_end; ++k) {
    if (flow.arc_flow[k] == 0) continue;
    const FlowArc& a = qn.net.arcs[k];
    int agent = a.from - qn.agent_node[0];
    alloc.assign(agent, node_good[a.to]);
  }
  res.max_flow_value = alloc.total_assigned();

  // post-solve assertions from the result contract
  if (res.max_flow_value != (long long)qn.valued_goods.size() ||
      !check_qp(inst, alloc).satisfied ||
      !check_non_wasteful(inst, alloc).satisfied)
    throw std::logic_error("flow solution decoded to an invalid allocation");
  res.allocation = std::move(alloc);
  return res;
}

std::string render_flow_network(const FlowNetwork& net) {
  std::ostringstream out;
  out << "nodes " << net.node_count << "\n";
  out << "source " << net.source << "\n";
  out << "sink " << net.sink << "\n";
  for (int v = 0; v < net.node_count; ++v)
    out << "node " << v << ' '
        << (v < int(net.node_labels.size()) ? net.node_labels[v] : "?") << "\n";
  for (const FlowArc& a : net.arcs)
    out << "arc " << a.from << ' ' << a.to << ' ' << a.lower << ' ' << a.upper
        << "\n";
  return out.str();
}

}  // namespace fairnet
