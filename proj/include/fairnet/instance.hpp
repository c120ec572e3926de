#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fairnet/bitset.hpp"
#include "fairnet/errors.hpp"

namespace fairnet {

// Unvalidated instance description, as read from a file or built by hand.
struct RawInstance {
  int agents = 0;
  int goods = 0;
  // agents x goods matrix; every entry must be 0 or 1.
  std::vector<std::vector<int>> valuations;
  std::vector<std::pair<int, int>> edges;
};

// A fair-division instance: agents with additive 0/1 valuations over goods,
// plus an undirected simple graph on the agents. Immutable after
// construction; safe to share across threads.
class Instance {
 public:
  int agent_count() const { return n_; }
  int good_count() const { return m_; }

  bool values(int agent, int good) const { return approves_[agent].test(good); }
  const Bitset& approved_goods(int agent) const { return approves_[agent]; }
  const Bitset& approvers(int good) const { return approvers_[good]; }
  int approver_count(int good) const { return approvers_[good].count(); }

  // s_i: number of goods agent i values.
  int valued_count(int agent) const { return approves_[agent].count(); }
  // nu_i(S) for a bundle S given as a bitset over goods.
  int utility(int agent, const Bitset& bundle) const {
    return approves_[agent].intersection_count(bundle);
  }

  const std::vector<int>& neighbors(int agent) const { return adj_[agent]; }
  const Bitset& neighbor_mask(int agent) const { return adj_mask_[agent]; }
  int degree(int agent) const { return int(adj_[agent].size()); }
  bool adjacent(int u, int v) const { return adj_mask_[u].test(v); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  friend Instance validate_instance(const RawInstance& raw);

 private:
  int n_ = 0, m_ = 0;
  std::vector<Bitset> approves_;   // per agent, over goods
  std::vector<Bitset> approvers_;  // per good, over agents
  std::vector<std::vector<int>> adj_;
  std::vector<Bitset> adj_mask_;
  std::vector<std::pair<int, int>> edges_;  // u < v, sorted
};

// Checks every structural invariant and builds the indexed form.
// Throws ValidationError on dimension mismatch, non-binary entries,
// self-loops, parallel edges, or out-of-range indices.
Instance validate_instance(const RawInstance& raw);

// Convenience builder: approved[i] lists the goods agent i values.
Instance make_instance(int agents, int goods,
                       const std::vector<std::vector<int>>& approved,
                       const std::vector<std::pair<int, int>>& edges);

// An allocation of goods to agents; bundles are pairwise disjoint, possibly
// partial. Construct empty, then assign.
class Allocation {
 public:
  Allocation() = default;
  Allocation(int agents, int goods)
      : n_(agents), m_(goods), bundles_(agents, Bitset(goods)) {}
  explicit Allocation(const Instance& inst)
      : Allocation(inst.agent_count(), inst.good_count()) {}

  int agent_count() const { return n_; }
  int good_count() const { return m_; }

  void assign(int agent, int good) {
    check_range(agent, good);
    bundles_[agent].set(good);
  }
  void unassign(int agent, int good) {
    check_range(agent, good);
    bundles_[agent].reset(good);
  }
  const Bitset& bundle(int agent) const { return bundles_[agent]; }

  Bitset assigned_goods() const {
    Bitset all(m_);
    for (const auto& b : bundles_) all |= b;
    return all;
  }
  int total_assigned() const {
    int t = 0;
    for (const auto& b : bundles_) t += b.count();
    return t;
  }

  bool operator==(const Allocation&) const = default;

 private:
  void check_range(int agent, int good) const {
    if (agent < 0 || agent >= n_ || good < 0 || good >= m_)
      throw ValidationError("agent " + std::to_string(agent) + " / good " +
                            std::to_string(good) + " out of range");
  }

  int n_ = 0, m_ = 0;
  std::vector<Bitset> bundles_;
};

// Confirms disjointness and index bounds; throws ValidationError otherwise.
void validate_allocation(const Instance& inst, const Allocation& alloc);

struct InstanceDiagnostics {
  std::vector<int> unvalued_goods;  // columns of the matrix that are all zero
  std::vector<int> isolated_agents;
  bool is_connected = false;
  bool has_identical_valuations = false;
};

InstanceDiagnostics diagnose(const Instance& inst);

// Canonical line-oriented text format. parse_instance(render_instance(x)) == x.
std::string render_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

std::string render_allocation(const Allocation& alloc);
Allocation parse_allocation(const std::string& text, const Instance& inst);

}  // namespace fairnet
