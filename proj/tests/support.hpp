#pragma once

// Shared helpers for the test and acceptance suites: straight-from-the-
// definition evaluators (kept independent of the library's bitset fast
// paths), graph enumeration, and seeded samplers.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "fairnet/criteria.hpp"
#include "fairnet/generator.hpp"
#include "fairnet/instance.hpp"
#include "fairnet/solvers.hpp"

namespace defs {

using fairnet::Allocation;
using fairnet::Instance;

inline int util(const Instance& inst, int agent, const Allocation& alloc,
                int owner) {
  int total = 0;
  for (int j = 0; j < inst.good_count(); ++j)
    if (alloc.bundle(owner).test(j) && inst.values(agent, j)) ++total;
  return total;
}

inline bool gef_ok(const Instance& inst, const Allocation& alloc) {
  for (int i = 0; i < inst.agent_count(); ++i)
    for (int j : inst.neighbors(i))
      if (util(inst, i, alloc, i) < util(inst, i, alloc, j)) return false;
  return true;
}

inline bool gp_ok(const Instance& inst, const Allocation& alloc) {
  for (int i = 0; i < inst.agent_count(); ++i) {
    long long total = 0;
    for (int j = 0; j < inst.good_count(); ++j)
      if (inst.values(i, j)) ++total;
    if ((long long)inst.agent_count() * util(inst, i, alloc, i) < total)
      return false;
  }
  return true;
}

inline bool qp_ok(const Instance& inst, const Allocation& alloc) {
  for (int i = 0; i < inst.agent_count(); ++i) {
    long long total = 0;
    for (int j = 0; j < inst.good_count(); ++j)
      if (inst.values(i, j)) ++total;
    if ((long long)(inst.degree(i) + 1) * util(inst, i, alloc, i) < total)
      return false;
  }
  return true;
}

inline bool lp_ok(const Instance& inst, const Allocation& alloc) {
  for (int i = 0; i < inst.agent_count(); ++i) {
    long long seen = util(inst, i, alloc, i);
    for (int j : inst.neighbors(i)) seen += util(inst, i, alloc, j);
    if ((long long)(inst.degree(i) + 1) * util(inst, i, alloc, i) < seen)
      return false;
  }
  return true;
}

inline bool complete_ok(const Instance& inst, const Allocation& alloc) {
  for (int j = 0; j < inst.good_count(); ++j) {
    bool assigned = false;
    for (int i = 0; i < inst.agent_count(); ++i)
      if (alloc.bundle(i).test(j)) assigned = true;
    if (!assigned) return false;
  }
  return true;
}

inline bool nonwasteful_ok(const Instance& inst, const Allocation& alloc) {
  for (int i = 0; i < inst.agent_count(); ++i)
    for (int j = 0; j < inst.good_count(); ++j) {
      if (!alloc.bundle(i).test(j) || inst.values(i, j)) continue;
      for (int k = 0; k < inst.agent_count(); ++k)
        if (inst.values(k, j)) return false;
    }
  return true;
}

}  // namespace defs

namespace corpus {

using Edges = std::vector<std::pair<int, int>>;

inline std::vector<Edges> all_labeled_graphs(int n) {
  Edges slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Edges> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size());
       ++mask) {
    Edges e;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if ((mask >> b) & 1) e.push_back(slots[b]);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::uint64_t edge_mask(int n, const Edges& edges) {
  std::uint64_t mask = 0;
  auto slot = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    int idx = 0;
    for (int a = 0; a < u; ++a) idx += n - a - 1;
    return idx + (v - u - 1);
  };
  for (auto [u, v] : edges) mask |= std::uint64_t{1} << slot(u, v);
  return mask;
}

// One representative per isomorphism class: canonical form by minimizing
// the edge mask over all vertex permutations (fine for n <= 7).
inline std::vector<Edges> nonisomorphic_graphs(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::uint64_t> seen;
  std::vector<Edges> reps;
  for (const Edges& e : all_labeled_graphs(n)) {
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> p = perm;
    do {
      Edges mapped;
      for (auto [u, v] : e) mapped.emplace_back(p[u], p[v]);
      best = std::min(best, edge_mask(n, mapped));
    } while (std::next_permutation(p.begin(), p.end()));
    if (seen.insert(best).second) reps.push_back(e);
  }
  return reps;
}

// Random instance where every good is valued by at least one agent.
inline fairnet::Instance random_fully_valued(fairnet::Rng& rng, int n, int m,
                                             double edge_density,
                                             double val_density) {
  fairnet::RawInstance raw;
  raw.agents = n;
  raw.goods = m;
  raw.valuations.assign(n, std::vector<int>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      raw.valuations[i][j] = rng.bernoulli(val_density) ? 1 : 0;
  for (int j = 0; j < m; ++j) {
    bool valued = false;
    for (int i = 0; i < n; ++i) valued |= raw.valuations[i][j] == 1;
    if (!valued) raw.valuations[rng.uniform_int(0, n - 1)][j] = 1;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(edge_density)) raw.edges.emplace_back(u, v);
  return fairnet::validate_instance(raw);
}

// Uniform random allocation: each good to a random agent or left out.
inline fairnet::Allocation random_allocation(fairnet::Rng& rng,
                                             const fairnet::Instance& inst) {
  fairnet::Allocation alloc(inst);
  for (int j = 0; j < inst.good_count(); ++j) {
    int who = rng.uniform_int(-1, inst.agent_count() - 1);
    if (who >= 0) alloc.assign(who, j);
  }
  return alloc;
}

// Unpruned ground truth for the EEF solvers: filter the complete
// non-wasteful stream through a checker.
inline std::optional<fairnet::Allocation> filter_eef(
    const fairnet::Instance& inst, bool lp_target) {
  fairnet::NonWastefulEnumerator en(inst);
  while (auto alloc = en.next()) {
    bool ok = lp_target ? fairnet::check_lp(inst, *alloc).satisfied
                        : fairnet::check_gef(inst, *alloc).satisfied;
    if (ok) return alloc;
  }
  return std::nullopt;
}

}  // namespace corpus
