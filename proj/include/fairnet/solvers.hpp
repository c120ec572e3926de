#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "fairnet/criteria.hpp"
#include "fairnet/instance.hpp"

namespace fairnet {

enum class SolveStatus { Feasible, Infeasible, BudgetExhausted };

const char* solve_status_name(SolveStatus s);

struct SolveOptions {
  std::uint64_t node_budget = 10'000'000;
};

struct SolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Allocation> allocation;  // present iff feasible
  std::uint64_t nodes_explored = 0;
  std::chrono::microseconds elapsed{0};
  // Goods valued by nobody; set aside before the search, never allocated.
  std::vector<int> unvalued_goods;

  bool feasible() const { return status == SolveStatus::Feasible; }
};

// Streams every complete non-wasteful allocation: each good is assigned to
// one of its approvers. Lexicographic order, good 0's recipient varying
// slowest, recipients in ascending agent index.
// PreconditionError if some good has no approver.
class NonWastefulEnumerator {
 public:
  explicit NonWastefulEnumerator(const Instance& inst);
  std::optional<Allocation> next();

 private:
  const Instance* inst_;
  std::vector<std::vector<int>> approver_lists_;
  std::vector<int> pos_;
  bool exhausted_ = false;
  bool started_ = false;
};

// Exact decision search for a complete (over valued goods), non-wasteful
// allocation that is graph-envy-free. Unvalued goods are excluded and
// reported. Branch and bound with per-agent deficit bounds and an aggregate
// needy-agents-vs-remaining-goods bound; never prunes a repairable branch.
SolveResult solve_eef_gef(const Instance& inst, const SolveOptions& opts = {});

// Same search with local proportionality as the fairness predicate.
SolveResult solve_eef_lp(const Instance& inst, const SolveOptions& opts = {});

// Fast path for identical valuations on a connected graph (which forces
// every agent to value every good once all-zero columns are excluded):
// feasible iff n divides m, in which case goods are dealt round-robin.
// PreconditionError when the preconditions do not hold.
SolveResult solve_identical_connected(const Instance& inst);

}  // namespace fairnet
