#include "fairnet/solvers.hpp"

#include <algorithm>
#include <stdexcept>

namespace fairnet {

const char* solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

NonWastefulEnumerator::NonWastefulEnumerator(const Instance& inst)
    : inst_(&inst) {
  for (int j = 0; j < inst.good_count(); ++j) {
    if (inst.approvers(j).none())
      throw PreconditionError("good " + std::to_string(j) +
                              " is valued by no agent");
    approver_lists_.push_back(inst.approvers(j).to_vector());
  }
  pos_.assign(inst.good_count(), 0);
}

std::optional<Allocation> NonWastefulEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (started_) {
    // odometer: last good's recipient varies fastest
    int j = inst_->good_count() - 1;
    while (j >= 0 && pos_[j] + 1 == int(approver_lists_[j].size()))
      pos_[j--] = 0;
    if (j < 0) {
      exhausted_ = true;
      return std::nullopt;
    }
    ++pos_[j];
  }
  started_ = true;
  Allocation alloc(*inst_);
  for (int j = 0; j < inst_->good_count(); ++j)
    alloc.assign(approver_lists_[j][pos_[j]], j);
  return alloc;
}

namespace {

enum class Fairness { Gef, Lp };

// Depth-first assignment of valued goods to approvers with sound
// incremental pruning. Good selection is dynamic and deterministic: while
// some agent provably needs another good, branch on a good that agent
// values (deficits fail shallow); otherwise branch on the most widely
// approved good, whose placement constrains the most agents. All counters
// use an undo trail so backtracking is O(changes).
class EefSearch {
 public:
  EefSearch(const Instance& inst, Fairness mode, std::uint64_t budget)
      : inst_(inst), mode_(mode), budget_(budget) {
    int n = inst.agent_count();
    for (int j = 0; j < inst.good_count(); ++j) {
      if (inst.approvers(j).any())
        valued_.push_back(j);
      else
        unvalued_.push_back(j);
    }
    approver_lists_.resize(inst.good_count());
    for (int j : valued_) approver_lists_[j] = inst.approvers(j).to_vector();

    u_.assign(n, 0);
    rem_.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j : valued_)
        if (inst.values(i, j)) ++rem_[i];
    unassigned_count_ = int(valued_.size());
    unassigned_ = Bitset(inst.good_count());
    for (int j : valued_) unassigned_.set(j);
    if (mode_ == Fairness::Gef) {
      val_.assign(std::size_t(n) * n, 0);
      maxval_.assign(n, 0);
    } else {
      rhs_.assign(n, 0);
    }
    needy_.assign(n, 0);
    owner_.assign(inst.good_count(), -1);
  }

  SolveResult run() {
    auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    res.unvalued_goods = unvalued_;
    bool found = dfs();
    res.nodes_explored = nodes_;
    if (found) {
      res.status = SolveStatus::Feasible;
      Allocation alloc(inst_);
      for (int j = 0; j < inst_.good_count(); ++j)
        if (owner_[j] >= 0) alloc.assign(owner_[j], j);
      res.allocation = std::move(alloc);
    } else {
      res.status = budget_hit_ ? SolveStatus::BudgetExhausted
                               : SolveStatus::Infeasible;
    }
    res.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return res;
  }

 private:
  void touch(int& slot) { trail_.emplace_back(&slot, slot); }

  void set_needy(int i, bool v) {
    if (needy_[i] == int(v)) return;
    touch(needy_[i]);
    touch(needy_count_);
    needy_[i] = int(v);
    needy_count_ += v ? 1 : -1;
  }

  bool gef_needy(int i) const { return maxval_[i] > u_[i]; }
  bool lp_needy(int i) const {
    return (long long)(inst_.degree(i) + 1) * u_[i] < rhs_[i];
  }

  // Applies good -> agent and refreshes the affected prune state.
  // Returns false when the branch is provably dead.
  bool apply(int good, int agent) {
    touch(owner_[good]);
    owner_[good] = agent;
    touch(unassigned_count_);
    --unassigned_count_;
    unassigned_.reset(good);  // restored on rollback by hand

    touched_.clear();
    inst_.approvers(good).for_each([&](int i) {
      touch(rem_[i]);
      --rem_[i];
      touched_.push_back(i);
    });
    touch(u_[agent]);
    ++u_[agent];

    if (mode_ == Fairness::Gef) {
      for (int i : inst_.neighbors(agent)) {
        if (!inst_.values(i, good)) continue;
        int& slot = val_[std::size_t(i) * inst_.agent_count() + agent];
        touch(slot);
        ++slot;
        if (slot > maxval_[i]) {
          touch(maxval_[i]);
          maxval_[i] = slot;
        }
        touched_.push_back(i);
      }
      touched_.push_back(agent);
      for (int i : touched_) set_needy(i, gef_needy(i));
      for (int i : touched_) {
        // unrepairable envy: even taking every remaining liked good,
        // i cannot match what some neighbor already holds
        if (maxval_[i] > u_[i] + rem_[i]) return false;
      }
    } else {
      for (int i : inst_.neighbors(agent)) {
        if (!inst_.values(i, good)) continue;
        touch(rhs_[i]);
        ++rhs_[i];
        touched_.push_back(i);
      }
      if (inst_.values(agent, good)) {
        touch(rhs_[agent]);
        ++rhs_[agent];
      }
      touched_.push_back(agent);
      for (int i : touched_) set_needy(i, lp_needy(i));
      for (int i : touched_) {
        long long scale = inst_.degree(i) + 1;
        if (scale * (u_[i] + rem_[i]) < (long long)rhs_[i] + rem_[i])
          return false;
      }
    }

    if (needy_count_ > unassigned_count_) return false;
    if (needy_count_ > 0) {
      // every needy agent must still receive a distinct good it values
      Bitset reachable(inst_.good_count());
      int needy_seen = 0;
      for (int i = 0; i < inst_.agent_count() && needy_seen < needy_count_;
           ++i) {
        if (!needy_[i]) continue;
        ++needy_seen;
        Bitset mine = inst_.approved_goods(i);
        mine &= unassigned_;
        reachable |= mine;
      }
      if (reachable.count() < needy_count_) return false;
    }
    return true;
  }

  bool final_check() const {
    int n = inst_.agent_count();
    if (mode_ == Fairness::Gef) {
      for (int i = 0; i < n; ++i)
        for (int j : inst_.neighbors(i))
          if (val_[std::size_t(i) * n + j] > u_[i]) return false;
    } else {
      for (int i = 0; i < n; ++i)
        if ((long long)(inst_.degree(i) + 1) * u_[i] < rhs_[i]) return false;
    }
    return true;
  }

  int pick_good() const {
    if (needy_count_ > 0) {
      int agent = -1;
      for (int i = 0; i < inst_.agent_count(); ++i)
        if (needy_[i] && (agent < 0 || rem_[i] < rem_[agent])) agent = i;
      Bitset open = inst_.approved_goods(agent);
      open &= unassigned_;
      return open.first_set();
    }
    int best = -1;
    unassigned_.for_each([&](int j) {
      if (best < 0 ||
          approver_lists_[j].size() > approver_lists_[best].size())
        best = j;
    });
    return best;
  }

  bool dfs() {
    if (unassigned_count_ == 0) return final_check();
    int good = pick_good();
    for (int agent : approver_lists_[good]) {
      if (++nodes_ > budget_) {
        budget_hit_ = true;
        return false;
      }
      std::size_t mark = trail_.size();
      bool viable = apply(good, agent);
      if (viable && dfs()) return true;
      while (trail_.size() > mark) {
        auto [slot, old] = trail_.back();
        *slot = old;
        trail_.pop_back();
      }
      unassigned_.set(good);
      if (budget_hit_) return false;
    }
    return false;
  }

  const Instance& inst_;
  Fairness mode_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;

  std::vector<int> valued_;
  std::vector<std::vector<int>> approver_lists_;  // indexed by good
  std::vector<int> unvalued_;
  std::vector<int> owner_;

  std::vector<int> u_;       // own utility
  std::vector<int> rem_;     // unassigned goods the agent values
  std::vector<int> val_;     // GEF: val_[i*n+j] = nu_i(pi(j))
  std::vector<int> maxval_;  // GEF: max over neighbors j of val_[i][j]
  std::vector<int> rhs_;     // LP: sum over closed neighborhood
  std::vector<int> needy_;
  int needy_count_ = 0;
  int unassigned_count_ = 0;
  Bitset unassigned_;
  std::vector<std::pair<int*, int>> trail_;
  std::vector<int> touched_;
};

SolveResult run_eef(const Instance& inst, Fairness mode,
                    const SolveOptions& opts) {
  EefSearch search(inst, mode, opts.node_budget);
  SolveResult res = search.run();
  if (res.feasible()) {
    // self-consistency: a returned allocation must re-pass its checkers
    const Allocation& a = *res.allocation;
    bool fair = mode == Fairness::Gef ? check_gef(inst, a).satisfied
                                      : check_lp(inst, a).satisfied;
    bool clean = check_non_wasteful(inst, a).satisfied;
    int valued = inst.good_count() - int(res.unvalued_goods.size());
    if (!fair || !clean || a.total_assigned() != valued)
      throw std::logic_error("solver produced an allocation that fails its "
                             "own acceptance checks");
  }
  return res;
}

}  // namespace

SolveResult solve_eef_gef(const Instance& inst, const SolveOptions& opts) {
  return run_eef(inst, Fairness::Gef, opts);
}

SolveResult solve_eef_lp(const Instance& inst, const SolveOptions& opts) {
  return run_eef(inst, Fairness::Lp, opts);
}

SolveResult solve_identical_connected(const Instance& inst) {
  auto t0 = std::chrono::steady_clock::now();
  InstanceDiagnostics d = diagnose(inst);
  if (!d.has_identical_valuations)
    throw PreconditionError("agents do not have identical valuations");
  if (!d.is_connected) throw PreconditionError("agent graph is not connected");
  if (!d.unvalued_goods.empty())
    throw PreconditionError("instance has goods valued by nobody");

  int n = inst.agent_count(), m = inst.good_count();
  SolveResult res;
  if (n == 0 || m % n == 0) {
    Allocation alloc(inst);
    for (int j = 0; j < m; ++j) alloc.assign(j % std::max(n, 1), j);
    if (n > 0 && m > 0 && !check_gef(inst, alloc).satisfied)
      throw std::logic_error("equal split failed the envy check");
    res.status = SolveStatus::Feasible;
    res.allocation = std::move(alloc);
  } else {
    res.status = SolveStatus::Infeasible;
  }
  res.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - t0);
  return res;
}

}  // namespace fairnet
