#include "fairnet/criteria.hpp"

#include <cmath>

namespace fairnet {

const char* criterion_name(Criterion c) {
  switch (c) {
    case Criterion::Gef: return "gef";
    case Criterion::Gp: return "gp";
    case Criterion::Qp: return "qp";
    case Criterion::Lp: return "lp";
    case Criterion::Complete: return "complete";
    case Criterion::NonWasteful: return "nonwasteful";
    case Criterion::Pareto: return "pareto";
  }
  return "?";
}

std::optional<Criterion> criterion_from_name(const std::string& name) {
  for (Criterion c : {Criterion::Gef, Criterion::Gp, Criterion::Qp,
                      Criterion::Lp, Criterion::Complete,
                      Criterion::NonWasteful, Criterion::Pareto})
    if (name == criterion_name(c)) return c;
  return std::nullopt;
}

CriterionReport check_gef(const Instance& inst, const Allocation& alloc) {
  CriterionReport r;
  for (int i = 0; i < inst.agent_count(); ++i) {
    int own = inst.utility(i, alloc.bundle(i));
    for (int j : inst.neighbors(i)) {
      int theirs = inst.utility(i, alloc.bundle(j));
      if (own < theirs)
        r.violations.push_back({i, j, -1, theirs - own});
    }
  }
  r.satisfied = r.violations.empty();
  return r;
}

// Shared shape of the three proportionality checks: compare
// scale * nu_i(pi(i)) against an integer right-hand side, exactly.
static CriterionReport check_threshold(
    const Instance& inst, const Allocation& alloc,
    long long (*scale)(const Instance&, int),
    long long (*rhs)(const Instance&, const Allocation&, int)) {
  CriterionReport r;
  for (int i = 0; i < inst.agent_count(); ++i) {
    long long lhs = scale(inst, i) * inst.utility(i, alloc.bundle(i));
    long long need = rhs(inst, alloc, i);
    if (lhs < need) r.violations.push_back({i, -1, -1, need - lhs});
  }
  r.satisfied = r.violations.empty();
  return r;
}

CriterionReport check_gp(const Instance& inst, const Allocation& alloc) {
  return check_threshold(
      inst, alloc,
      [](const Instance& in, int) { return (long long)in.agent_count(); },
      [](const Instance& in, const Allocation&, int i) {
        return (long long)in.valued_count(i);
      });
}

CriterionReport check_qp(const Instance& inst, const Allocation& alloc) {
  return check_threshold(
      inst, alloc,
      [](const Instance& in, int i) { return (long long)in.degree(i) + 1; },
      [](const Instance& in, const Allocation&, int i) {
        return (long long)in.valued_count(i);
      });
}

CriterionReport check_lp(const Instance& inst, const Allocation& alloc) {
  return check_threshold(
      inst, alloc,
      [](const Instance& in, int i) { return (long long)in.degree(i) + 1; },
      [](const Instance& in, const Allocation& a, int i) {
        long long sum = in.utility(i, a.bundle(i));
        for (int j : in.neighbors(i)) sum += in.utility(i, a.bundle(j));
        return sum;
      });
}

CriterionReport check_complete(const Instance& inst, const Allocation& alloc) {
  CriterionReport r;
  Bitset assigned = alloc.assigned_goods();
  for (int j = 0; j < inst.good_count(); ++j)
    if (!assigned.test(j)) r.violations.push_back({-1, -1, j, 0});
  r.satisfied = r.violations.empty();
  return r;
}

CriterionReport check_non_wasteful(const Instance& inst,
                                   const Allocation& alloc) {
  CriterionReport r;
  for (int i = 0; i < inst.agent_count(); ++i) {
    alloc.bundle(i).for_each([&](int j) {
      if (!inst.values(i, j) && inst.approvers(j).any())
        r.violations.push_back({i, -1, j, 0});
    });
  }
  r.satisfied = r.violations.empty();
  return r;
}

bool dominates(const Instance& inst, const Allocation& a, const Allocation& b) {
  bool strict = false;
  for (int i = 0; i < inst.agent_count(); ++i) {
    int ua = inst.utility(i, a.bundle(i));
    int ub = inst.utility(i, b.bundle(i));
    if (ub < ua) return false;
    if (ub > ua) strict = true;
  }
  return strict;
}

static CriterionReport check_pareto_exhaustive(const Instance& inst,
                                               const Allocation& alloc) {
  int n = inst.agent_count(), m = inst.good_count();
  // Candidate space: each good goes to one of n agents or stays unassigned.
  double bits = m * std::log2(double(n) + 1.0);
  if (bits > 24.0)
    throw PreconditionError(
        "exhaustive Pareto search infeasible: (n+1)^m exceeds 2^24");

  CriterionReport r;
  std::vector<int> owner(m, -1);  // -1 = unassigned, else agent
  while (true) {
    Allocation cand(n, m);
    for (int j = 0; j < m; ++j)
      if (owner[j] >= 0) cand.assign(owner[j], j);
    if (dominates(inst, alloc, cand)) {
      r.satisfied = false;
      for (int i = 0; i < n; ++i) {
        int gain = inst.utility(i, cand.bundle(i)) -
                   inst.utility(i, alloc.bundle(i));
        if (gain > 0) r.violations.push_back({i, -1, -1, gain});
      }
      r.dominator = std::move(cand);
      return r;
    }
    // odometer, last good fastest
    int j = m - 1;
    while (j >= 0 && owner[j] == n - 1) owner[j--] = -1;
    if (j < 0) break;
    ++owner[j];
  }
  r.satisfied = true;
  return r;
}

CriterionReport check_pareto_efficient(const Instance& inst,
                                       const Allocation& alloc,
                                       ParetoMode mode) {
  if (mode == ParetoMode::Exhaustive) return check_pareto_exhaustive(inst, alloc);

  if (!diagnose(inst).unvalued_goods.empty())
    throw PreconditionError(
        "characterization mode requires every good to be valued by some "
        "agent; use exhaustive mode");
  CriterionReport r = check_complete(inst, alloc);
  CriterionReport nw = check_non_wasteful(inst, alloc);
  r.violations.insert(r.violations.end(), nw.violations.begin(),
                      nw.violations.end());
  r.satisfied = r.violations.empty();
  return r;
}

CriterionReport run_check(Criterion c, const Instance& inst,
                          const Allocation& alloc) {
  switch (c) {
    case Criterion::Gef: return check_gef(inst, alloc);
    case Criterion::Gp: return check_gp(inst, alloc);
    case Criterion::Qp: return check_qp(inst, alloc);
    case Criterion::Lp: return check_lp(inst, alloc);
    case Criterion::Complete: return check_complete(inst, alloc);
    case Criterion::NonWasteful: return check_non_wasteful(inst, alloc);
    case Criterion::Pareto:
      return check_pareto_efficient(inst, alloc, ParetoMode::Characterization);
  }
  throw std::logic_error("unreachable");
}

}  // namespace fairnet
