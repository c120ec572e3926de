#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairnet/instance.hpp"

namespace fairnet {

enum class Criterion { Gef, Gp, Qp, Lp, Complete, NonWasteful, Pareto };

const char* criterion_name(Criterion c);
std::optional<Criterion> criterion_from_name(const std::string& name);

// One witness per failed constraint. Which fields are meaningful depends on
// the criterion: envy uses (agent, neighbor); the proportionality checks use
// (agent, deficit) where deficit is the integer shortfall of the
// cross-multiplied comparison; completeness uses (good); non-wastefulness
// uses (agent, good) for the holder and the wasted good.
struct Violation {
  int agent = -1;
  int neighbor = -1;
  int good = -1;
  long long deficit = 0;
};

struct CriterionReport {
  bool satisfied = true;
  std::vector<Violation> violations;
  // Exhaustive Pareto mode only: an allocation that dominates the input.
  std::optional<Allocation> dominator;
};

// nu_i(pi(i)) >= nu_i(pi(j)) for every edge neighbor j of i.
CriterionReport check_gef(const Instance&, const Allocation&);
// n * nu_i(pi(i)) >= nu_i(R)
CriterionReport check_gp(const Instance&, const Allocation&);
// (d_i + 1) * nu_i(pi(i)) >= nu_i(R)
CriterionReport check_qp(const Instance&, const Allocation&);
// (d_i + 1) * nu_i(pi(i)) >= sum over closed neighborhood of nu_i(pi(j))
CriterionReport check_lp(const Instance&, const Allocation&);
// every good assigned
CriterionReport check_complete(const Instance&, const Allocation&);
// no good held by a zero-valuer while some other agent values it
CriterionReport check_non_wasteful(const Instance&, const Allocation&);

enum class ParetoMode { Characterization, Exhaustive };

// Characterization mode = complete and non-wasteful; it requires that every
// good is valued by at least one agent (PreconditionError otherwise,
// directing the caller to exhaustive mode). Exhaustive mode searches every
// assignment of goods to agents-or-nobody for a dominating allocation and is
// guarded to at most 2^24 candidates.
CriterionReport check_pareto_efficient(const Instance&, const Allocation&,
                                       ParetoMode mode);

CriterionReport run_check(Criterion c, const Instance&, const Allocation&);

// True iff b dominates a: nobody worse off, someone strictly better.
bool dominates(const Instance&, const Allocation& a, const Allocation& b);

}  // namespace fairnet
