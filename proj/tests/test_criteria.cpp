#include "doctest.h"

#include "fairnet/criteria.hpp"
#include "support.hpp"

using namespace fairnet;

namespace {

Allocation alloc_of(const Instance& inst,
                    const std::vector<std::vector<int>>& bundles) {
  Allocation a(inst);
  for (int i = 0; i < int(bundles.size()); ++i)
    for (int j : bundles[i]) a.assign(i, j);
  return a;
}

}  // namespace

TEST_CASE("envy is restricted to graph neighbors") {
  // both value the sole good; agent 0 takes it
  Instance adjacent = make_instance(2, 1, {{0}, {0}}, {{0, 1}});
  Allocation a = alloc_of(adjacent, {{0}, {}});
  CriterionReport r = check_gef(adjacent, a);
  REQUIRE_FALSE(r.satisfied);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].agent == 1);
  CHECK(r.violations[0].neighbor == 0);

  Instance apart = make_instance(2, 1, {{0}, {0}}, {});
  CHECK(check_gef(apart, alloc_of(apart, {{0}, {}})).satisfied);
}

TEST_CASE("global proportionality compares against the whole good set") {
  Instance solo = make_instance(1, 3, {{0, 1, 2}}, {});
  CHECK(check_gp(solo, alloc_of(solo, {{0, 1, 2}})).satisfied);

  Instance pair = make_instance(2, 2, {{0, 1}, {0, 1}}, {});
  CriterionReport r = check_gp(pair, alloc_of(pair, {{}, {0, 1}}));
  REQUIRE_FALSE(r.satisfied);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].agent == 0);
  CHECK(r.violations[0].deficit == 2);  // 2*0 vs nu_0(R) = 2
}

TEST_CASE("quasi-global proportionality uses the degree-based share") {
  Instance isolated = make_instance(1, 2, {{0, 1}}, {});
  CHECK_FALSE(check_qp(isolated, alloc_of(isolated, {{0}})).satisfied);

  // triangle over one good everyone wants: at most one agent can be happy
  Instance tri = make_instance(3, 1, {{0}, {0}, {0}}, {{0, 1}, {1, 2}, {0, 2}});
  CriterionReport r = check_qp(tri, alloc_of(tri, {{0}, {}, {}}));
  CHECK_FALSE(r.satisfied);
  CHECK(r.violations.size() == 2);

  // star center with 4 liked goods keeps 1: 5*1 >= 4
  Instance star = make_instance(5, 4, {{0, 1, 2, 3}, {}, {}, {}, {}},
                                {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  Allocation a = alloc_of(star, {{0}, {1}, {2}, {3}});
  CriterionReport rs = check_qp(star, a);
  for (const Violation& v : rs.violations) CHECK(v.agent != 0);
}

TEST_CASE("local proportionality examples") {
  Instance tri = make_instance(3, 1, {{0}, {0}, {0}}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(check_lp(tri, Allocation(tri)).satisfied);  // empty: 0 >= 0

  Instance star = make_instance(5, 4, {{0, 1, 2, 3}, {}, {}, {}, {}},
                                {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  Allocation a = alloc_of(star, {{0}, {1}, {2}, {3}});
  // center sees all four goods in its closed neighborhood: 5*1 >= 4
  CHECK(check_lp(star, a).satisfied);
}

TEST_CASE("completeness and non-wastefulness witnesses") {
  Instance inst = make_instance(2, 2, {{0}, {1}}, {});
  CHECK(check_complete(inst, alloc_of(inst, {{0}, {1}})).satisfied);

  CriterionReport r = check_complete(inst, alloc_of(inst, {{0}, {}}));
  REQUIRE_FALSE(r.satisfied);
  CHECK(r.violations[0].good == 1);

  Instance empty = make_instance(1, 0, {{}}, {});
  CHECK(check_complete(empty, Allocation(empty)).satisfied);

  // good 1 is valued only by agent 1 but held by agent 0
  CriterionReport w = check_non_wasteful(inst, alloc_of(inst, {{0, 1}, {}}));
  REQUIRE_FALSE(w.satisfied);
  CHECK(w.violations[0].agent == 0);
  CHECK(w.violations[0].good == 1);

  // a good valued by nobody wastes nothing
  Instance nobody = make_instance(2, 1, {{}, {}}, {});
  CHECK(check_non_wasteful(nobody, alloc_of(nobody, {{0}, {}})).satisfied);
}

TEST_CASE("checker verdicts match the plain definitions on random pairs") {
  Rng rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    Instance inst = random_instance(rng, rng.uniform_int(1, 6),
                                    rng.uniform_int(0, 6), 0.5, 0.5);
    Allocation alloc = corpus::random_allocation(rng, inst);
    CHECK(check_gef(inst, alloc).satisfied == defs::gef_ok(inst, alloc));
    CHECK(check_gp(inst, alloc).satisfied == defs::gp_ok(inst, alloc));
    CHECK(check_qp(inst, alloc).satisfied == defs::qp_ok(inst, alloc));
    CHECK(check_lp(inst, alloc).satisfied == defs::lp_ok(inst, alloc));
    CHECK(check_complete(inst, alloc).satisfied ==
          defs::complete_ok(inst, alloc));
    CHECK(check_non_wasteful(inst, alloc).satisfied ==
          defs::nonwasteful_ok(inst, alloc));
  }
}

TEST_CASE("every envy-free allocation is locally proportional") {
  Rng rng(103);
  for (int trial = 0; trial < 2000; ++trial) {
    Instance inst = random_instance(rng, rng.uniform_int(1, 5),
                                    rng.uniform_int(0, 6), 0.5, 0.5);
    Allocation alloc = corpus::random_allocation(rng, inst);
    if (check_gef(inst, alloc).satisfied)
      CHECK(check_lp(inst, alloc).satisfied);
  }
}

TEST_CASE("on complete graphs LP coincides with GP for complete allocations") {
  Rng rng(107);
  for (int trial = 0; trial < 400; ++trial) {
    int n = rng.uniform_int(1, 5), m = rng.uniform_int(0, 6);
    Instance inst = random_instance(rng, n, m, 1.1, 0.5);  // clique
    // complete allocation: every good somewhere
    Allocation alloc(inst);
    for (int j = 0; j < m; ++j) alloc.assign(rng.uniform_int(0, n - 1), j);
    CHECK(check_lp(inst, alloc).satisfied == check_gp(inst, alloc).satisfied);
  }
}

TEST_CASE("violation witnesses replay against the raw definition") {
  Rng rng(109);
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = random_instance(rng, rng.uniform_int(1, 5),
                                    rng.uniform_int(1, 6), 0.5, 0.5);
    Allocation alloc = corpus::random_allocation(rng, inst);

    for (const Violation& v : check_gef(inst, alloc).violations) {
      CHECK(inst.adjacent(v.agent, v.neighbor));
      CHECK(defs::util(inst, v.agent, alloc, v.agent) <
            defs::util(inst, v.agent, alloc, v.neighbor));
    }
    for (const Violation& v : check_qp(inst, alloc).violations) {
      long long own = defs::util(inst, v.agent, alloc, v.agent);
      CHECK((inst.degree(v.agent) + 1) * own + v.deficit ==
            inst.valued_count(v.agent));
    }
    for (const Violation& v : check_complete(inst, alloc).violations) {
      for (int i = 0; i < inst.agent_count(); ++i)
        CHECK_FALSE(alloc.bundle(i).test(v.good));
    }
    for (const Violation& v : check_non_wasteful(inst, alloc).violations) {
      CHECK(alloc.bundle(v.agent).test(v.good));
      CHECK_FALSE(inst.values(v.agent, v.good));
      CHECK(inst.approvers(v.good).any());
    }
  }
}

TEST_CASE("pareto characterization agrees with exhaustive dominance search") {
  Rng rng(113);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = rng.uniform_int(1, 3), m = rng.uniform_int(1, 4);
    Instance inst = corpus::random_fully_valued(rng, n, m, 0.5, 0.5);
    Allocation alloc = corpus::random_allocation(rng, inst);
    bool ex = check_pareto_efficient(inst, alloc, ParetoMode::Exhaustive)
                  .satisfied;
    bool ch = check_pareto_efficient(inst, alloc, ParetoMode::Characterization)
                  .satisfied;
    CHECK(ex == ch);
    ++checked;
  }
  CHECK(checked == 400);
}

TEST_CASE("pareto mode plumbing") {
  // an unassigned valued good always yields a dominator naming a gainer
  Instance inst = make_instance(2, 2, {{0, 1}, {0}}, {});
  Allocation a = alloc_of(inst, {{}, {0}});
  CriterionReport r = check_pareto_efficient(inst, a, ParetoMode::Exhaustive);
  REQUIRE_FALSE(r.satisfied);
  REQUIRE(r.dominator.has_value());
  CHECK(dominates(inst, a, *r.dominator));
  CHECK_FALSE(r.violations.empty());

  // characterization refuses instances with unvalued goods
  Instance unvalued = make_instance(1, 1, {{}}, {});
  CHECK_THROWS_AS(check_pareto_efficient(unvalued, Allocation(unvalued),
                                         ParetoMode::Characterization),
                  PreconditionError);
  // the exhaustive guard trips on oversized spaces
  Instance big = make_instance(3, 20, {{}, {}, {}}, {});
  CHECK_THROWS_AS(
      check_pareto_efficient(big, Allocation(big), ParetoMode::Exhaustive),
      PreconditionError);
}
