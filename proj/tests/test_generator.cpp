#include "doctest.h"

#include "fairnet/generator.hpp"
#include "fairnet/reductions.hpp"
#include "support.hpp"

using namespace fairnet;

TEST_CASE("the same seed reproduces the corpus byte for byte") {
  GenOptions opts;
  opts.family = "er";
  opts.count = 5;
  opts.agents = 5;
  opts.goods = 6;
  opts.seed = 42;
  auto a = generate_corpus(opts);
  auto b = generate_corpus(opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(render_instance(a[i].instance) == render_instance(b[i].instance));
  }
  opts.seed = 43;
  auto c = generate_corpus(opts);
  bool all_same = true;
  for (std::size_t i = 0; i < a.size(); ++i)
    all_same &= render_instance(a[i].instance) ==
                render_instance(c[i].instance);
  CHECK_FALSE(all_same);
}

TEST_CASE("path family produces max degree two") {
  GenOptions opts;
  opts.family = "path";
  opts.count = 3;
  opts.agents = 5;
  opts.goods = 3;
  opts.seed = 7;
  for (const auto& entry : generate_corpus(opts)) {
    for (int i = 0; i < entry.instance.agent_count(); ++i)
      CHECK(entry.instance.degree(i) <= 2);
    CHECK(diagnose(entry.instance).is_connected);
  }
}

TEST_CASE("star and clique families have their shapes") {
  GenOptions opts;
  opts.family = "star";
  opts.count = 1;
  opts.agents = 6;
  opts.goods = 2;
  opts.seed = 7;
  Instance star = generate_corpus(opts)[0].instance;
  CHECK(star.degree(0) == 5);
  for (int i = 1; i < 6; ++i) CHECK(star.degree(i) == 1);

  opts.family = "clique";
  Instance clique = generate_corpus(opts)[0].instance;
  for (int i = 0; i < 6; ++i) CHECK(clique.degree(i) == 5);
}

TEST_CASE("reduced-3col family carries the reduction's counting shape") {
  GenOptions opts;
  opts.family = "reduced-3col";
  opts.count = 4;
  opts.agents = 4;  // source vertices
  opts.seed = 11;
  for (const auto& entry : generate_corpus(opts)) {
    int agents = entry.instance.agent_count();
    int goods = entry.instance.good_count();
    // agents = 3m + 6 + 3(n+2), goods = n + 3m + 6 for some m >= 0
    int n = opts.agents;
    int m_from_goods = (goods - n - 6) / 3;
    CHECK(goods == n + 3 * m_from_goods + 6);
    CHECK(agents == 3 * m_from_goods + 6 + 3 * (n + 2));
  }
}

TEST_CASE("unknown family is rejected") {
  GenOptions opts;
  opts.family = "frobnicate";
  CHECK_THROWS_AS(generate_corpus(opts), PreconditionError);
}
