#include "fairnet/generator.hpp"

#include <stdexcept>

#include "fairnet/reductions.hpp"

namespace fairnet {

Instance random_instance(Rng& rng, int agents, int goods, double edge_density,
                         double valuation_density) {
  RawInstance raw;
  raw.agents = agents;
  raw.goods = goods;
  raw.valuations.assign(agents, std::vector<int>(goods, 0));
  for (int i = 0; i < agents; ++i)
    for (int j = 0; j < goods; ++j)
      raw.valuations[i][j] = rng.bernoulli(valuation_density) ? 1 : 0;
  for (int u = 0; u < agents; ++u)
    for (int v = u + 1; v < agents; ++v)
      if (rng.bernoulli(edge_density)) raw.edges.emplace_back(u, v);
  return validate_instance(raw);
}

namespace {

Instance structured_instance(Rng& rng, const std::string& family, int n, int m,
                             double valuation_density) {
  std::vector<std::pair<int, int>> edges;
  if (family == "path") {
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  } else if (family == "star") {
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  } else if (family == "clique") {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  } else {
    throw PreconditionError("unknown generator family '" + family + "'");
  }
  RawInstance raw;
  raw.agents = n;
  raw.goods = m;
  raw.edges = std::move(edges);
  raw.valuations.assign(n, std::vector<int>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      raw.valuations[i][j] = rng.bernoulli(valuation_density) ? 1 : 0;
  return validate_instance(raw);
}

Instance reduced_3col_instance(Rng& rng, int n, double edge_density) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(edge_density)) edges.emplace_back(u, v);
  ColoringInstance src{SimpleGraph::make(n, edges)};
  return reduce_3col_lpa(src).instance;
}

}  // namespace

std::vector<GeneratedInstance> generate_corpus(const GenOptions& opts) {
  if (opts.count < 0) throw PreconditionError("negative corpus count");
  Rng rng(opts.seed);
  std::vector<GeneratedInstance> out;
  out.reserve(opts.count);
  for (int idx = 0; idx < opts.count; ++idx) {
    Instance inst = [&] {
      if (opts.family == "er")
        return random_instance(rng, opts.agents, opts.goods, opts.edge_density,
                               opts.valuation_density);
      if (opts.family == "reduced-3col")
        return reduced_3col_instance(rng, opts.agents, opts.edge_density);
      return structured_instance(rng, opts.family, opts.agents, opts.goods,
                                 opts.valuation_density);
    }();
    char name[128];
    std::snprintf(name, sizeof(name), "%s_n%d_m%d_s%llu_%03d",
                  opts.family.c_str(), opts.agents, opts.goods,
                  (unsigned long long)opts.seed, idx);
    out.push_back({name, std::move(inst)});
  }
  return out;
}

}  // namespace fairnet
