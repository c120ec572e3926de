#include "fairnet/reductions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fairnet/criteria.hpp"
#include "fairnet/oracles.hpp"

namespace fairnet {

const char* reduction_kind_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::CuttingTwoTypes: return "cutting";
    case ReductionKind::CliqueGoods: return "clique-goods";
    case ReductionKind::CliqueVertexCover: return "clique-vc";
    case ReductionKind::LsatPaths: return "lsat";
    case ReductionKind::ThreeColoringLpa: return "3col";
  }
  return "?";
}

bool reduction_target_is_lp(ReductionKind k) {
  return k == ReductionKind::ThreeColoringLpa;
}

int CliqueVcLayout::pair_index(int i, int j) const {
  // pairs (0,1),(0,2),...,(0,k-1),(1,2),... in order
  return i * k - i * (i + 1) / 2 + (j - i - 1);
}

namespace {

ReductionArtifact make_trivial_no(ReductionKind kind, SourceInstance src) {
  ReductionArtifact art;
  art.kind = kind;
  art.trivial_no = true;
  art.instance = make_instance(2, 1, {{0}, {0}}, {{0, 1}});
  art.agent_roles = {"trivial-no:0", "trivial-no:1"};
  art.good_roles = {"trivial-no:contested"};
  art.source = std::move(src);
  return art;
}

std::string tag(const char* role, int a) {
  return std::string(role) + ":" + std::to_string(a);
}
std::string tag(const char* role, int a, int b) {
  return std::string(role) + ":" + std::to_string(a) + "," + std::to_string(b);
}

// Target criteria for the artifact: the fairness predicate of its problem
// plus completeness over valued goods and non-wastefulness.
bool passes_target(const ReductionArtifact& art, const Allocation& alloc) {
  const Instance& inst = art.instance;
  bool fair = reduction_target_is_lp(art.kind)
                  ? check_lp(inst, alloc).satisfied
                  : check_gef(inst, alloc).satisfied;
  if (!fair || !check_non_wasteful(inst, alloc).satisfied) return false;
  Bitset assigned = alloc.assigned_goods();
  for (int j = 0; j < inst.good_count(); ++j)
    if (inst.approvers(j).any() && !assigned.test(j)) return false;
  return true;
}

}  // namespace

// --- cutting -> two agent types -----------------------------------------

ReductionArtifact reduce_cutting_to_two_types(const CuttingInstance& src) {
  int n = src.graph.n, l = src.part_size, k = src.budget;
  if (l < 0 || l > n)
    throw PreconditionError("part size must lie in [0, n]; a larger part "
                            "leaves a negative w-type good count");
  if (k < 0 || k > n)
    throw PreconditionError("separator budget must lie in [0, n]");

  CuttingLayout lay;
  lay.n = n;
  lay.coveted_count = l;
  lay.wtype_count = n - l + 1;
  lay.utype_count = l + k;

  int agents = 2 * n + 1;
  int goods = lay.coveted_count + lay.wtype_count + lay.utype_count;

  std::vector<std::vector<int>> approved(agents);
  for (int t = 0; t < lay.coveted_count; ++t)
    for (int a = 0; a < agents; ++a) approved[a].push_back(lay.coveted(t));
  for (int t = 0; t < lay.wtype_count; ++t) {
    for (int i = 0; i < n; ++i) approved[lay.greedy(i)].push_back(lay.wtype(t));
    approved[lay.trigger()].push_back(lay.wtype(t));
  }
  for (int t = 0; t < lay.utype_count; ++t)
    for (int i = 0; i < n; ++i) approved[lay.happy(i)].push_back(lay.utype(t));

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(lay.greedy(i), lay.happy(i));
  for (auto [a, b] : src.graph.edges) {
    edges.emplace_back(lay.greedy(a), lay.happy(b));
    edges.emplace_back(lay.greedy(b), lay.happy(a));
  }
  for (int i = 0; i < n; ++i) edges.emplace_back(lay.trigger(), lay.greedy(i));

  ReductionArtifact art;
  art.kind = ReductionKind::CuttingTwoTypes;
  art.instance = make_instance(agents, goods, approved, edges);
  art.agent_roles.resize(agents);
  for (int i = 0; i < n; ++i) {
    art.agent_roles[lay.greedy(i)] = tag("greedy", i);
    art.agent_roles[lay.happy(i)] = tag("happy", i);
  }
  art.agent_roles[lay.trigger()] = "trigger";
  art.good_roles.resize(goods);
  for (int t = 0; t < lay.coveted_count; ++t)
    art.good_roles[lay.coveted(t)] = tag("coveted", t);
  for (int t = 0; t < lay.wtype_count; ++t)
    art.good_roles[lay.wtype(t)] = tag("w-type", t);
  for (int t = 0; t < lay.utype_count; ++t)
    art.good_roles[lay.utype(t)] = tag("u-type", t);
  art.source = src;
  art.layout = lay;
  return art;
}

// --- clique -> few goods --------------------------------------------------

ReductionArtifact reduce_clique_goods(const CliqueInstance& src) {
  int n = src.graph.n, m = int(src.graph.edges.size()), k = src.k;
  if (k < 1) throw PreconditionError("clique size must be at least 1");
  int l = k * (k - 1) / 2;
  if (m < l || k > n) return make_trivial_no(ReductionKind::CliqueGoods, src);

  CliqueGoodsLayout lay;
  lay.n = n;
  lay.m = m;
  lay.k = k;
  lay.l = l;

  int agents = n + m + (l + 1) + n * (l + 1);
  int goods = l + k + (l + 1);

  std::vector<std::vector<int>> approved(agents);
  for (int t = 0; t < l; ++t)
    for (int a = 0; a < agents; ++a) approved[a].push_back(lay.popular(t));
  for (int t = 0; t < k; ++t)
    for (int i = 0; i < n; ++i)
      approved[lay.vertex(i)].push_back(lay.specialized(t));
  for (int j = 0; j <= l; ++j) approved[lay.s_agent(j)].push_back(lay.dummy(j));

  std::vector<std::pair<int, int>> edges;
  for (int t = 0; t < m; ++t) {
    auto [a, b] = src.graph.edges[t];
    for (int j = 0; j <= l; ++j)
      edges.emplace_back(lay.edge_agent(t), lay.s_agent(j));
    edges.emplace_back(lay.edge_agent(t), lay.vertex(a));
    edges.emplace_back(lay.edge_agent(t), lay.vertex(b));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= l; ++j) {
      edges.emplace_back(lay.vertex(i), lay.w_agent(i, j));
      for (int j2 = j + 1; j2 <= l; ++j2)
        edges.emplace_back(lay.w_agent(i, j), lay.w_agent(i, j2));
    }

  ReductionArtifact art;
  art.kind = ReductionKind::CliqueGoods;
  art.instance = make_instance(agents, goods, approved, edges);
  art.agent_roles.resize(agents);
  for (int i = 0; i < n; ++i) art.agent_roles[lay.vertex(i)] = tag("vertex", i);
  for (int t = 0; t < m; ++t)
    art.agent_roles[lay.edge_agent(t)] = tag("edge", t);
  for (int j = 0; j <= l; ++j) art.agent_roles[lay.s_agent(j)] = tag("s", j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= l; ++j)
      art.agent_roles[lay.w_agent(i, j)] = tag("w", i, j);
  art.good_roles.resize(goods);
  for (int t = 0; t < l; ++t)
    art.good_roles[lay.popular(t)] = tag("popular", t);
  for (int t = 0; t < k; ++t)
    art.good_roles[lay.specialized(t)] = tag("specialized", t);
  for (int j = 0; j <= l; ++j) art.good_roles[lay.dummy(j)] = tag("dummy", j);
  art.source = src;
  art.layout = lay;
  return art;
}

// --- clique -> small vertex cover ----------------------------------------

ReductionArtifact reduce_clique_vertexcover(const CliqueInstance& src) {
  int n = src.graph.n, m = int(src.graph.edges.size()), k = src.k;
  if (k < 1) throw PreconditionError("clique size must be at least 1");
  if (k > n) return make_trivial_no(ReductionKind::CliqueVertexCover, src);
  // with no edges there is no clique of size >= 2, and the per-pair dummy
  // count m-1 would be negative
  if (k >= 2 && m == 0)
    return make_trivial_no(ReductionKind::CliqueVertexCover, src);

  CliqueVcLayout lay;
  lay.n = n;
  lay.m = m;
  lay.k = k;
  int pairs = lay.pair_count();

  int agents = k + pairs * m + (n - k);
  int goods = n + pairs * (m - 1);

  std::vector<std::vector<int>> approved(agents);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i) approved[lay.key(i)].push_back(lay.core(v));
    for (int z = 0; z < n - k; ++z)
      approved[lay.residual(z)].push_back(lay.core(v));
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int p = lay.pair_index(i, j);
      for (int t = 0; t < m; ++t) {
        auto [a, b] = src.graph.edges[t];
        for (int v = 0; v < n; ++v)
          if (v != a && v != b) approved[lay.guard(p, t)].push_back(lay.core(v));
        for (int d = 0; d < m - 1; ++d)
          approved[lay.guard(p, t)].push_back(lay.dummy(p, d));
      }
    }

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      int p = lay.pair_index(i, j);
      for (int t = 0; t < m; ++t) {
        edges.emplace_back(lay.guard(p, t), lay.key(i));
        edges.emplace_back(lay.guard(p, t), lay.key(j));
      }
    }
  for (int z = 0; z < n - k; ++z)
    for (int i = 0; i < k; ++i) edges.emplace_back(lay.residual(z), lay.key(i));

  ReductionArtifact art;
  art.kind = ReductionKind::CliqueVertexCover;
  art.instance = make_instance(agents, goods, approved, edges);
  art.agent_roles.resize(agents);
  for (int i = 0; i < k; ++i) art.agent_roles[lay.key(i)] = tag("key", i);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int t = 0; t < m; ++t)
        art.agent_roles[lay.guard(lay.pair_index(i, j), t)] =
            tag("guard", i, j) + ":" + std::to_string(t);
  for (int z = 0; z < n - k; ++z)
    art.agent_roles[lay.residual(z)] = tag("residual", z);
  art.good_roles.resize(goods);
  for (int v = 0; v < n; ++v) art.good_roles[lay.core(v)] = tag("core", v);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int t = 0; t < m - 1; ++t)
        art.good_roles[lay.dummy(lay.pair_index(i, j), t)] =
            tag("dummy", i, j) + ":" + std::to_string(t);
  art.source = src;
  art.layout = lay;
  return art;
}

// --- linear SAT -> disjoint paths ----------------------------------------

ReductionArtifact reduce_lsat_paths(const LsatFormula& src, bool stitch) {
  validate_lsat_structure(src);
  LsatLayout lay;
  lay.vars = src.variable_count;
  lay.q = int(src.pairs.size());
  lay.p = int(src.isolated.size());
  lay.stitched = stitch;
  int components = lay.vars + lay.p + lay.q;
  lay.connector_count = stitch && components > 1 ? components - 1 : 0;

  int agents = 2 * lay.vars + 2 * lay.p + 3 * lay.q + lay.connector_count;
  int goods = 3 * lay.vars + lay.q + lay.p + lay.connector_count;

  std::vector<std::vector<int>> approved(agents);
  std::vector<std::pair<int, int>> edges;

  // component endpoints in emission order, for stitching
  std::vector<std::pair<int, int>> ends;

  for (int i = 0; i < lay.vars; ++i) {
    approved[lay.y_agent(i)] = {lay.y_good(i)};
    approved[lay.x_agent(i)] = {lay.y_good(i), lay.pos_good(i), lay.neg_good(i)};
    edges.emplace_back(lay.y_agent(i), lay.x_agent(i));
    ends.emplace_back(lay.y_agent(i), lay.x_agent(i));
  }
  for (int t = 0; t < lay.p; ++t) {
    approved[lay.d_agent(t)] = {lay.d_good(t)};
    approved[lay.c_agent(t)] = {lay.d_good(t)};
    for (Lit l : src.isolated[t])
      approved[lay.c_agent(t)].push_back(lay.literal_good(l));
    edges.emplace_back(lay.d_agent(t), lay.c_agent(t));
    ends.emplace_back(lay.d_agent(t), lay.c_agent(t));
  }
  for (int t = 0; t < lay.q; ++t) {
    const auto& pr = src.pairs[t];
    approved[lay.g_agent(t)] = {lay.g_good(t)};
    approved[lay.a_agent(t)] = {lay.g_good(t), lay.literal_good(pr.s),
                                lay.literal_good(pr.shared),
                                lay.literal_good(pr.t)};
    approved[lay.b_agent(t)] = {lay.literal_good(pr.s), lay.literal_good(pr.t)};
    edges.emplace_back(lay.g_agent(t), lay.a_agent(t));
    edges.emplace_back(lay.a_agent(t), lay.b_agent(t));
    ends.emplace_back(lay.g_agent(t), lay.b_agent(t));
  }
  for (int c = 0; c < lay.connector_count; ++c) {
    approved[lay.connector(c)] = {lay.h_good(c)};
    edges.emplace_back(ends[c].second, lay.connector(c));
    edges.emplace_back(lay.connector(c), ends[c + 1].first);
  }

  ReductionArtifact art;
  art.kind = ReductionKind::LsatPaths;
  art.instance = make_instance(agents, goods, approved, edges);
  art.agent_roles.resize(agents);
  art.good_roles.resize(goods);
  for (int i = 0; i < lay.vars; ++i) {
    art.agent_roles[lay.y_agent(i)] = tag("Y", i);
    art.agent_roles[lay.x_agent(i)] = tag("X", i);
    art.good_roles[lay.y_good(i)] = tag("y", i);
    art.good_roles[lay.pos_good(i)] = tag("lit+", i);
    art.good_roles[lay.neg_good(i)] = tag("lit-", i);
  }
  for (int t = 0; t < lay.p; ++t) {
    art.agent_roles[lay.d_agent(t)] = tag("D", t);
    art.agent_roles[lay.c_agent(t)] = tag("C", t);
    art.good_roles[lay.d_good(t)] = tag("d", t);
  }
  for (int t = 0; t < lay.q; ++t) {
    art.agent_roles[lay.g_agent(t)] = tag("G", t);
    art.agent_roles[lay.a_agent(t)] = tag("A", t);
    art.agent_roles[lay.b_agent(t)] = tag("B", t);
    art.good_roles[lay.g_good(t)] = tag("g", t);
  }
  for (int c = 0; c < lay.connector_count; ++c) {
    art.agent_roles[lay.connector(c)] = tag("connector", c);
    art.good_roles[lay.h_good(c)] = tag("h", c);
  }
  art.source = src;
  art.layout = lay;
  return art;
}

// --- 3-coloring -> local proportionality ----------------------------------

ReductionArtifact reduce_3col_lpa(const ColoringInstance& src) {
  int n = src.graph.n, m = int(src.graph.edges.size());
  ColoringLayout lay;
  lay.n = n;
  lay.m = m;

  int agents = 3 * m + 6 + 3 * (n + 2);
  int goods = n + 3 * m + 6;

  std::vector<std::vector<int>> approved(agents);
  std::vector<std::pair<int, int>> edges;
  for (int b = 1; b <= 3; ++b) {
    for (int v = 0; v < n; ++v) {
      approved[lay.a_agent(b)].push_back(lay.core(v));
      for (int i = 0; i <= n + 1; ++i)
        approved[lay.c_agent(b, i)].push_back(lay.core(v));
    }
    approved[lay.a_agent(b)].push_back(lay.a_good(b));
    for (int i = 0; i <= n + 1; ++i)
      approved[lay.c_agent(b, i)].push_back(lay.a_good(b));
    approved[lay.b_agent(b)].push_back(lay.x_good(b));

    for (int t = 0; t < m; ++t) {
      auto [p, q] = src.graph.edges[t];
      approved[lay.f_agent(b, t)] = {lay.guard_good(b, t), lay.core(p),
                                     lay.core(q), lay.x_good(b), lay.a_good(b)};
      edges.emplace_back(lay.a_agent(b), lay.f_agent(b, t));
      edges.emplace_back(lay.b_agent(b), lay.f_agent(b, t));
      edges.emplace_back(lay.c_agent(b, 0), lay.f_agent(b, t));
    }
    for (int i = 0; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 1; ++j)
        edges.emplace_back(lay.c_agent(b, i), lay.c_agent(b, j));
  }

  ReductionArtifact art;
  art.kind = ReductionKind::ThreeColoringLpa;
  art.instance = make_instance(agents, goods, approved, edges);
  art.agent_roles.resize(agents);
  art.good_roles.resize(goods);
  for (int b = 1; b <= 3; ++b) {
    for (int t = 0; t < m; ++t)
      art.agent_roles[lay.f_agent(b, t)] = tag("F", b, t);
    art.agent_roles[lay.a_agent(b)] = tag("A", b);
    art.agent_roles[lay.b_agent(b)] = tag("B", b);
    for (int i = 0; i <= n + 1; ++i)
      art.agent_roles[lay.c_agent(b, i)] = tag("C", b, i);
    for (int t = 0; t < m; ++t)
      art.good_roles[lay.guard_good(b, t)] = tag("guard", b, t);
    art.good_roles[lay.a_good(b)] = tag("a", b);
    art.good_roles[lay.x_good(b)] = tag("x", b);
  }
  for (int v = 0; v < n; ++v) art.good_roles[lay.core(v)] = tag("core", v);
  art.source = src;
  art.layout = lay;
  return art;
}

// --- witness maps ----------------------------------------------------------

namespace {

Allocation forward_cutting(const ReductionArtifact& art,
                           const CuttingCertificate& cert) {
  const auto& src = std::get<CuttingInstance>(art.source);
  const auto& lay = std::get<CuttingLayout>(art.layout);
  if (!verify_cutting(src, cert))
    throw PreconditionError("witness is not a valid cut of the source");

  Allocation alloc(art.instance);
  std::vector<char> in_part(lay.n, 0);
  for (std::size_t t = 0; t < cert.part.size(); ++t) {
    alloc.assign(lay.greedy(cert.part[t]), lay.coveted(int(t)));
    in_part[cert.part[t]] = 1;
  }
  int w = 0;
  for (int i = 0; i < lay.n; ++i)
    if (!in_part[i]) alloc.assign(lay.greedy(i), lay.wtype(w++));
  alloc.assign(lay.trigger(), lay.wtype(w++));

  // one u-type good per happy agent of part + separator, surplus to the
  // first such agent (or to happy 0 when both sets are empty)
  std::vector<int> receivers;
  for (int v : cert.part) receivers.push_back(v);
  for (int v : cert.separator) receivers.push_back(v);
  std::sort(receivers.begin(), receivers.end());
  for (int t = 0; t < lay.utype_count; ++t) {
    int who = t < int(receivers.size())
                  ? receivers[t]
                  : (receivers.empty() ? 0 : receivers[0]);
    alloc.assign(lay.happy(who), lay.utype(t));
  }
  return alloc;
}

CuttingCertificate backward_cutting(const ReductionArtifact& art,
                                    const Allocation& alloc) {
  const auto& lay = std::get<CuttingLayout>(art.layout);
  CuttingCertificate cert;
  Bitset coveted(art.instance.good_count());
  for (int t = 0; t < lay.coveted_count; ++t) coveted.set(lay.coveted(t));
  Bitset utype(art.instance.good_count());
  for (int t = 0; t < lay.utype_count; ++t) utype.set(lay.utype(t));
  for (int i = 0; i < lay.n; ++i) {
    if (alloc.bundle(lay.greedy(i)).intersects(coveted)) cert.part.push_back(i);
  }
  std::vector<char> in_part(lay.n, 0);
  for (int v : cert.part) in_part[v] = 1;
  for (int i = 0; i < lay.n; ++i)
    if (alloc.bundle(lay.happy(i)).intersects(utype) && !in_part[i])
      cert.separator.push_back(i);
  return cert;
}

Allocation forward_clique_goods(const ReductionArtifact& art,
                                const CliqueCertificate& cert) {
  const auto& src = std::get<CliqueInstance>(art.source);
  const auto& lay = std::get<CliqueGoodsLayout>(art.layout);
  if (!verify_clique(src, cert))
    throw PreconditionError("witness is not a clique of the requested size");

  std::vector<char> in_clique(lay.n, 0);
  for (int v : cert.vertices) in_clique[v] = 1;
  Allocation alloc(art.instance);
  int pop = 0;
  for (int t = 0; t < lay.m; ++t) {
    auto [a, b] = src.graph.edges[t];
    if (in_clique[a] && in_clique[b])
      alloc.assign(lay.edge_agent(t), lay.popular(pop++));
  }
  for (std::size_t t = 0; t < cert.vertices.size(); ++t)
    alloc.assign(lay.vertex(cert.vertices[t]), lay.specialized(int(t)));
  for (int j = 0; j <= lay.l; ++j) alloc.assign(lay.s_agent(j), lay.dummy(j));
  return alloc;
}

CliqueCertificate backward_clique_goods(const ReductionArtifact& art,
                                        const Allocation& alloc) {
  const auto& lay = std::get<CliqueGoodsLayout>(art.layout);
  Bitset specialized(art.instance.good_count());
  for (int t = 0; t < lay.k; ++t) specialized.set(lay.specialized(t));
  CliqueCertificate cert;
  for (int i = 0; i < lay.n; ++i)
    if (alloc.bundle(lay.vertex(i)).intersects(specialized))
      cert.vertices.push_back(i);
  return cert;
}

Allocation forward_clique_vc(const ReductionArtifact& art,
                             const CliqueCertificate& cert) {
  const auto& src = std::get<CliqueInstance>(art.source);
  const auto& lay = std::get<CliqueVcLayout>(art.layout);
  if (!verify_clique(src, cert))
    throw PreconditionError("witness is not a clique of the requested size");

  Allocation alloc(art.instance);
  std::vector<char> used(lay.n, 0);
  for (int i = 0; i < lay.k; ++i) {
    alloc.assign(lay.key(i), lay.core(cert.vertices[i]));
    used[cert.vertices[i]] = 1;
  }
  int z = 0;
  for (int v = 0; v < lay.n; ++v)
    if (!used[v]) alloc.assign(lay.residual(z++), lay.core(v));

  const auto& edges = src.graph.edges;
  for (int i = 0; i < lay.k; ++i)
    for (int j = i + 1; j < lay.k; ++j) {
      int p = lay.pair_index(i, j);
      std::pair<int, int> e{std::min(cert.vertices[i], cert.vertices[j]),
                            std::max(cert.vertices[i], cert.vertices[j])};
      int special =
          int(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
      int d = 0;
      for (int t = 0; t < lay.m; ++t)
        if (t != special) alloc.assign(lay.guard(p, t), lay.dummy(p, d++));
    }
  return alloc;
}

CliqueCertificate backward_clique_vc(const ReductionArtifact& art,
                                     const Allocation& alloc) {
  const auto& lay = std::get<CliqueVcLayout>(art.layout);
  CliqueCertificate cert;
  for (int i = 0; i < lay.k; ++i) {
    alloc.bundle(lay.key(i)).for_each([&](int good) {
      if (good < lay.n) cert.vertices.push_back(good);
    });
  }
  std::sort(cert.vertices.begin(), cert.vertices.end());
  return cert;
}

Allocation forward_lsat(const ReductionArtifact& art,
                        const LsatAssignment& tau) {
  const auto& src = std::get<LsatFormula>(art.source);
  const auto& lay = std::get<LsatLayout>(art.layout);
  if (!lsat_satisfies(src, tau))
    throw PreconditionError("witness does not satisfy the formula");

  auto holds = [&](Lit l) {
    bool v = tau[lit_var(l) - 1];
    return lit_positive(l) ? v : !v;
  };

  Allocation alloc(art.instance);
  for (int i = 0; i < lay.vars; ++i) alloc.assign(lay.y_agent(i), lay.y_good(i));
  for (int t = 0; t < lay.p; ++t) alloc.assign(lay.d_agent(t), lay.d_good(t));
  for (int t = 0; t < lay.q; ++t) alloc.assign(lay.g_agent(t), lay.g_good(t));
  for (int c = 0; c < lay.connector_count; ++c)
    alloc.assign(lay.connector(c), lay.h_good(c));

  // each literal good: the false literal anchors its variable gadget; a
  // true literal goes to the clause gadget holding it, or back to the
  // variable gadget when no clause mentions it
  std::vector<int> owner(art.instance.good_count(), -1);
  for (int i = 0; i < lay.vars; ++i) {
    owner[lay.pos_good(i)] = lay.x_agent(i);
    owner[lay.neg_good(i)] = lay.x_agent(i);
  }
  for (int t = 0; t < lay.p; ++t)
    for (Lit l : src.isolated[t])
      if (holds(l)) owner[lay.literal_good(l)] = lay.c_agent(t);
  for (int t = 0; t < lay.q; ++t) {
    const auto& pr = src.pairs[t];
    bool sv = holds(pr.s), lv = holds(pr.shared), tv = holds(pr.t);
    if (lv) owner[lay.literal_good(pr.shared)] = lay.a_agent(t);
    if (sv) owner[lay.literal_good(pr.s)] =
        tv ? lay.a_agent(t) : lay.b_agent(t);
    if (tv) owner[lay.literal_good(pr.t)] = lay.b_agent(t);
  }
  for (int i = 0; i < lay.vars; ++i) {
    alloc.assign(owner[lay.pos_good(i)], lay.pos_good(i));
    alloc.assign(owner[lay.neg_good(i)], lay.neg_good(i));
  }
  return alloc;
}

LsatAssignment backward_lsat(const ReductionArtifact& art,
                             const Allocation& alloc) {
  const auto& lay = std::get<LsatLayout>(art.layout);
  LsatAssignment tau(lay.vars);
  for (int i = 0; i < lay.vars; ++i) {
    const Bitset& b = alloc.bundle(lay.x_agent(i));
    bool has_pos = b.test(lay.pos_good(i));
    bool has_neg = b.test(lay.neg_good(i));
    if (has_neg && !has_pos)
      tau[i] = true;
    else if (has_pos && !has_neg)
      tau[i] = false;
    else
      tau[i] = true;  // holding both (or neither): value is immaterial
  }
  return tau;
}

Allocation forward_3col(const ReductionArtifact& art,
                        const ColoringCertificate& cert) {
  const auto& src = std::get<ColoringInstance>(art.source);
  const auto& lay = std::get<ColoringLayout>(art.layout);
  if (!verify_coloring(src, cert))
    throw PreconditionError("witness is not a proper 3-coloring");

  Allocation alloc(art.instance);
  for (int b = 1; b <= 3; ++b) {
    alloc.assign(lay.a_agent(b), lay.a_good(b));
    alloc.assign(lay.b_agent(b), lay.x_good(b));
    for (int t = 0; t < lay.m; ++t)
      alloc.assign(lay.f_agent(b, t), lay.guard_good(b, t));
  }
  for (int v = 0; v < lay.n; ++v)
    alloc.assign(lay.a_agent(cert.colors[v]), lay.core(v));
  return alloc;
}

ColoringCertificate backward_3col(const ReductionArtifact& art,
                                  const Allocation& alloc) {
  const auto& lay = std::get<ColoringLayout>(art.layout);
  ColoringCertificate cert{std::vector<int>(lay.n, 0)};
  for (int b = 1; b <= 3; ++b) {
    alloc.bundle(lay.a_agent(b)).for_each([&](int good) {
      if (good < lay.n) cert.colors[good] = b;
    });
  }
  return cert;
}

}  // namespace

Allocation witness_to_allocation(const ReductionArtifact& art,
                                 const SourceCertificate& witness) {
  if (art.trivial_no)
    throw PreconditionError(
        "the source was rejected up front; no witness can exist");

  Allocation alloc = [&] {
    switch (art.kind) {
      case ReductionKind::CuttingTwoTypes:
        if (auto* c = std::get_if<CuttingCertificate>(&witness))
          return forward_cutting(art, *c);
        break;
      case ReductionKind::CliqueGoods:
        if (auto* c = std::get_if<CliqueCertificate>(&witness))
          return forward_clique_goods(art, *c);
        break;
      case ReductionKind::CliqueVertexCover:
        if (auto* c = std::get_if<CliqueCertificate>(&witness))
          return forward_clique_vc(art, *c);
        break;
      case ReductionKind::LsatPaths:
        if (auto* c = std::get_if<LsatAssignment>(&witness))
          return forward_lsat(art, *c);
        break;
      case ReductionKind::ThreeColoringLpa:
        if (auto* c = std::get_if<ColoringCertificate>(&witness))
          return forward_3col(art, *c);
        break;
    }
    throw PreconditionError("certificate type does not match the reduction");
  }();
  validate_allocation(art.instance, alloc);
  return alloc;
}

SourceCertificate allocation_to_witness(const ReductionArtifact& art,
                                        const Allocation& alloc) {
  if (art.trivial_no)
    throw PreconditionError("the canonical no-instance has no fair allocation");
  validate_allocation(art.instance, alloc);
  if (!passes_target(art, alloc))
    throw PreconditionError(
        "allocation does not satisfy the artifact's target criteria");

  SourceCertificate cert;
  bool ok = false;
  switch (art.kind) {
    case ReductionKind::CuttingTwoTypes: {
      auto c = backward_cutting(art, alloc);
      ok = verify_cutting(std::get<CuttingInstance>(art.source), c);
      cert = std::move(c);
      break;
    }
    case ReductionKind::CliqueGoods: {
      auto c = backward_clique_goods(art, alloc);
      ok = verify_clique(std::get<CliqueInstance>(art.source), c);
      cert = std::move(c);
      break;
    }
    case ReductionKind::CliqueVertexCover: {
      auto c = backward_clique_vc(art, alloc);
      ok = verify_clique(std::get<CliqueInstance>(art.source), c);
      cert = std::move(c);
      break;
    }
    case ReductionKind::LsatPaths: {
      auto c = backward_lsat(art, alloc);
      ok = lsat_satisfies(std::get<LsatFormula>(art.source), c);
      cert = std::move(c);
      break;
    }
    case ReductionKind::ThreeColoringLpa: {
      auto c = backward_3col(art, alloc);
      ok = verify_coloring(std::get<ColoringInstance>(art.source), c);
      cert = std::move(c);
      break;
    }
  }
  if (!ok)
    throw ValidationError(
        "extracted certificate does not verify against the source");
  return cert;
}

std::string render_roles(const ReductionArtifact& art) {
  std::ostringstream out;
  for (std::size_t i = 0; i < art.agent_roles.size(); ++i)
    out << "agent " << i << ' ' << art.agent_roles[i] << "\n";
  for (std::size_t j = 0; j < art.good_roles.size(); ++j)
    out << "good " << j << ' ' << art.good_roles[j] << "\n";
  return out.str();
}

}  // namespace fairnet
