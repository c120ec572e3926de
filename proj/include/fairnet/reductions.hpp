#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fairnet/instance.hpp"
#include "fairnet/sources.hpp"

namespace fairnet {

enum class ReductionKind {
  CuttingTwoTypes,    // cut a part of given size -> envy-freeness target
  CliqueGoods,        // clique -> envy-freeness, few goods
  CliqueVertexCover,  // clique -> envy-freeness, small vertex cover
  LsatPaths,          // linear SAT -> envy-freeness on (stitched) paths
  ThreeColoringLpa    // 3-coloring -> local proportionality target
};

const char* reduction_kind_name(ReductionKind k);

// True when the artifact's fairness target is local proportionality;
// otherwise the target is graph envy-freeness.
bool reduction_target_is_lp(ReductionKind k);

// --- index layouts -------------------------------------------------------
// Agents and goods are emitted at fixed positions so that role maps and
// witness maps are auditable. Each layout exposes the positions.

struct CuttingLayout {
  int n = 0;           // source vertices
  int coveted_count = 0, wtype_count = 0, utype_count = 0;
  int greedy(int i) const { return i; }
  int happy(int i) const { return n + i; }
  int trigger() const { return 2 * n; }
  int coveted(int t) const { return t; }
  int wtype(int t) const { return coveted_count + t; }
  int utype(int t) const { return coveted_count + wtype_count + t; }
};

struct CliqueGoodsLayout {
  int n = 0, m = 0, k = 0, l = 0;  // l = k choose 2
  int vertex(int i) const { return i; }
  int edge_agent(int t) const { return n + t; }
  int s_agent(int j) const { return n + m + j; }               // j < l + 1
  int w_agent(int i, int j) const { return n + m + l + 1 + i * (l + 1) + j; }
  int popular(int t) const { return t; }
  int specialized(int t) const { return l + t; }
  int dummy(int t) const { return l + k + t; }  // t < l + 1
};

struct CliqueVcLayout {
  int n = 0, m = 0, k = 0;
  int pair_count() const { return k * (k - 1) / 2; }
  // pairs (i,j), i < j < k, in lexicographic order
  int pair_index(int i, int j) const;
  int key(int i) const { return i; }
  int guard(int pair, int t) const { return k + pair * m + t; }  // t < m
  int residual(int z) const { return k + pair_count() * m + z; }
  int core(int v) const { return v; }
  int dummy(int pair, int t) const { return n + pair * (m - 1) + t; }
};

struct LsatLayout {
  int vars = 0, q = 0, p = 0;
  bool stitched = false;
  int connector_count = 0;
  // goods
  int y_good(int i) const { return i; }
  int pos_good(int i) const { return vars + i; }
  int neg_good(int i) const { return 2 * vars + i; }
  int g_good(int t) const { return 3 * vars + t; }
  int d_good(int t) const { return 3 * vars + q + t; }
  int h_good(int c) const { return 3 * vars + q + p + c; }
  int literal_good(Lit l) const {
    return lit_positive(l) ? pos_good(lit_var(l) - 1) : neg_good(lit_var(l) - 1);
  }
  // agents, emitted one path component at a time:
  // [Y_i X_i] per variable, then [D_t C_t], then [G_t A_t B_t]
  int y_agent(int i) const { return 2 * i; }
  int x_agent(int i) const { return 2 * i + 1; }
  int d_agent(int t) const { return 2 * vars + 2 * t; }
  int c_agent(int t) const { return 2 * vars + 2 * t + 1; }
  int g_agent(int t) const { return 2 * vars + 2 * p + 3 * t; }
  int a_agent(int t) const { return 2 * vars + 2 * p + 3 * t + 1; }
  int b_agent(int t) const { return 2 * vars + 2 * p + 3 * t + 2; }
  int connector(int c) const { return 2 * vars + 2 * p + 3 * q + c; }
};

struct ColoringLayout {
  int n = 0, m = 0;
  // b is a color in {1,2,3}
  int f_agent(int b, int t) const { return (b - 1) * m + t; }
  int a_agent(int b) const { return 3 * m + (b - 1); }
  int b_agent(int b) const { return 3 * m + 3 + (b - 1); }
  int c_agent(int b, int i) const { return 3 * m + 6 + (b - 1) * (n + 2) + i; }
  int core(int v) const { return v; }
  int guard_good(int b, int t) const { return n + (b - 1) * m + t; }
  int a_good(int b) const { return n + 3 * m + (b - 1); }
  int x_good(int b) const { return n + 3 * m + 3 + (b - 1); }
};

using ReductionLayout =
    std::variant<std::monostate, CuttingLayout, CliqueGoodsLayout,
                 CliqueVcLayout, LsatLayout, ColoringLayout>;

using SourceInstance = std::variant<CuttingInstance, CliqueInstance,
                                    LsatFormula, ColoringInstance>;

// The reduced fair-division instance together with role labels and the
// source it came from. Role labels follow the layout above; the sidecar
// format is `agent <idx> <role>` / `good <idx> <role>` lines.
struct ReductionArtifact {
  ReductionKind kind{};
  bool trivial_no = false;  // canonical infeasible stand-in instance
  Instance instance;
  std::vector<std::string> agent_roles, good_roles;
  SourceInstance source;
  ReductionLayout layout;
};

// Constructions. Each checks its preconditions and emits counts/roles
// matching the layout formulas (asserted in tests).
ReductionArtifact reduce_cutting_to_two_types(const CuttingInstance&);
ReductionArtifact reduce_clique_goods(const CliqueInstance&);
ReductionArtifact reduce_clique_vertexcover(const CliqueInstance&);
ReductionArtifact reduce_lsat_paths(const LsatFormula&, bool stitch);
ReductionArtifact reduce_3col_lpa(const ColoringInstance&);

// Forward witness map: a verified source certificate becomes the allocation
// built in the corresponding correctness argument. PreconditionError when
// the witness does not verify against the stored source.
Allocation witness_to_allocation(const ReductionArtifact&,
                                 const SourceCertificate&);

// Backward witness map: an allocation satisfying the artifact's target
// criteria becomes a source certificate, which is re-verified before being
// returned. PreconditionError when the allocation fails the target
// criteria; ValidationError when the extracted certificate does not verify.
SourceCertificate allocation_to_witness(const ReductionArtifact&,
                                        const Allocation&);

std::string render_roles(const ReductionArtifact&);

}  // namespace fairnet
