#include "fairnet/oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fairnet {

namespace {

void guard(int n, int limit, const char* what) {
  if (n > limit)
    throw PreconditionError(std::string(what) + " oracle limited to " +
                            std::to_string(limit) + " vertices/variables, got " +
                            std::to_string(n));
}

[[noreturn]] void broken_certificate(const char* which) {
  throw std::logic_error(std::string("oracle produced an invalid ") + which +
                         " certificate");
}

}  // namespace

std::optional<CliqueCertificate> oracle_clique(const CliqueInstance& src) {
  guard(src.graph.n, 20, "clique");
  int n = src.graph.n, k = src.k;
  if (k > n) return std::nullopt;

  std::vector<int> pick;
  // lexicographic k-subset search; extend() tries vertices above 'from'
  auto extend = [&](auto&& self, int from) -> bool {
    if (int(pick.size()) == k) return true;
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int u : pick)
        if (!src.graph.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(v);
      if (self(self, v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  CliqueCertificate cert{pick};
  if (!verify_clique(src, cert)) broken_certificate("clique");
  return cert;
}

std::optional<ColoringCertificate> oracle_3coloring(const ColoringInstance& src) {
  guard(src.graph.n, 15, "3-coloring");
  int n = src.graph.n;
  std::vector<int> color(n, 0);
  auto assign = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int c = 1; c <= 3; ++c) {
      bool ok = true;
      for (int u : src.graph.adj[v])
        if (u < v && color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (self(self, v + 1)) return true;
    }
    color[v] = 0;
    return false;
  };
  if (!assign(assign, 0)) return std::nullopt;
  ColoringCertificate cert{color};
  if (!verify_coloring(src, cert)) broken_certificate("coloring");
  return cert;
}

void validate_lsat_structure(const LsatFormula& f) {
  auto check_lit = [&](Lit l) {
    if (l == 0 || lit_var(l) > f.variable_count)
      throw ValidationError("literal out of range");
  };
  std::vector<std::set<Lit>> clauses;  // pairs expanded, then isolated
  for (const auto& p : f.pairs) {
    check_lit(p.s);
    check_lit(p.shared);
    check_lit(p.t);
    std::set<Lit> a{p.s, p.shared}, b{p.shared, p.t};
    if (a.size() != 2 || b.size() != 2)
      throw ValidationError("coupled clause collapses to one literal");
    if (p.s == p.t)
      throw ValidationError("coupled pair shares two literals");
    clauses.push_back(a);
    clauses.push_back(b);
  }
  for (const auto& cl : f.isolated) {
    for (Lit l : cl) check_lit(l);
    std::set<Lit> s(cl.begin(), cl.end());
    if (s.size() != 3)
      throw ValidationError("isolated clause must have three distinct literals");
    clauses.push_back(s);
  }
  // only allowed overlap: the shared literal inside one coupled pair
  for (std::size_t a = 0; a < clauses.size(); ++a)
    for (std::size_t b = a + 1; b < clauses.size(); ++b) {
      bool coupled_mates =
          b == a + 1 && a % 2 == 0 && a / 2 < f.pairs.size();
      std::vector<Lit> common;
      std::set_intersection(clauses[a].begin(), clauses[a].end(),
                            clauses[b].begin(), clauses[b].end(),
                            std::back_inserter(common));
      if (coupled_mates) {
        if (common.size() != 1 || common[0] != f.pairs[a / 2].shared)
          throw ValidationError("coupled pair does not share exactly its "
                                "designated literal");
      } else if (!common.empty()) {
        throw ValidationError("clauses outside a coupled pair share a literal");
      }
    }
}

std::optional<LsatAssignment> oracle_lsat(const LsatFormula& f) {
  validate_lsat_structure(f);
  guard(f.variable_count, 20, "lsat");
  int n = f.variable_count;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    LsatAssignment tau(n);
    for (int v = 0; v < n; ++v) tau[v] = (mask >> v) & 1;
    if (lsat_satisfies(f, tau)) return tau;
  }
  return std::nullopt;
}

std::optional<CuttingCertificate> oracle_cutting(const CuttingInstance& src) {
  guard(src.graph.n, 15, "cutting");
  int n = src.graph.n, l = src.part_size, k = src.budget;
  if (l < 0 || l > n || k < 0) return std::nullopt;

  std::vector<int> part;
  auto boundary = [&]() {
    std::set<int> bd;
    std::vector<char> in_part(n, 0);
    for (int v : part) in_part[v] = 1;
    for (int v : part)
      for (int u : src.graph.adj[v])
        if (!in_part[u]) bd.insert(u);
    return std::vector<int>(bd.begin(), bd.end());
  };
  auto extend = [&](auto&& self, int from) -> std::optional<CuttingCertificate> {
    if (int(part.size()) == l) {
      std::vector<int> sep = boundary();
      if (int(sep.size()) <= k) return CuttingCertificate{part, sep};
      return std::nullopt;
    }
    for (int v = from; v < n; ++v) {
      part.push_back(v);
      if (auto c = self(self, v + 1)) return c;
      part.pop_back();
    }
    return std::nullopt;
  };
  auto cert = extend(extend, 0);
  if (cert && !verify_cutting(src, *cert)) broken_certificate("cutting");
  return cert;
}

}  // namespace fairnet
