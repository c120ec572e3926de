#include "fairnet/sources.hpp"

#include <algorithm>
#include <sstream>

namespace fairnet {

SimpleGraph SimpleGraph::make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw ValidationError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ValidationError("edge endpoint out of range");
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ValidationError("parallel edge");
  SimpleGraph g;
  g.n = n;
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& a : g.adj) std::sort(a.begin(), a.end());
  return g;
}

bool SimpleGraph::adjacent(int u, int v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

bool verify_cutting(const CuttingInstance& src, const CuttingCertificate& c) {
  const SimpleGraph& g = src.graph;
  std::vector<int> label(g.n, 0);  // 0 = Y, 1 = X, 2 = S
  for (int v : c.part) {
    if (v < 0 || v >= g.n || label[v]) return false;
    label[v] = 1;
  }
  for (int v : c.separator) {
    if (v < 0 || v >= g.n || label[v]) return false;
    label[v] = 2;
  }
  if (int(c.part.size()) != src.part_size) return false;
  if (int(c.separator.size()) > src.budget) return false;
  for (auto [u, v] : g.edges) {
    bool xy = (label[u] == 1 && label[v] == 0) || (label[u] == 0 && label[v] == 1);
    if (xy) return false;
  }
  return true;
}

bool verify_clique(const CliqueInstance& src, const CliqueCertificate& cert) {
  const auto& c = cert.vertices;
  if (int(c.size()) != src.k) return false;
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (c[a] < 0 || c[a] >= src.graph.n) return false;
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (c[a] == c[b]) return false;
      if (!src.graph.adjacent(c[a], c[b])) return false;
    }
  }
  return true;
}

bool verify_coloring(const ColoringInstance& src, const ColoringCertificate& cert) {
  const auto& c = cert.colors;
  if (int(c.size()) != src.graph.n) return false;
  for (int col : c)
    if (col < 1 || col > 3) return false;
  for (auto [u, v] : src.graph.edges)
    if (c[u] == c[v]) return false;
  return true;
}

static bool lit_true(Lit l, const LsatAssignment& tau) {
  bool v = tau[lit_var(l) - 1];
  return lit_positive(l) ? v : !v;
}

bool lsat_satisfies(const LsatFormula& f, const LsatAssignment& tau) {
  if (int(tau.size()) != f.variable_count) return false;
  for (const auto& p : f.pairs) {
    if (!lit_true(p.s, tau) && !lit_true(p.shared, tau)) return false;
    if (!lit_true(p.shared, tau) && !lit_true(p.t, tau)) return false;
  }
  for (const auto& cl : f.isolated) {
    if (!lit_true(cl[0], tau) && !lit_true(cl[1], tau) && !lit_true(cl[2], tau))
      return false;
  }
  return true;
}

// --- parsing ---

namespace {

struct Tok {
  std::istringstream in;
  int lineno = 0;
  explicit Tok(const std::string& text) : in(text) {}

  bool next(std::vector<std::string>& t) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      t.clear();
      std::istringstream ls(line);
      std::string w;
      while (ls >> w) t.push_back(w);
      if (t.empty() || t[0][0] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  }

  int to_int(const std::string& tok) const {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      fail("expected integer, got '" + tok + "'");
    }
  }
};

struct GraphAccum {
  int n = -1;
  std::vector<std::pair<int, int>> edges;

  // Returns true when the directive belonged to the graph grammar.
  bool consume(Tok& rd, const std::vector<std::string>& t) {
    if (t[0] == "vertices") {
      if (n >= 0) rd.fail("duplicate 'vertices' header");
      if (t.size() != 2) rd.fail("usage: vertices <n>");
      n = rd.to_int(t[1]);
      return true;
    }
    if (t[0] == "edge") {
      if (n < 0) rd.fail("'edge' before 'vertices'");
      if (t.size() != 3) rd.fail("usage: edge <u> <v>");
      edges.emplace_back(rd.to_int(t[1]), rd.to_int(t[2]));
      return true;
    }
    return false;
  }

  SimpleGraph finish() const {
    if (n < 0) throw ParseError("missing 'vertices' header");
    try {
      return SimpleGraph::make(n, edges);
    } catch (const ValidationError& e) {
      throw ParseError(std::string("invalid graph: ") + e.what());
    }
  }
};

}  // namespace

SimpleGraph parse_source_graph(const std::string& text) {
  Tok rd(text);
  GraphAccum g;
  std::vector<std::string> t;
  while (rd.next(t))
    if (!g.consume(rd, t)) rd.fail("unknown directive '" + t[0] + "'");
  return g.finish();
}

CuttingInstance parse_cutting(const std::string& text) {
  Tok rd(text);
  GraphAccum g;
  std::vector<std::string> t;
  int l = -1, k = -1;
  while (rd.next(t)) {
    if (g.consume(rd, t)) continue;
    if (t[0] == "cut") {
      if (l >= 0) rd.fail("duplicate 'cut' line");
      if (t.size() != 3) rd.fail("usage: cut <part-size> <budget>");
      l = rd.to_int(t[1]);
      k = rd.to_int(t[2]);
    } else {
      rd.fail("unknown directive '" + t[0] + "'");
    }
  }
  if (l < 0) throw ParseError("missing 'cut' line");
  CuttingInstance src{g.finish(), l, k};
  if (l > src.graph.n || k > src.graph.n || k < 0)
    throw ParseError("cut parameters out of range");
  return src;
}

CliqueInstance parse_clique(const std::string& text) {
  Tok rd(text);
  GraphAccum g;
  std::vector<std::string> t;
  int k = -1;
  while (rd.next(t)) {
    if (g.consume(rd, t)) continue;
    if (t[0] == "clique") {
      if (k >= 0) rd.fail("duplicate 'clique' line");
      if (t.size() != 2) rd.fail("usage: clique <k>");
      k = rd.to_int(t[1]);
    } else {
      rd.fail("unknown directive '" + t[0] + "'");
    }
  }
  if (k < 1) throw ParseError("missing or invalid 'clique' line (k >= 1)");
  return CliqueInstance{g.finish(), k};
}

ColoringInstance parse_coloring(const std::string& text) {
  return ColoringInstance{parse_source_graph(text)};
}

LsatFormula parse_lsat(const std::string& text) {
  Tok rd(text);
  std::vector<std::string> t;
  LsatFormula f;
  bool have_vars = false;
  auto lit = [&](const std::string& tok) {
    int v = rd.to_int(tok);
    if (v == 0 || lit_var(v) > f.variable_count)
      rd.fail("literal '" + tok + "' out of range");
    return v;
  };
  while (rd.next(t)) {
    if (t[0] == "variables") {
      if (have_vars) rd.fail("duplicate 'variables' header");
      if (t.size() != 2) rd.fail("usage: variables <n>");
      f.variable_count = rd.to_int(t[1]);
      if (f.variable_count < 0) rd.fail("negative variable count");
      have_vars = true;
    } else if (t[0] == "pair") {
      if (!have_vars) rd.fail("'pair' before 'variables'");
      if (t.size() != 4) rd.fail("usage: pair <s> <shared> <t>");
      f.pairs.push_back({lit(t[1]), lit(t[2]), lit(t[3])});
    } else if (t[0] == "clause") {
      if (!have_vars) rd.fail("'clause' before 'variables'");
      if (t.size() != 4) rd.fail("usage: clause <a> <b> <c>");
      f.isolated.push_back({lit(t[1]), lit(t[2]), lit(t[3])});
    } else {
      rd.fail("unknown directive '" + t[0] + "'");
    }
  }
  if (!have_vars) throw ParseError("missing 'variables' header");
  return f;
}

// --- rendering ---

static void render_graph(std::ostringstream& out, const SimpleGraph& g) {
  out << "vertices " << g.n << "\n";
  for (auto [u, v] : g.edges) out << "edge " << u << ' ' << v << "\n";
}

std::string render_cutting(const CuttingInstance& src) {
  std::ostringstream out;
  render_graph(out, src.graph);
  out << "cut " << src.part_size << ' ' << src.budget << "\n";
  return out.str();
}

std::string render_clique(const CliqueInstance& src) {
  std::ostringstream out;
  render_graph(out, src.graph);
  out << "clique " << src.k << "\n";
  return out.str();
}

std::string render_coloring(const ColoringInstance& src) {
  std::ostringstream out;
  render_graph(out, src.graph);
  return out.str();
}

std::string render_lsat(const LsatFormula& f) {
  std::ostringstream out;
  out << "variables " << f.variable_count << "\n";
  for (const auto& p : f.pairs)
    out << "pair " << p.s << ' ' << p.shared << ' ' << p.t << "\n";
  for (const auto& c : f.isolated)
    out << "clause " << c[0] << ' ' << c[1] << ' ' << c[2] << "\n";
  return out.str();
}

}  // namespace fairnet
