#include "fairnet/instance.hpp"

#include <algorithm>
#include <sstream>

namespace fairnet {

Instance validate_instance(const RawInstance& raw) {
  if (raw.agents < 0 || raw.goods < 0)
    throw ValidationError("agent and good counts must be non-negative");
  if (int(raw.valuations.size()) != raw.agents)
    throw ValidationError("valuation matrix has " +
                          std::to_string(raw.valuations.size()) +
                          " rows, expected " + std::to_string(raw.agents));

  Instance inst;
  inst.n_ = raw.agents;
  inst.m_ = raw.goods;
  inst.approves_.assign(inst.n_, Bitset(inst.m_));
  inst.approvers_.assign(inst.m_, Bitset(inst.n_));

  for (int i = 0; i < inst.n_; ++i) {
    const auto& row = raw.valuations[i];
    if (int(row.size()) != raw.goods)
      throw ValidationError("valuation row " + std::to_string(i) + " has " +
                            std::to_string(row.size()) + " entries, expected " +
                            std::to_string(raw.goods));
    for (int j = 0; j < inst.m_; ++j) {
      if (row[j] != 0 && row[j] != 1)
        throw ValidationError("non-binary valuation entry " +
                              std::to_string(row[j]) + " at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
      if (row[j] == 1) {
        inst.approves_[i].set(j);
        inst.approvers_[j].set(i);
      }
    }
  }

  inst.adj_.assign(inst.n_, {});
  inst.adj_mask_.assign(inst.n_, Bitset(inst.n_));
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : raw.edges) {
    if (u < 0 || u >= inst.n_ || v < 0 || v >= inst.n_)
      throw ValidationError("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") references an invalid agent");
    if (u == v)
      throw ValidationError("self-loop at agent " + std::to_string(u));
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ValidationError("parallel edge in agent graph");
  for (auto [u, v] : edges) {
    inst.adj_[u].push_back(v);
    inst.adj_[v].push_back(u);
    inst.adj_mask_[u].set(v);
    inst.adj_mask_[v].set(u);
  }
  for (auto& nb : inst.adj_) std::sort(nb.begin(), nb.end());
  inst.edges_ = std::move(edges);
  return inst;
}

Instance make_instance(int agents, int goods,
                       const std::vector<std::vector<int>>& approved,
                       const std::vector<std::pair<int, int>>& edges) {
  RawInstance raw;
  raw.agents = agents;
  raw.goods = goods;
  raw.valuations.assign(agents, std::vector<int>(goods, 0));
  for (int i = 0; i < int(approved.size()); ++i)
    for (int j : approved[i]) {
      if (j < 0 || j >= goods)
        throw ValidationError("approved good " + std::to_string(j) +
                              " out of range for agent " + std::to_string(i));
      raw.valuations[i][j] = 1;
    }
  raw.edges = edges;
  return validate_instance(raw);
}

void validate_allocation(const Instance& inst, const Allocation& alloc) {
  if (alloc.agent_count() != inst.agent_count() ||
      alloc.good_count() != inst.good_count())
    throw ValidationError("allocation shape does not match instance");
  Bitset seen(inst.good_count());
  for (int i = 0; i < inst.agent_count(); ++i) {
    const Bitset& b = alloc.bundle(i);
    if (seen.intersects(b)) {
      Bitset dup = seen;
      dup &= b;
      throw ValidationError("good " + std::to_string(dup.first_set()) +
                            " allocated twice");
    }
    seen |= b;
  }
}

InstanceDiagnostics diagnose(const Instance& inst) {
  InstanceDiagnostics d;
  for (int j = 0; j < inst.good_count(); ++j)
    if (inst.approvers(j).none()) d.unvalued_goods.push_back(j);
  for (int i = 0; i < inst.agent_count(); ++i)
    if (inst.degree(i) == 0) d.isolated_agents.push_back(i);

  // BFS for connectivity; vacuously connected when n <= 1.
  int n = inst.agent_count();
  if (n <= 1) {
    d.is_connected = true;
  } else {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : inst.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          ++reached;
          stack.push_back(v);
        }
    }
    d.is_connected = (reached == n);
  }

  d.has_identical_valuations = true;
  for (int i = 1; i < n && d.has_identical_valuations; ++i)
    if (!(inst.approved_goods(i) == inst.approved_goods(0)))
      d.has_identical_valuations = false;
  return d;
}

std::string render_instance(const Instance& inst) {
  std::ostringstream out;
  out << "agents " << inst.agent_count() << "\n";
  out << "goods " << inst.good_count() << "\n";
  for (int i = 0; i < inst.agent_count(); ++i) {
    out << "val " << i;
    inst.approved_goods(i).for_each([&](int j) { out << ' ' << j; });
    out << "\n";
  }
  for (auto [u, v] : inst.edges()) out << "edge " << u << ' ' << v << "\n";
  return out.str();
}

namespace {

struct LineReader {
  std::istringstream in;
  int lineno = 0;
  explicit LineReader(const std::string& text) : in(text) {}

  // Returns false at EOF; skips blanks and '#' comments.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      tokens.clear();
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
      if (tokens.empty() || tokens[0][0] == '#') continue;
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

}  // namespace

Instance parse_instance(const std::string& text) {
  LineReader rd(text);
  std::vector<std::string> t;
  bool have_agents = false, have_goods = false;
  RawInstance raw;
  std::vector<char> val_seen;

  while (rd.next(t)) {
    const std::string& kw = t[0];
    if (kw == "agents") {
      if (have_agents) rd.fail("duplicate 'agents' header");
      if (t.size() != 2) rd.fail("usage: agents <n>");
      raw.agents = rd.to_int(t[1]);
      if (raw.agents < 0) rd.fail("agent count must be non-negative");
      have_agents = true;
    } else if (kw == "goods") {
      if (have_goods) rd.fail("duplicate 'goods' header");
      if (t.size() != 2) rd.fail("usage: goods <m>");
      raw.goods = rd.to_int(t[1]);
      if (raw.goods < 0) rd.fail("good count must be non-negative");
      have_goods = true;
    } else if (kw == "val") {
      if (!have_agents || !have_goods)
        rd.fail("'val' before 'agents'/'goods' headers");
      if (raw.valuations.empty()) {
        raw.valuations.assign(raw.agents, std::vector<int>(raw.goods, 0));
        val_seen.assign(raw.agents, 0);
      }
      if (t.size() < 2) rd.fail("usage: val <agent> [good ...]");
      int i = rd.to_int(t[1]);
      if (i < 0 || i >= raw.agents) rd.fail("agent index out of range");
      if (val_seen[i]) rd.fail("duplicate 'val' line for agent " + t[1]);
      val_seen[i] = 1;
      for (std::size_t k = 2; k < t.size(); ++k) {
        int j = rd.to_int(t[k]);
        if (j < 0 || j >= raw.goods) rd.fail("good index out of range");
        raw.valuations[i][j] = 1;
      }
    } else if (kw == "edge") {
      if (!have_agents) rd.fail("'edge' before 'agents' header");
      if (t.size() != 3) rd.fail("usage: edge <u> <v>");
      raw.edges.emplace_back(rd.to_int(t[1]), rd.to_int(t[2]));
    } else {
      rd.fail("unknown directive '" + kw + "'");
    }
  }
  if (!have_agents || !have_goods)
    throw ParseError("missing 'agents'/'goods' headers");
  if (raw.valuations.empty())
    raw.valuations.assign(raw.agents, std::vector<int>(raw.goods, 0));
  try {
    return validate_instance(raw);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

std::string render_allocation(const Allocation& alloc) {
  std::ostringstream out;
  for (int i = 0; i < alloc.agent_count(); ++i) {
    if (alloc.bundle(i).none()) continue;
    out << "bundle " << i;
    alloc.bundle(i).for_each([&](int j) { out << ' ' << j; });
    out << "\n";
  }
  return out.str();
}

Allocation parse_allocation(const std::string& text, const Instance& inst) {
  LineReader rd(text);
  std::vector<std::string> t;
  Allocation alloc(inst);
  while (rd.next(t)) {
    if (t[0] != "bundle") rd.fail("unknown directive '" + t[0] + "'");
    if (t.size() < 2) rd.fail("usage: bundle <agent> [good ...]");
    int i = rd.to_int(t[1]);
    if (i < 0 || i >= inst.agent_count()) rd.fail("agent index out of range");
    for (std::size_t k = 2; k < t.size(); ++k) {
      int j = rd.to_int(t[k]);
      if (j < 0 || j >= inst.good_count()) rd.fail("good index out of range");
      alloc.assign(i, j);
    }
  }
  try {
    validate_allocation(inst, alloc);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("invalid allocation: ") + e.what());
  }
  return alloc;
}

}  // namespace fairnet
