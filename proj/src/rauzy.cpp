#include "palrich/rauzy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "palrich/error.hpp"
#include "palrich/palindromes.hpp"

namespace palrich {

namespace {

std::optional<std::uint32_t> find_sorted(const std::vector<std::string>& v, std::string_view key) {
  auto it = std::lower_bound(v.begin(), v.end(), key,
                             [](const std::string& a, std::string_view b) { return std::string_view(a) < b; });
  if (it == v.end() || *it != key) return std::nullopt;
  return static_cast<std::uint32_t>(it - v.begin());
}

std::string to_index(const RauzyGraph& g, const Word& w) {
  return w.alphabet() == g.alphabet ? std::string(w.letters()) : std::string(Word::parse(w.str(), g.alphabet).letters());
}

// Edge ids along the walk; throws NotAWalk.
std::vector<std::uint32_t> walk_edges(const RauzyGraph& g, const std::vector<std::string>& walk) {
  if (walk.empty()) throw Error(Errc::kNotAWalk, "empty walk");
  std::vector<std::uint32_t> ids;
  for (std::size_t k = 0; k < walk.size(); ++k) {
    if (walk[k].size() != g.n || !g.vertex_id(walk[k])) {
      throw Error(Errc::kNotAWalk, "walk vertex " + std::to_string(k) + " is not a vertex of the graph");
    }
    if (k == 0) continue;
    // At order 0 every edge is a loop on the empty vertex, so a vertex
    // sequence does not determine the edges.
    if (g.n == 0) throw Error(Errc::kNotAWalk, "walks at order 0 are not determined by their vertices");
    const std::string& a = walk[k - 1];
    const std::string& b = walk[k];
    if (a.substr(1) != b.substr(0, b.size() - 1)) {
      throw Error(Errc::kNotAWalk, "consecutive walk vertices do not overlap");
    }
    std::string e = a + b.back();
    auto id = std::lower_bound(g.edges.begin(), g.edges.end(), e,
                               [](const RauzyGraph::Edge& x, const std::string& y) { return x.word < y; });
    if (id == g.edges.end() || id->word != e) throw Error(Errc::kNotAWalk, "missing edge in walk");
    ids.push_back(static_cast<std::uint32_t>(id - g.edges.begin()));
  }
  return ids;
}

std::string label_of(const std::vector<std::string>& walk) {
  std::string label = walk.front();
  for (std::size_t k = 1; k < walk.size(); ++k) label.push_back(walk[k].back());
  return label;
}

std::string quoted(std::string_view letters, const Alphabet& a) { return "\"" + render(letters, a) + "\""; }

}  // namespace

std::optional<std::uint32_t> RauzyGraph::vertex_id(std::string_view v) const { return find_sorted(vertices, v); }

std::optional<std::uint32_t> ReducedRauzyGraph::vertex_id(std::string_view v) const {
  return find_sorted(vertices, v);
}

std::size_t ReducedRauzyGraph::out_degree(std::uint32_t v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [v](const Edge& e) { return e.from == v; }));
}

// ----------------------------------------------------------------- build

RauzyGraph build_rauzy(const FactorIndex& idx, std::size_t n) {
  if (n > idx.n_max()) throw Error(Errc::kOutOfRange, "Rauzy graph order needs n <= n_max");
  RauzyGraph g;
  g.n = n;
  g.alphabet = idx.alphabet();
  auto verts = idx.factors(n);
  g.vertices.assign(verts.begin(), verts.end());
  g.out.resize(g.vertices.size());
  g.in.resize(g.vertices.size());
  for (const auto& e : idx.factors(n + 1)) {
    RauzyGraph::Edge edge;
    edge.from = *g.vertex_id(std::string_view(e).substr(0, n));
    edge.to = *g.vertex_id(std::string_view(e).substr(1));
    edge.word = e;
    auto id = static_cast<std::uint32_t>(g.edges.size());
    g.out[edge.from].push_back(id);
    g.in[edge.to].push_back(id);
    g.edges.push_back(std::move(edge));
  }
  return g;
}

ReducedRauzyGraph reduce(const RauzyGraph& g) {
  ReducedRauzyGraph rg;
  rg.n = g.n;
  rg.alphabet = g.alphabet;
  std::vector<std::uint32_t> specials;
  for (std::uint32_t v = 0; v < g.vertices.size(); ++v) {
    if (g.is_special(v)) {
      specials.push_back(v);
      rg.vertices.push_back(g.vertices[v]);
    }
  }

  if (specials.empty()) {
    if (g.vertices.empty()) throw Error(Errc::kUnstableIndex, "empty Rauzy graph");
    ReducedRauzyGraph::Cycle cycle;
    std::vector<std::string> walk{g.vertices[0]};
    std::uint32_t cur = 0;
    for (std::size_t steps = 0; steps < g.vertices.size(); ++steps) {
      if (g.out[cur].size() != 1) throw Error(Errc::kUnstableIndex, "vertex without successor");
      cur = g.edges[g.out[cur][0]].to;
      walk.push_back(g.vertices[cur]);
      if (cur == 0) break;
    }
    if (cur != 0 || walk.size() != g.vertices.size() + 1) {
      throw Error(Errc::kUnstableIndex, "graph without special vertices is not a single cycle");
    }
    cycle.label = label_of(walk);
    walk.pop_back();
    cycle.vertices = std::move(walk);
    rg.cycle = std::move(cycle);
    return rg;
  }

  std::size_t covered = 0;
  for (std::uint32_t k = 0; k < specials.size(); ++k) {
    std::uint32_t v = specials[k];
    for (std::uint32_t e : g.out[v]) {
      std::string label = g.vertices[v] + g.edges[e].word.back();
      std::uint32_t cur = g.edges[e].to;
      ++covered;
      while (!g.is_special(cur)) {
        if (g.out[cur].empty()) throw Error(Errc::kUnstableIndex, "vertex without successor");
        std::uint32_t next = g.out[cur][0];
        label.push_back(g.edges[next].word.back());
        cur = g.edges[next].to;
        ++covered;
      }
      rg.edges.push_back({k, *rg.vertex_id(g.vertices[cur]), std::move(label)});
    }
  }
  if (covered != g.edges.size()) throw Error(Errc::kUnstableIndex, "some edges lie on no simple path");
  std::sort(rg.edges.begin(), rg.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.label) < std::tie(b.from, b.label);
  });
  return rg;
}

// ----------------------------------------------------------------- walks

Word path_label(const RauzyGraph& g, const std::vector<Word>& walk) {
  std::vector<std::string> w;
  for (const auto& v : walk) w.push_back(to_index(g, v));
  walk_edges(g, w);
  return Word(g.alphabet, label_of(w));
}

bool label_is_rich_check(const RauzyGraph& g, const std::vector<Word>& walk) {
  return is_rich_incremental(path_label(g, walk)).rich;
}

PathReversal path_reversal_facts(const RauzyGraph& g, const std::vector<Word>& walk) {
  std::vector<std::string> w;
  for (const auto& v : walk) w.push_back(to_index(g, v));
  walk_edges(g, w);
  std::vector<std::string> mirror;
  for (auto it = w.rbegin(); it != w.rend(); ++it) mirror.push_back(reversed(*it));
  PathReversal r;
  r.palindromic = mirror == w;
  try {
    walk_edges(g, mirror);
    r.reversal_exists = true;
  } catch (const Error& e) {
    if (e.code() != Errc::kNotAWalk) throw;
  }
  return r;
}

// ------------------------------------------------------------ super graph

SuperReduction super_reduce(const ReducedRauzyGraph& rg) {
  SuperReduction out;
  auto& sg = out.graph;
  sg.n = rg.n;
  sg.alphabet = rg.alphabet;
  out.facts.n = rg.n;
  if (rg.cycle) {
    sg.from_cycle = true;
    sg.reversal_closed = true;
    const std::string& v = rg.cycle->vertices.front();
    sg.cycle_class = std::min(v, reversed(v));
    return out;
  }

  sg.special_count = rg.vertices.size();
  sg.reversal_closed = true;
  for (const auto& v : rg.vertices) {
    std::string r = reversed(v);
    sg.classes.push_back(std::min(v, r));
    if (r == v) ++sg.special_palindromes;
    if (!rg.vertex_id(r)) sg.reversal_closed = false;
  }
  std::sort(sg.classes.begin(), sg.classes.end());
  sg.classes.erase(std::unique(sg.classes.begin(), sg.classes.end()), sg.classes.end());
  auto class_of = [&](std::uint32_t v) {
    const std::string& x = rg.vertices[v];
    return *find_sorted(sg.classes, std::min(x, reversed(x)));
  };

  if (sg.reversal_closed && 2 * sg.s() != sg.special_count + sg.special_palindromes) {
    throw Error(Errc::kInconsistent, "2s - p differs from the number of special factors");
  }

  std::set<std::string> labels;
  for (const auto& e : rg.edges) labels.insert(e.label);
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::string>> undirected;
  for (std::size_t k = 0; k < rg.edges.size(); ++k) {
    const auto& e = rg.edges[k];
    PathFacts::Fact f;
    f.edge = k;
    f.palindromic = is_palindrome(e.label);
    std::string rl = reversed(e.label);
    f.reversal_present = labels.count(rl) > 0;
    f.to_reversal = rg.vertices[e.to] == reversed(rg.vertices[e.from]);
    if (!f.palindromic) ++out.facts.nonpalindromic;
    out.facts.facts.push_back(f);

    std::uint32_t a = class_of(e.from), b = class_of(e.to);
    if (a == b) {
      if (!f.to_reversal) sg.loops.push_back({a, e.label});
      continue;
    }
    if (a > b) std::swap(a, b);
    undirected.emplace(a, b, std::min(e.label, rl));
  }
  for (const auto& [a, b, label] : undirected) sg.edges.push_back({a, b, label});
  return out;
}

bool is_tree(const SuperReducedRauzyGraph& sg) {
  const std::size_t s = sg.s();
  if (s == 0 || !sg.loops.empty() || sg.edges.size() != s - 1) return false;
  std::vector<std::uint32_t> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = s;
  for (const auto& e : sg.edges) {
    auto ra = root(e.a), rb = root(e.b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

PathCondition palindromic_path_condition(const ReducedRauzyGraph& rg, const PathFacts& facts) {
  PathCondition c;
  for (const auto& f : facts.facts) {
    if (f.to_reversal && !f.palindromic) {
      c.holds = false;
      c.witness = rg.edges[f.edge].label;
      break;
    }
  }
  return c;
}

PathCountingIdentity path_counting_identity(const FactorIndex& idx, const ReducedRauzyGraph& rg,
                                            const SuperReduction& sr) {
  if (rg.cycle || rg.vertices.empty()) throw Error(Errc::kNotApplicable, "no special factors at this order");
  const std::size_t n = rg.n;
  PathCountingIdentity r;
  std::vector<std::string> pals;
  for (std::size_t len : {n, n + 1}) {
    for (const auto& f : idx.factors(len)) {
      if (is_palindrome(f)) pals.push_back(f);
    }
  }
  r.lhs = static_cast<long long>(pals.size());
  const auto& sg = sr.graph;
  r.rhs = static_cast<long long>(rg.edges.size()) - 2 * (static_cast<long long>(sg.s()) - 1) +
          static_cast<long long>(sg.special_palindromes);

  std::map<std::string, std::size_t> central;
  for (const auto& f : sr.facts.facts) {
    if (!f.palindromic) continue;
    const std::string& label = rg.edges[f.edge].label;
    std::size_t len = (label.size() - n) % 2 == 0 ? n : n + 1;
    ++central[label.substr((label.size() - len) / 2, len)];
  }
  for (const auto& q : pals) {
    bool special = q.size() == n && rg.vertex_id(q).has_value();
    std::size_t expected = special ? 0 : 1;
    auto it = central.find(q);
    std::size_t got = it == central.end() ? 0 : it->second;
    if (got != expected) {
      r.central_factors_ok = false;
      r.central_witness = q;
      break;
    }
  }
  return r;
}

// -------------------------------------------------------------------- DOT

std::string to_dot(const RauzyGraph& g) {
  std::ostringstream os;
  os << "digraph rauzy_" << g.n << " {\n";
  for (const auto& v : g.vertices) os << "  " << quoted(v, g.alphabet) << ";\n";
  for (const auto& e : g.edges) {
    os << "  " << quoted(g.vertices[e.from], g.alphabet) << " -> " << quoted(g.vertices[e.to], g.alphabet)
       << " [label=" << quoted(e.word, g.alphabet) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const ReducedRauzyGraph& rg) {
  std::ostringstream os;
  os << "digraph reduced_" << rg.n << " {\n";
  if (rg.cycle) {
    // No special factors: one vertex carrying the whole cycle.
    const std::string v = quoted(rg.cycle->vertices.front(), rg.alphabet);
    os << "  graph [note=\"no special factors\"];\n";
    os << "  " << v << ";\n";
    os << "  " << v << " -> " << v << " [label=" << quoted(rg.cycle->label, rg.alphabet) << "];\n";
  }
  for (const auto& v : rg.vertices) os << "  " << quoted(v, rg.alphabet) << ";\n";
  for (const auto& e : rg.edges) {
    os << "  " << quoted(rg.vertices[e.from], rg.alphabet) << " -> " << quoted(rg.vertices[e.to], rg.alphabet)
       << " [label=" << quoted(e.label, rg.alphabet) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const SuperReducedRauzyGraph& sg) {
  auto node = [&](std::uint32_t c) { return "\"[" + render(sg.classes[c], sg.alphabet) + "]\""; };
  std::ostringstream os;
  os << "graph super_" << sg.n << " {\n";
  if (sg.from_cycle) {
    os << "  graph [note=\"no special factors\"];\n";
    os << "  \"[" << render(sg.cycle_class, sg.alphabet) << "]\";\n";
  }
  for (std::uint32_t c = 0; c < sg.classes.size(); ++c) os << "  " << node(c) << ";\n";
  for (const auto& e : sg.edges) {
    os << "  " << node(e.a) << " -- " << node(e.b) << " [label=" << quoted(e.label, sg.alphabet) << "];\n";
  }
  for (const auto& l : sg.loops) {
    os << "  " << node(l.cls) << " -- " << node(l.cls) << " [label=" << quoted(l.label, sg.alphabet)
       << ", style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace palrich
