#include "foldcover/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

namespace foldcover {

int LabeledGraph::add_edge(int from, int to, int gen) {
  if (from < 0 || from >= vertices || to < 0 || to >= vertices)
    throw error(errc::internal, "edge endpoint out of range");
  if (gen < 0 || gen >= alphabet) throw error(errc::internal, "edge label out of range");
  edges.push_back({from, to, gen});
  return static_cast<int>(edges.size()) - 1;
}

int LabeledGraph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges) {
    if (e.from == v) ++d;
    if (e.to == v) ++d;
  }
  return d;
}

EdgeIndex::EdgeIndex(const LabeledGraph& g) : g_(&g), alphabet_(g.alphabet) {
  out_.assign(static_cast<size_t>(g.vertices) * g.alphabet, -1);
  in_.assign(static_cast<size_t>(g.vertices) * g.alphabet, -1);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    const Edge& ed = g.edges[e];
    int& o = out_[idx(ed.from, ed.gen)];
    int& i = in_[idx(ed.to, ed.gen)];
    if (o != -1 || i != -1) throw error(errc::internal, "EdgeIndex on unfolded graph");
    o = e;
    i = e;
  }
}

std::optional<int> EdgeIndex::step(int v, Letter l) const {
  int e = l.sign > 0 ? out_edge(v, l.gen) : in_edge(v, l.gen);
  if (e < 0) return std::nullopt;
  return l.sign > 0 ? g_->edges[e].to : g_->edges[e].from;
}

bool is_folded(const LabeledGraph& g) {
  std::vector<char> out(static_cast<size_t>(g.vertices) * g.alphabet, 0), in = out;
  for (const Edge& e : g.edges) {
    char& o = out[static_cast<size_t>(e.from) * g.alphabet + e.gen];
    char& i = in[static_cast<size_t>(e.to) * g.alphabet + e.gen];
    if (o || i) return false;
    o = i = 1;
  }
  return true;
}

std::vector<int> distances_from(const LabeledGraph& g, int v, int limit) {
  std::vector<std::vector<int>> adj(g.vertices);
  for (const Edge& e : g.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<int> dist(g.vertices, -1);
  std::queue<int> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    if (limit >= 0 && dist[u] >= limit) continue;
    for (int w : adj[u])
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

bool is_connected(const LabeledGraph& g) {
  if (g.vertices == 0) return true;
  auto dist = distances_from(g, g.base);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

bool is_regular(const LabeledGraph& g) {
  std::vector<int> out(static_cast<size_t>(g.vertices) * g.alphabet, 0), in = out;
  for (const Edge& e : g.edges) {
    ++out[static_cast<size_t>(e.from) * g.alphabet + e.gen];
    ++in[static_cast<size_t>(e.to) * g.alphabet + e.gen];
  }
  for (size_t i = 0; i < out.size(); ++i)
    if (out[i] != 1 || in[i] != 1) return false;
  return true;
}

int diameter(const LabeledGraph& g) {
  int best = 0;
  for (int v = 0; v < g.vertices; ++v) {
    auto dist = distances_from(g, v);
    for (int d : dist) {
      if (d < 0) throw error(errc::validation, "diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

std::pair<int, std::vector<int>> attach_path(LabeledGraph& g, const Word& w, int from,
                                             int to) {
  if (w.empty()) throw error(errc::validation, "cannot attach an empty path");
  std::vector<int> eids;
  eids.reserve(w.letters.size());
  int cur = from;
  for (int i = 0; i < w.length(); ++i) {
    int next;
    if (i + 1 == w.length())
      next = to >= 0 ? to : g.add_vertex();
    else
      next = g.add_vertex();
    const Letter& l = w.letters[i];
    eids.push_back(l.sign > 0 ? g.add_edge(cur, next, l.gen) : g.add_edge(next, cur, l.gen));
    cur = next;
  }
  return {cur, eids};
}

void add_loop(LabeledGraph& g, const Word& w) {
  if (g.vertices == 0) g.base = g.add_vertex();
  if (w.empty()) return;
  attach_path(g, w, g.base, g.base);
}

void add_path(LabeledGraph& g, const Word& w) {
  if (w.empty()) throw error(errc::validation, "cannot attach an empty path");
  if (g.vertices == 0) g.base = g.add_vertex();
  attach_path(g, w, g.base, -1);
}

namespace {

struct Dsu {
  std::vector<int> parent, size;
  explicit Dsu(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
};

FoldResult compact(const LabeledGraph& g, Dsu& dsu, const std::vector<char>& alive,
                   const std::vector<int>& redirect) {
  FoldResult res;
  res.graph.alphabet = g.alphabet;
  res.vertex_map.assign(g.vertices, -1);
  std::vector<int> root_new(g.vertices, -1);
  int next = 0;
  for (int v = 0; v < g.vertices; ++v) {
    int r = dsu.find(v);
    if (root_new[r] < 0) root_new[r] = next++;
    res.vertex_map[v] = root_new[r];
  }
  res.graph.vertices = next;
  res.graph.base = g.vertices > 0 ? res.vertex_map[g.base] : 0;
  std::vector<int> alive_new(g.edges.size(), -1);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    if (!alive[e]) continue;
    alive_new[e] = res.graph.add_edge(res.vertex_map[g.edges[e].from],
                                      res.vertex_map[g.edges[e].to], g.edges[e].gen);
  }
  res.edge_map.assign(g.edges.size(), -1);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int r = e;
    while (!alive[r]) {
      if (redirect[r] == r) throw error(errc::internal, "broken edge redirect chain");
      r = redirect[r];
    }
    res.edge_map[e] = alive_new[r];
  }
  return res;
}

}  // namespace

FoldResult fold(const LabeledGraph& g) {
  const int L = g.alphabet;
  const int E = static_cast<int>(g.edges.size());
  Dsu dsu(g.vertices);
  std::vector<char> alive(E, 1);
  std::vector<int> redirect(E);
  std::iota(redirect.begin(), redirect.end(), 0);
  std::vector<std::vector<int>> out_tab(g.vertices, std::vector<int>(L, -1));
  std::vector<std::vector<int>> in_tab(g.vertices, std::vector<int>(L, -1));
  std::deque<int> work;
  for (int e = 0; e < E; ++e) work.push_back(e);

  auto merge = [&](int a, int b) {
    int ra = dsu.find(a), rb = dsu.find(b);
    if (ra == rb) return;
    int winner = ra, loser = rb;
    if (dsu.size[winner] < dsu.size[loser]) std::swap(winner, loser);
    dsu.parent[loser] = winner;
    dsu.size[winner] += dsu.size[loser];
    for (int gen = 0; gen < L; ++gen) {
      if (out_tab[loser][gen] >= 0) {
        work.push_back(out_tab[loser][gen]);
        out_tab[loser][gen] = -1;
      }
      if (in_tab[loser][gen] >= 0) {
        work.push_back(in_tab[loser][gen]);
        in_tab[loser][gen] = -1;
      }
    }
  };

  while (!work.empty()) {
    int e = work.front();
    work.pop_front();
    if (!alive[e]) continue;
    const int gen = g.edges[e].gen;
    int f = dsu.find(g.edges[e].from);
    int t = dsu.find(g.edges[e].to);

    int cur = out_tab[f][gen];
    if (cur >= 0 && !alive[cur]) cur = out_tab[f][gen] = -1;
    if (cur >= 0 && cur != e) {
      int t2 = dsu.find(g.edges[cur].to);
      if (t2 == t) {  // parallel duplicate
        alive[e] = 0;
        redirect[e] = cur;
        continue;
      }
      merge(t, t2);
      work.push_back(e);
      continue;
    }
    out_tab[f][gen] = e;

    cur = in_tab[t][gen];
    if (cur >= 0 && !alive[cur]) cur = in_tab[t][gen] = -1;
    if (cur >= 0 && cur != e) {
      int f2 = dsu.find(g.edges[cur].from);
      if (f2 == f) {
        alive[e] = 0;
        redirect[e] = cur;
        if (out_tab[f][gen] == e) out_tab[f][gen] = cur;
        continue;
      }
      merge(f, f2);
      work.push_back(e);
      continue;
    }
    in_tab[t][gen] = e;
  }
  return compact(g, dsu, alive, redirect);
}

FoldResult fold_random_order(const LabeledGraph& g, std::mt19937_64& rng) {
  Dsu dsu(g.vertices);
  const int E = static_cast<int>(g.edges.size());
  std::vector<char> alive(E, 1);
  std::vector<int> redirect(E);
  std::iota(redirect.begin(), redirect.end(), 0);

  for (;;) {
    // Kill exact duplicates, then gather all (vertex, label, side) violations.
    std::map<std::tuple<int, int, int>, int> seen;
    for (int e = 0; e < E; ++e) {
      if (!alive[e]) continue;
      auto key = std::make_tuple(dsu.find(g.edges[e].from), dsu.find(g.edges[e].to),
                                 g.edges[e].gen);
      auto [it, fresh] = seen.emplace(key, e);
      if (!fresh) {
        alive[e] = 0;
        redirect[e] = it->second;
      }
    }
    std::map<std::pair<int, int>, std::vector<int>> by_out, by_in;
    for (int e = 0; e < E; ++e) {
      if (!alive[e]) continue;
      by_out[{dsu.find(g.edges[e].from), g.edges[e].gen}].push_back(e);
      by_in[{dsu.find(g.edges[e].to), g.edges[e].gen}].push_back(e);
    }
    std::vector<std::pair<int, int>> violations;  // pair of vertices to merge
    for (auto& [k, v] : by_out)
      if (v.size() > 1)
        violations.push_back({dsu.find(g.edges[v[0]].to), dsu.find(g.edges[v[1]].to)});
    for (auto& [k, v] : by_in)
      if (v.size() > 1)
        violations.push_back({dsu.find(g.edges[v[0]].from), dsu.find(g.edges[v[1]].from)});
    if (violations.empty()) break;
    auto [a, b] = violations[rng() % violations.size()];
    int ra = dsu.find(a), rb = dsu.find(b);
    if (ra == rb) continue;  // duplicate-killing next round will make progress
    if (dsu.size[ra] < dsu.size[rb]) std::swap(ra, rb);
    dsu.parent[rb] = ra;
    dsu.size[ra] += dsu.size[rb];
  }
  return compact(g, dsu, alive, redirect);
}

std::optional<int> trace(const LabeledGraph& g, const EdgeIndex& idx, const Word& w,
                         int start) {
  int v = start;
  for (const Letter& l : w.letters) {
    auto next = idx.step(v, l);
    if (!next) return std::nullopt;
    v = *next;
  }
  return v;
}

std::optional<int> trace(const LabeledGraph& g, const Word& w, int start) {
  EdgeIndex idx(g);
  return trace(g, idx, w, start);
}

bool is_member(const LabeledGraph& g, const Word& w) {
  auto end = trace(g, w, g.base);
  return end && *end == g.base;
}

std::optional<std::pair<int, long long>> has_power_loop(const LabeledGraph& g, const Word& x,
                                                        long long dmax) {
  if (x.empty()) throw error(errc::validation, "power loop check needs a nonempty word");
  EdgeIndex idx(g);
  const int len = x.length();
  const size_t S = static_cast<size_t>(g.vertices) * len;
  auto sid = [&](int v, int ph) { return static_cast<size_t>(v) * len + ph; };
  // Functional graph on (vertex, phase) states; any cycle spells x^d loops.
  std::vector<long long> next(S, -1);
  for (int v = 0; v < g.vertices; ++v)
    for (int ph = 0; ph < len; ++ph) {
      auto s = idx.step(v, x.letters[ph]);
      if (s) next[sid(v, ph)] = sid(*s, (ph + 1) % len);
    }
  std::vector<char> color(S, 0);  // 0 new, 1 on stack, 2 done
  std::optional<std::pair<int, long long>> best;
  std::vector<long long> path;
  for (size_t s0 = 0; s0 < S; ++s0) {
    if (color[s0]) continue;
    path.clear();
    long long s = static_cast<long long>(s0);
    while (s >= 0 && color[s] == 0) {
      color[s] = 1;
      path.push_back(s);
      s = next[s];
    }
    if (s >= 0 && color[s] == 1) {
      // found a cycle; extract it
      size_t i = path.size();
      while (i > 0 && path[i - 1] != s) --i;
      long long cyc_len = static_cast<long long>(path.size() - (i - 1));
      long long d = cyc_len / len;
      for (size_t j = i - 1; j < path.size(); ++j) {
        long long st = path[j];
        if (st % len == 0) {
          int v = static_cast<int>(st / len);
          if (!best || d < best->second || (d == best->second && v < best->first))
            best = {v, d};
          break;
        }
      }
    }
    for (long long st : path) color[st] = 2;
  }
  if (best && best->second <= dmax) return best;
  return std::nullopt;
}

XPath maximal_x_path(const LabeledGraph& g, const Word& x, int v) {
  if (x.empty()) throw error(errc::validation, "maximal path of an empty word");
  EdgeIndex idx(g);
  const int len = x.length();
  const long long cap = static_cast<long long>(g.vertices) * len + 1;
  XPath res;
  res.word = x;

  std::vector<int> fwd;
  int cur = v, ph = 0;
  for (long long steps = 0;; ++steps) {
    if (steps > cap)
      throw error(errc::validation, "power loop through the requested vertex");
    auto n = idx.step(cur, x.letters[ph]);
    if (!n) {
      res.terminal_missing = x.letters[ph];
      break;
    }
    cur = *n;
    fwd.push_back(cur);
    ph = (ph + 1) % len;
  }

  std::vector<int> bwd;
  cur = v;
  ph = 0;
  for (long long steps = 0;; ++steps) {
    if (steps > cap)
      throw error(errc::validation, "power loop through the requested vertex");
    int prev_ph = (ph + len - 1) % len;
    Letter back{x.letters[prev_ph].gen, -x.letters[prev_ph].sign};
    auto n = idx.step(cur, back);
    if (!n) {
      res.initial_missing = x.letters[prev_ph];
      break;
    }
    cur = *n;
    bwd.push_back(cur);
    ph = prev_ph;
  }

  res.vertices.assign(bwd.rbegin(), bwd.rend());
  res.vertices.push_back(v);
  res.vertices.insert(res.vertices.end(), fwd.begin(), fwd.end());
  res.pos_of_start = static_cast<int>(bwd.size());
  return res;
}

std::vector<int> canonical_order(const LabeledGraph& g) {
  if (!is_connected(g)) throw error(errc::validation, "canonical form needs connectivity");
  EdgeIndex idx(g);
  std::vector<int> order(g.vertices, -1);
  int next = 0;
  std::queue<int> q;
  order[g.base] = next++;
  q.push(g.base);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int gen = 0; gen < g.alphabet; ++gen) {
      int eo = idx.out_edge(v, gen);
      if (eo >= 0 && order[g.edges[eo].to] < 0) {
        order[g.edges[eo].to] = next++;
        q.push(g.edges[eo].to);
      }
      int ei = idx.in_edge(v, gen);
      if (ei >= 0 && order[g.edges[ei].from] < 0) {
        order[g.edges[ei].from] = next++;
        q.push(g.edges[ei].from);
      }
    }
  }
  if (next != g.vertices) throw error(errc::internal, "canonical BFS missed vertices");
  return order;
}

std::vector<std::uint8_t> canonical_form(const LabeledGraph& g) {
  auto order = canonical_order(g);
  std::vector<int> inv(g.vertices);
  for (int v = 0; v < g.vertices; ++v) inv[order[v]] = v;
  EdgeIndex idx(g);
  std::vector<std::uint8_t> bytes;
  auto put32 = [&bytes](std::uint32_t x) {
    for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
  };
  bytes.insert(bytes.end(), {'F', 'C', 'G', '1'});
  put32(static_cast<std::uint32_t>(g.vertices));
  put32(static_cast<std::uint32_t>(g.alphabet));
  for (int cid = 0; cid < g.vertices; ++cid) {
    int v = inv[cid];
    for (int gen = 0; gen < g.alphabet; ++gen) {
      int eo = idx.out_edge(v, gen);
      put32(eo < 0 ? 0 : static_cast<std::uint32_t>(order[g.edges[eo].to] + 1));
      int ei = idx.in_edge(v, gen);
      put32(ei < 0 ? 0 : static_cast<std::uint32_t>(order[g.edges[ei].from] + 1));
    }
  }
  return bytes;
}

CutResult cut_at(const LabeledGraph& g, const std::vector<int>& cut_vertices) {
  CutResult res;
  res.graph = g;
  std::vector<char> is_cut(g.vertices, 0);
  for (int u : cut_vertices) {
    if (u == g.base) throw error(errc::validation, "cannot cut the base vertex");
    if (u < 0 || u >= g.vertices) throw error(errc::validation, "cut vertex out of range");
    if (is_cut[u]) throw error(errc::validation, "duplicate cut vertex");
    is_cut[u] = 1;
  }
  std::vector<int> minus(g.vertices, -1);
  for (int u : cut_vertices) {
    minus[u] = res.graph.add_vertex();
    res.pairs.push_back({u, minus[u]});
  }
  for (Edge& e : res.graph.edges)
    if (is_cut[e.from]) e.from = minus[e.from];
  return res;
}

GraphFile read_graph_text(std::istream& in) {
  GraphFile gf;
  bool have_graph = false, have_alpha = false;
  std::string line;
  int declared_m = 0, declared_base = 0;
  auto parse_kv = [](const std::string& tok, const std::string& key) -> long long {
    if (tok.rfind(key + "=", 0) != 0)
      throw error(errc::parse_error, "expected '" + key + "=...' got '" + tok + "'");
    try {
      return std::stoll(tok.substr(key.size() + 1));
    } catch (...) {
      throw error(errc::parse_error, "bad integer in '" + tok + "'");
    }
  };
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind[0] == '#') continue;
    if (kind == "graph") {
      std::string a, b;
      if (!(ls >> a >> b)) throw error(errc::parse_error, "bad graph line");
      declared_m = static_cast<int>(parse_kv(a, "m"));
      declared_base = static_cast<int>(parse_kv(b, "base"));
      have_graph = true;
    } else if (kind == "alphabet") {
      std::string a, b;
      if (!(ls >> a >> b)) throw error(errc::parse_error, "bad alphabet line");
      gf.alphabet.genus = static_cast<int>(parse_kv(a, "g"));
      gf.alphabet.n_boundary = static_cast<int>(parse_kv(b, "nb"));
      gf.alphabet.validate();
      have_alpha = true;
    } else if (kind == "edge") {
      if (!have_graph || !have_alpha)
        throw error(errc::parse_error, "edge line before graph/alphabet header");
      int from, to;
      std::string name;
      if (!(ls >> from >> to >> name)) throw error(errc::parse_error, "bad edge line");
      if (from < 0 || from >= declared_m || to < 0 || to >= declared_m)
        throw error(errc::parse_error, "edge endpoint out of range");
      auto gen = gf.alphabet.index(name);
      if (!gen) throw error(errc::parse_error, "unknown generator '" + name + "'");
      if (gf.graph.vertices < declared_m) {
        gf.graph.vertices = declared_m;
        gf.graph.alphabet = gf.alphabet.size();
        gf.graph.base = declared_base;
      }
      gf.graph.add_edge(from, to, *gen);
    } else if (kind == "cert") {
      gf.trailer.push_back(line);
    } else {
      throw error(errc::parse_error, "unknown line kind '" + kind + "'");
    }
  }
  if (!have_graph || !have_alpha)
    throw error(errc::parse_error, "missing graph or alphabet header");
  if (gf.graph.vertices == 0) {  // edgeless graph
    gf.graph.vertices = declared_m;
    gf.graph.alphabet = gf.alphabet.size();
    gf.graph.base = declared_base;
  }
  if (declared_base < 0 || declared_base >= std::max(declared_m, 1))
    throw error(errc::parse_error, "base vertex out of range");
  return gf;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
  return read_graph_text(in);
}

void write_graph_text(std::ostream& out, const LabeledGraph& g, const Alphabet& a,
                      bool canonical, const std::vector<std::string>& trailer) {
  std::vector<int> order(g.vertices);
  std::iota(order.begin(), order.end(), 0);
  if (canonical) order = canonical_order(g);
  out << "graph m=" << g.vertices << " base=" << order[g.base] << "\n";
  out << "alphabet g=" << a.genus << " nb=" << a.n_boundary << "\n";
  std::vector<Edge> es;
  es.reserve(g.edges.size());
  for (const Edge& e : g.edges) es.push_back({order[e.from], order[e.to], e.gen});
  std::sort(es.begin(), es.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.from, x.to, x.gen) < std::tie(y.from, y.to, y.gen);
  });
  for (const Edge& e : es)
    out << "edge " << e.from << " " << e.to << " " << a.name(e.gen) << "\n";
  for (const std::string& t : trailer) out << t << "\n";
}

std::string to_dot(const LabeledGraph& g, const Alphabet& a) {
  std::ostringstream out;
  out << "digraph cover {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertices; ++v) {
    out << "  v" << v;
    if (v == g.base) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const Edge& e : g.edges)
    out << "  v" << e.from << " -> v" << e.to << " [label=\"" << a.name(e.gen) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace foldcover
