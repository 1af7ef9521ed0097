#include "foldcover/completion.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "foldcover/perm.hpp"

namespace foldcover {

namespace {

// Partial injection of one generator: chains (maximal non-cyclic orbits,
// possibly single vertices) and the set of vertices lying on cycles.
struct GenStructure {
  std::vector<std::pair<int, int>> chains;  // (start, end)
  std::vector<char> on_cycle;
  int chain_vertices = 0;
  int cycle_count = 0;
};

GenStructure analyze_gen(const LabeledGraph& g, int gen) {
  GenStructure s;
  std::vector<int> succ(g.vertices, -1), pred(g.vertices, -1);
  for (const Edge& e : g.edges) {
    if (e.gen != gen) continue;
    if (succ[e.from] != -1 || pred[e.to] != -1)
      throw error(errc::validation, "completion input is not folded");
    succ[e.from] = e.to;
    pred[e.to] = e.from;
  }
  std::vector<char> seen(g.vertices, 0);
  for (int v = 0; v < g.vertices; ++v) {
    if (pred[v] != -1 || seen[v]) continue;
    int end = v;
    seen[v] = 1;
    while (succ[end] != -1) {
      end = succ[end];
      seen[end] = 1;
    }
    s.chains.push_back({v, end});
  }
  s.on_cycle.assign(g.vertices, 0);
  for (int v = 0; v < g.vertices; ++v) {
    if (seen[v]) continue;
    // remaining vertices lie on cycles
    int u = v;
    ++s.cycle_count;
    while (!seen[u]) {
      seen[u] = 1;
      s.on_cycle[u] = 1;
      u = succ[u];
    }
  }
  s.chain_vertices = g.vertices;
  for (int v = 0; v < g.vertices; ++v)
    if (s.on_cycle[v]) --s.chain_vertices;
  return s;
}

int perm_sign_exponent(int m, int final_cycle_count) {
  // sign = (-1)^(m - #cycles)
  return (m - final_cycle_count) % 2;
}

}  // namespace

TailInfo add_missing_label_tail(LabeledGraph& g, int length) {
  if (length < 1) throw error(errc::validation, "tail length must be positive");
  std::vector<char> out(static_cast<size_t>(g.vertices) * g.alphabet, 0);
  for (const Edge& e : g.edges) out[static_cast<size_t>(e.from) * g.alphabet + e.gen] = 1;
  for (int v = 0; v < g.vertices; ++v)
    for (int gen = 0; gen < g.alphabet; ++gen)
      if (!out[static_cast<size_t>(v) * g.alphabet + gen]) {
        int cur = v;
        for (int i = 0; i < length; ++i) {
          int next = g.add_vertex();
          g.add_edge(cur, next, gen);
          cur = next;
        }
        return {v, gen, length};
      }
  throw error(errc::validation, "graph is already regular, no missing label");
}

CompletionResult regular_complete(const LabeledGraph& input,
                                  const std::vector<Word>& peripherals,
                                  const CompletionOptions& opts) {
  if (!is_folded(input)) throw error(errc::validation, "completion input must be folded");
  if (!is_connected(input)) throw error(errc::validation, "completion input must be connected");
  for (const Word& x : peripherals)
    if (x.empty()) throw error(errc::validation, "empty peripheral word");

  if (is_regular(input)) {
    // Identity completion: valid only if every peripheral word already acts
    // as a full cycle and the requested parity holds; a regular graph cannot
    // be grown.
    PermRep rep = to_perm_rep(input);
    for (const Word& x : peripherals)
      if (!oracle_power_free(rep, x))
        throw error(errc::validation, "regular input whose peripheral word is not a full cycle");
    if (opts.degree_parity && input.vertices % 2 != *opts.degree_parity)
      throw error(errc::validation, "regular input with the wrong vertex-count parity");
    return {input, 0};
  }

  for (const Word& x : peripherals)
    if (auto loop = has_power_loop(input, x, input.vertices))
      throw error(errc::validation, "completion input has a peripheral power loop (d=" +
                                        std::to_string(loop->second) + ")");

  CompletionResult res;
  res.graph = input;
  LabeledGraph& g = res.graph;

  std::vector<Word> composite;
  std::vector<char> single_peripheral_gen(g.alphabet, 0);
  for (const Word& x : peripherals) {
    if (x.length() == 1 && x.letters[0].sign == 1)
      single_peripheral_gen[x.letters[0].gen] = 1;
    else
      composite.push_back(x);
  }

  for (int growth = 0; growth <= opts.max_growth; ++growth) {
    const int m = g.vertices;
    std::vector<GenStructure> structure;
    structure.reserve(g.alphabet);
    for (int gen = 0; gen < g.alphabet; ++gen) structure.push_back(analyze_gen(g, gen));

    bool feasible = true;
    for (int gen = 0; gen < g.alphabet && feasible; ++gen)
      if (single_peripheral_gen[gen] && structure[gen].cycle_count > 0)
        throw error(errc::validation, "peripheral generator already has a cycle");
    if (opts.degree_parity && m % 2 != *opts.degree_parity) feasible = false;
    if (feasible) {
      // Forced sign of each composite word's action vs the m-cycle sign.
      int want = (m - 1) % 2;
      for (const Word& w : composite) {
        int sgn = 0;
        for (const Letter& l : w.letters) {
          const GenStructure& s = structure[l.gen];
          int final_cycles = s.cycle_count + (s.chain_vertices > 0 ? 1 : 0);
          sgn = (sgn + perm_sign_exponent(m, final_cycles)) % 2;
        }
        if (sgn != want) {
          feasible = false;
          break;
        }
      }
    }

    if (feasible) {
      long long budget = opts.attempts_per_size >= 0
                             ? opts.attempts_per_size
                             : 10LL * m * m;
      for (long long attempt = 0; attempt < budget; ++attempt) {
        std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + growth * 1000003ULL +
                            static_cast<std::uint64_t>(attempt));
        // Link every generator's chains into one cycle in a random order.
        std::vector<std::vector<int>> perm(g.alphabet), inv(g.alphabet);
        std::vector<std::vector<std::pair<int, int>>> new_edges(g.alphabet);
        for (int gen = 0; gen < g.alphabet; ++gen) {
          perm[gen].assign(m, -1);
          inv[gen].assign(m, -1);
          for (const Edge& e : g.edges)
            if (e.gen == gen) {
              perm[gen][e.from] = e.to;
              inv[gen][e.to] = e.from;
            }
          auto chains = structure[gen].chains;
          if (chains.empty()) continue;
          std::shuffle(chains.begin(), chains.end(), rng);
          for (size_t i = 0; i < chains.size(); ++i) {
            int from = chains[i].second;
            int to = chains[(i + 1) % chains.size()].first;
            perm[gen][from] = to;
            inv[gen][to] = from;
            new_edges[gen].push_back({from, to});
          }
        }
        bool ok = true;
        for (const Word& w : composite) {
          // single m-cycle check for the composed action
          int v = 0;
          int steps = 0;
          do {
            for (const Letter& l : w.letters)
              v = l.sign > 0 ? perm[l.gen][v] : inv[l.gen][v];
            ++steps;
          } while (v != 0 && steps < m);
          if (!(v == 0 && steps == m)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          for (int gen = 0; gen < g.alphabet; ++gen)
            for (auto [from, to] : new_edges[gen]) g.add_edge(from, to, gen);
          return res;
        }
      }
    }

    // Infeasible size or budget exhausted: grow by one vertex and retry.
    add_missing_label_tail(g, 1);
    ++res.added_vertices;
  }
  throw error(errc::completion_budget, "regular completion failed within the growth budget");
}

}  // namespace foldcover
