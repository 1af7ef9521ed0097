#include "foldcover/perm.hpp"

#include <numeric>

namespace foldcover {

std::vector<int> PermRep::word_perm(const Word& w) const {
  std::vector<int> p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (const Letter& l : w.letters) {
    const std::vector<int>& step = l.sign > 0 ? perm[l.gen] : inv[l.gen];
    for (int v = 0; v < degree; ++v) p[v] = step[p[v]];
  }
  return p;
}

PermRep to_perm_rep(const LabeledGraph& g) {
  if (!is_regular(g)) throw error(errc::validation, "permutation oracle needs a regular graph");
  if (!is_connected(g))
    throw error(errc::validation, "permutation oracle needs a connected graph");
  // Renumber so the base becomes point 0.
  auto order = canonical_order(g);
  PermRep rep;
  rep.degree = g.vertices;
  rep.perm.assign(g.alphabet, std::vector<int>(g.vertices, -1));
  rep.inv.assign(g.alphabet, std::vector<int>(g.vertices, -1));
  for (const Edge& e : g.edges) {
    rep.perm[e.gen][order[e.from]] = order[e.to];
    rep.inv[e.gen][order[e.to]] = order[e.from];
  }
  return rep;
}

bool oracle_member(const PermRep& rep, const Word& w) { return rep.act(w, 0) == 0; }

bool oracle_power_free(const PermRep& rep, const Word& x) {
  auto p = rep.word_perm(x);
  int v = 0;
  for (int steps = 1; steps <= rep.degree; ++steps) {
    v = p[v];
    if (v == 0) return steps == rep.degree;
  }
  return false;
}

std::vector<int> cycle_lengths(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<int> lens;
  for (size_t v = 0; v < p.size(); ++v) {
    if (seen[v]) continue;
    int len = 0;
    size_t u = v;
    while (!seen[u]) {
      seen[u] = 1;
      u = static_cast<size_t>(p[u]);
      ++len;
    }
    lens.push_back(len);
  }
  return lens;
}

std::vector<std::vector<int>> boundary_components(const PermRep& rep,
                                                  const SurfacePresentation& pres) {
  std::vector<std::vector<int>> out;
  for (int b = 1; b <= pres.boundary_count(); ++b)
    out.push_back(cycle_lengths(rep.word_perm(pres.peripheral_word(b))));
  return out;
}

std::optional<EulerData> euler_data(const SurfacePresentation& pres, long long m,
                                    long long covered_boundary_count) {
  EulerData d;
  d.chi = m * (2 - 2 * pres.alphabet.genus - pres.alphabet.n_boundary);
  long long num = 2 - d.chi - covered_boundary_count;
  if (num % 2 != 0 || num < 0) return std::nullopt;
  d.genus = num / 2;
  return d;
}

}  // namespace foldcover
