#pragma once

#include <optional>
#include <vector>

#include "foldcover/graph.hpp"
#include "foldcover/word.hpp"

namespace foldcover {

// Permutation action of each generator on the vertex set of a regular graph;
// point 0 is the class of the base vertex.  This is the independent
// certification oracle: words act by composition, membership is "fixes 0".
struct PermRep {
  int degree = 0;
  std::vector<std::vector<int>> perm;  // perm[gen][v]
  std::vector<std::vector<int>> inv;

  int act(Letter l, int v) const { return l.sign > 0 ? perm[l.gen][v] : inv[l.gen][v]; }
  int act(const Word& w, int v) const {
    for (const Letter& l : w.letters) v = act(l, v);
    return v;
  }
  std::vector<int> word_perm(const Word& w) const;
};

PermRep to_perm_rep(const LabeledGraph& g);  // requires regular and connected

bool oracle_member(const PermRep& rep, const Word& w);
// True iff the action of x is a single degree-cycle (no x^d loop anywhere for
// 1 <= d < degree).
bool oracle_power_free(const PermRep& rep, const Word& x);

std::vector<int> cycle_lengths(const std::vector<int>& p);

// Cycle type of each peripheral word's action, boundary b = 1..n_b.
std::vector<std::vector<int>> boundary_components(const PermRep& rep,
                                                  const SurfacePresentation& pres);

// Euler characteristic and genus of the degree-m cover with the given number
// of covered boundary circles; nullopt when the genus is not a non-negative
// integer (certification failure).
struct EulerData {
  long long chi = 0;
  long long genus = 0;
};
std::optional<EulerData> euler_data(const SurfacePresentation& pres, long long m,
                                    long long covered_boundary_count);

}  // namespace foldcover
