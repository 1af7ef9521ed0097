#pragma once

#include <cstdint>
#include <vector>

#include "foldcover/cover_spec.hpp"
#include "foldcover/graph.hpp"

namespace foldcover {

// One inserted auxiliary subgraph, as an ordered list of spine vertex ids in
// the current graph.  Edges between a spine and the rest of the graph attach
// only at the first and last spine vertex, which is what makes resizing a
// local operation.
struct GadgetSite {
  std::vector<int> spine;
};

// Folded graph recognizing <w>, with the attached marked paths.
struct CoreGraph {
  LabeledGraph graph;
  // anchors[k-1][p-1][q-1] = terminal vertex of the q-th marked path of
  // boundary (k,p), q = 1..d_ik.
  std::vector<std::vector<std::vector<int>>> anchors;
  int max_anchor_ray = 0;  // max length of a maximal peripheral path through an anchor
  int diameter = 0;
};

CoreGraph build_core(const CoverSpec& spec);

// The full wrapped-power path of one boundary circle, one block of n periods
// per a = 1..d_total.
struct BoundaryPath {
  int k = 0, p = 0, b = 0;
  Word x;
  std::vector<int> edge_ids;   // in spelled order
  std::vector<char> forward;   // letter sign per position
};

struct PoweredGraph {
  LabeledGraph graph;  // folded
  long long n = 0;
  int margin_radius = 0;
  std::vector<BoundaryPath> paths;
};

PoweredGraph build_powered(const CoverSpec& spec, const CoreGraph& core, long long n);

// Positions (edge offsets into the boundary path) of the cut vertices for one
// block; upos2 is used by the second cut of the last boundary (case1-odd) and
// of the single boundary (case2).
struct CutPoint {
  int path = 0;
  int block = 0;
  long long upos = -1;
  long long upos2 = -1;
};

std::vector<CutPoint> select_cut_points(const CoverSpec& spec, const PoweredGraph& pg);

// Smallest even n exceeding 40|L| + 2*max_anchor_ray for which the cut-point
// selection lands on clean far interior vertices (grown by 2 until it does).
long long choose_wrap_parameter(const CoverSpec& spec, const CoreGraph& core);

struct GadgetedGraph {
  LabeledGraph graph;  // folded
  std::vector<GadgetSite> sites;
};

GadgetedGraph insert_gadgets(const CoverSpec& spec, const PoweredGraph& pg,
                             const std::vector<CutPoint>& cuts);

int gadget_base_size(CaseTag tag);  // spine size in the family graph: 2 / 3 / 5
int gadget_gain(CaseTag tag);       // wrap gained per insertion at base size: 1 / 2 / 4

// Appends a gadget of the given spine size and returns its vertex ids.
std::vector<int> append_gadget(LabeledGraph& g, const CoverSpec& spec, int size);

// Post-completion state from which the cover graph is instantiated for every
// admissible even degree parameter.
struct CoverFamily {
  CoverSpec spec;
  LabeledGraph graph;  // regular
  std::vector<GadgetSite> sites;
  long long n = 0;
  int delta = 0;
  long long m_star = 0;
  long long min_degree = 0;  // even threshold for the degree parameter
};

struct BuildOptions {
  std::uint64_t seed = 0;
};

CoverFamily build_family(const CoverSpec& spec, const BuildOptions& opts = {});

// The cover graph with exactly degree_param * d_total + 1 vertices.
LabeledGraph instantiate(const CoverFamily& family, long long degree_param);

// Same degree parameter across several families sharing d_total.
std::vector<LabeledGraph> uniform_degree(const std::vector<CoverFamily>& families,
                                         long long degree_param);

}  // namespace foldcover
