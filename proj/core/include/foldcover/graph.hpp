#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "foldcover/word.hpp"

namespace foldcover {

struct Edge {
  int from = 0;
  int to = 0;
  int gen = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Based, directed, generator-labeled graph.  An edge traversed against its
// direction reads the inverse letter.  Vertices are 0..vertices-1.
struct LabeledGraph {
  int vertices = 0;
  int base = 0;
  int alphabet = 0;  // |L|
  std::vector<Edge> edges;

  int add_vertex() { return vertices++; }
  int add_edge(int from, int to, int gen);
  int degree(int v) const;  // incident edge-endpoints (loops count twice)
};

// Unique out/in edge per (vertex, generator); only valid for folded graphs.
class EdgeIndex {
 public:
  explicit EdgeIndex(const LabeledGraph& g);  // throws errc::internal if unfolded
  int out_edge(int v, int gen) const { return out_[idx(v, gen)]; }
  int in_edge(int v, int gen) const { return in_[idx(v, gen)]; }
  // Follow one letter; nullopt if the edge is missing.
  std::optional<int> step(int v, Letter l) const;

 private:
  size_t idx(int v, int gen) const { return static_cast<size_t>(v) * alphabet_ + gen; }
  const LabeledGraph* g_;
  int alphabet_;
  std::vector<int> out_, in_;
};

bool is_folded(const LabeledGraph& g);
bool is_connected(const LabeledGraph& g);
// Every vertex has exactly one outgoing and one incoming edge per generator.
bool is_regular(const LabeledGraph& g);
int diameter(const LabeledGraph& g);  // undirected; requires connected
// Undirected distances from v, capped at `limit` (-1 beyond the cap).
std::vector<int> distances_from(const LabeledGraph& g, int v, int limit = -1);

// Attach a fresh embedded loop (resp. non-closed path) spelling w at the base.
void add_loop(LabeledGraph& g, const Word& w);
void add_path(LabeledGraph& g, const Word& w);  // errc::validation on empty w
// Fresh path spelling w from `from` to `to` (to = -1 leaves the end dangling
// on a new vertex).  Returns (terminal vertex, edge ids in spelled order).
std::pair<int, std::vector<int>> attach_path(LabeledGraph& g, const Word& w, int from,
                                             int to = -1);

struct FoldResult {
  LabeledGraph graph;
  std::vector<int> vertex_map;  // old vertex -> new vertex
  std::vector<int> edge_map;    // old edge -> new edge
};

// Identify same-labeled edges sharing an endpoint until none remain.  The
// recognized subgroup is unchanged; confluence makes the result independent
// of the fold order up to canonical form.
FoldResult fold(const LabeledGraph& g);
FoldResult fold_random_order(const LabeledGraph& g, std::mt19937_64& rng);

// Deterministic reading of w from `start` in a folded graph.
std::optional<int> trace(const LabeledGraph& g, const EdgeIndex& idx, const Word& w,
                         int start);
std::optional<int> trace(const LabeledGraph& g, const Word& w, int start);
bool is_member(const LabeledGraph& g, const Word& w);  // loop at base?

// Smallest d <= dmax with a loop spelling x^d based anywhere, with a witness
// vertex; nullopt if none.  Requires folded.
std::optional<std::pair<int, long long>> has_power_loop(const LabeledGraph& g, const Word& x,
                                                        long long dmax);

// Maximal path spelling a bi-infinite power of x through `v` starting at
// phase 0, in a folded graph.  vertices[pos_of_start] == v.
struct XPath {
  Word word;
  std::vector<int> vertices;
  int pos_of_start = 0;
  // Letter of x that failed to extend at each end (nullopt when the end
  // stopped only because the word cannot continue, which does not happen for
  // maximal paths, so these are set unless the graph is x-complete there).
  std::optional<Letter> initial_missing;
  std::optional<Letter> terminal_missing;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int initial() const { return vertices.front(); }
  int terminal() const { return vertices.back(); }
};
XPath maximal_x_path(const LabeledGraph& g, const Word& x, int v);

// Byte encoding invariant under based labeled-graph isomorphism (BFS from the
// base with a fixed label order).  Requires folded and connected.
std::vector<std::uint8_t> canonical_form(const LabeledGraph& g);
// The BFS renumbering used by canonical_form: old vertex -> canonical id.
std::vector<int> canonical_order(const LabeledGraph& g);

// Replace each listed vertex u by u+ (receiving u's incoming edges) and u-
// (emitting u's outgoing edges); re-identifying each pair recovers g.  In the
// result, u+ keeps u's id and u- is a fresh vertex; pairs lists (u+, u-).
struct CutResult {
  LabeledGraph graph;
  std::vector<std::pair<int, int>> pairs;
};
CutResult cut_at(const LabeledGraph& g, const std::vector<int>& cut_vertices);

// Text format: `graph m=<int> base=<int>`, `alphabet g=<int> nb=<int>`,
// `edge <from> <to> <gen-name>`, comments with `#`.  Extra non-graph lines
// (e.g. a certificate block) are returned in `trailer`.
struct GraphFile {
  LabeledGraph graph;
  Alphabet alphabet;
  std::vector<std::string> trailer;
};
GraphFile read_graph_text(std::istream& in);
GraphFile read_graph_file(const std::string& path);
// canonical=true renumbers vertices by canonical_order first (byte-stable).
void write_graph_text(std::ostream& out, const LabeledGraph& g, const Alphabet& a,
                      bool canonical = false,
                      const std::vector<std::string>& trailer = {});
std::string to_dot(const LabeledGraph& g, const Alphabet& a);

}  // namespace foldcover
