#include "doctest.h"
#include "foldcover/completion.hpp"
#include "foldcover/perm.hpp"
#include "test_helpers.hpp"

using namespace foldcover;

TEST_CASE("missing label tail") {
  LabeledGraph g;
  g.alphabet = 2;
  g.base = g.add_vertex();
  g.add_edge(0, 0, 0);  // a-loop only; b missing
  TailInfo t = add_missing_label_tail(g, 5);
  CHECK(t.gen == 1);
  CHECK(g.vertices == 6);
  CHECK(is_folded(g));

  LabeledGraph reg;
  reg.alphabet = 1;
  reg.base = reg.add_vertex();
  reg.add_edge(0, 0, 0);
  CHECK_THROWS_AS(add_missing_label_tail(reg, 1), error);
}

TEST_CASE("completion of a single chain") {
  // path of 3 same-labeled edges, one-letter alphabet, peripheral = that letter
  LabeledGraph g;
  g.alphabet = 1;
  g.base = g.add_vertex();
  int prev = 0;
  for (int i = 0; i < 3; ++i) {
    int v = g.add_vertex();
    g.add_edge(prev, v, 0);
    prev = v;
  }
  Word x{{Letter{0, 1}}};
  CompletionResult res = regular_complete(g, {x});
  CHECK(is_regular(res.graph));
  CHECK(res.graph.vertices >= 4);
  CHECK(oracle_power_free(to_perm_rep(res.graph), x));
}

TEST_CASE("identity completion") {
  LabeledGraph g;
  g.alphabet = 2;
  g.base = g.add_vertex();
  g.add_vertex();
  g.add_vertex();
  for (int v = 0; v < 3; ++v) {
    g.add_edge(v, (v + 1) % 3, 0);
    g.add_edge(v, (v + 2) % 3, 1);
  }
  Word x{{Letter{0, 1}}};
  CompletionResult res = regular_complete(g, {x});
  CHECK(res.added_vertices == 0);
  CHECK(canonical_form(res.graph) == canonical_form(g));
}

TEST_CASE("peripheral loop input is rejected") {
  LabeledGraph g;
  g.alphabet = 2;
  g.base = g.add_vertex();
  g.add_edge(0, 0, 1);  // x-loop
  Word x{{Letter{1, 1}}};
  CHECK_THROWS_AS(regular_complete(g, {x}), error);
}

TEST_CASE("completion contract on random inputs") {
  std::mt19937_64 rng(2024);
  for (int inst = 0; inst < 25; ++inst) {
    int genus = 1 + static_cast<int>(rng() % 2);
    int nb = 1 + static_cast<int>(rng() % 3);
    if (genus == 1 && nb == 1) nb = 2;
    SurfacePresentation pres{Alphabet{genus, nb}, std::vector<int>(1, nb)};
    std::vector<Word> periph;
    for (int b = 1; b <= nb; ++b) periph.push_back(pres.peripheral_word(b));
    LabeledGraph g;
    for (;;) {
      g = fold(random_wedge(rng, pres.alphabet.size(), 2 + rng() % 4, 7)).graph;
      bool ok = true;
      for (const Word& x : periph)
        if (has_power_loop(g, x, g.vertices)) ok = false;
      if (ok) break;
    }
    CompletionOptions opts;
    opts.seed = rng();
    CompletionResult res = regular_complete(g, periph, opts);
    REQUIRE(is_regular(res.graph));
    // the input is embedded with stable ids
    for (size_t e = 0; e < g.edges.size(); ++e) {
      REQUIRE(res.graph.edges[e] == g.edges[e]);
    }
    PermRep rep = to_perm_rep(res.graph);
    for (const Word& x : periph) REQUIRE(oracle_power_free(rep, x));
  }
}

TEST_CASE("requested parity is honored") {
  LabeledGraph g;
  g.alphabet = 2;
  g.base = g.add_vertex();
  g.add_edge(0, g.add_vertex(), 0);
  Word x{{Letter{1, 1}}};
  for (int parity : {0, 1}) {
    CompletionOptions opts;
    opts.degree_parity = parity;
    CompletionResult res = regular_complete(g, {x}, opts);
    CHECK(res.graph.vertices % 2 == parity);
    CHECK(is_regular(res.graph));
  }
}
