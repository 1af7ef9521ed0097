// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion enforces its stated tolerance and time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "foldcover/certify.hpp"
#include "foldcover/completion.hpp"
#include "foldcover/pipeline.hpp"
#include "foldcover/slopes.hpp"
#include "test_helpers.hpp"

using namespace foldcover;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  int failures = 0;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      detail << "  FAILED: " << what << "\n";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

const char* kSpecCase1Even = R"({
  "genus": 1, "boundary": [1, 1], "d": [2, 2],
  "w": ["a1 b1"], "y": ["a1"], "tau": [], "sigma": {}
})";
const char* kSpecCase2 = R"({
  "genus": 2, "boundary": [1], "d": [4],
  "w": ["a1 b2"], "y": ["b1"]
})";
const char* kSpecCase1Odd = R"({
  "genus": 1, "boundary": [1, 1, 1], "d": [2, 2, 2],
  "w": ["a1 b1"], "y": ["a1"]
})";
const char* kSpecCase1EvenB = R"({
  "genus": 1, "boundary": [1, 1], "d": [2, 2],
  "w": ["a1 a1 b1"], "y": ["b1"]
})";

void check_instance(Check& c, const CoverFamily& fam, const CoverSpec& spec, long long nstar,
                    double budget_s) {
  auto t0 = Clock::now();
  LabeledGraph g = instantiate(fam, nstar);
  CoverCertificate cert = verify_certificate(g, spec, nstar);
  double dt = seconds_since(t0);
  std::string tag = " (N*=" + std::to_string(nstar) + ")";
  c.require(cert.regular, "property 0: regular" + tag);
  c.require(cert.vertex_count, "property 1: vertex count" + tag);
  c.require(g.vertices == nstar * spec.d_total + 1, "exact vertex count" + tag);
  c.require(cert.w_loops, "property 2: contained words are loops" + tag);
  c.require(cert.arc_loops, "property 3: arc words are loops" + tag);
  c.require(cert.power_free, "property 4: no short peripheral powers" + tag);
  c.require(cert.y_non_closed, "property 5: excluded words stay non-closed" + tag);
  c.require(dt < budget_s, "time budget" + tag);
}

// criterion 1: case1-even reproduction on the toy spec
Check criterion1(CoverFamily& fam_out) {
  Check c;
  CoverSpec spec = parse_cover_spec(kSpecCase1Even);
  CoverFamily fam = build_family(spec);
  c.require(fam.min_degree % 2 == 0, "threshold parameter is even");
  c.require(spec.d_total == 2, "d_total is 2");
  for (long long nstar : {fam.min_degree, fam.min_degree + 2, fam.min_degree + 4})
    check_instance(c, fam, spec, nstar, 10.0);
  fam_out = fam;
  return c;
}

Check criterion2() {
  Check c;
  CoverSpec spec = parse_cover_spec(kSpecCase2);
  CoverFamily fam = build_family(spec);
  c.require(fam.min_degree % 2 == 0, "threshold parameter is even");
  c.require(spec.d_total == 4, "d_total is 4");
  for (long long nstar : {fam.min_degree, fam.min_degree + 2, fam.min_degree + 4})
    check_instance(c, fam, spec, nstar, 10.0);
  return c;
}

Check criterion3() {
  Check c;
  CoverSpec spec = parse_cover_spec(kSpecCase1Odd);
  CoverFamily fam = build_family(spec);
  c.require(fam.min_degree % 2 == 0, "threshold parameter is even");
  c.require((fam.min_degree - fam.n) % 2 == 0, "threshold minus wrap parameter is even");
  for (long long nstar : {fam.min_degree, fam.min_degree + 2, fam.min_degree + 4})
    check_instance(c, fam, spec, nstar, 10.0);
  return c;
}

Check criterion4() {
  Check c;
  CoverSpec sa = parse_cover_spec(kSpecCase1Even);
  CoverSpec sb = parse_cover_spec(kSpecCase1EvenB);
  CoverFamily fa = build_family(sa), fb = build_family(sb);
  long long n0 = std::max(fa.min_degree, fb.min_degree);
  auto graphs = uniform_degree({fa, fb}, n0);
  c.require(graphs.size() == 2, "two graphs");
  c.require(graphs[0].vertices == 2 * n0 + 1, "first degree is 2 N* + 1");
  c.require(graphs[1].vertices == 2 * n0 + 1, "second degree is 2 N* + 1");
  c.require(verify_certificate(graphs[0], sa, n0).overall(), "first certificate");
  c.require(verify_certificate(graphs[1], sb, n0).overall(), "second certificate");
  return c;
}

struct RandomInstance {
  SurfacePresentation pres;
  std::vector<Word> peripherals;
  LabeledGraph folded;
};

RandomInstance random_instance(std::mt19937_64& rng, int max_vertices) {
  // alphabet sizes 3..5
  static const std::pair<int, int> shapes[] = {{1, 2}, {1, 3}, {2, 1}, {2, 2}, {1, 4}};
  for (;;) {
    auto [g, nb] = shapes[rng() % 5];
    RandomInstance inst;
    inst.pres = SurfacePresentation{Alphabet{g, nb}, std::vector<int>(1, nb)};
    for (int b = 1; b <= nb; ++b) inst.peripherals.push_back(inst.pres.peripheral_word(b));
    LabeledGraph raw = random_wedge(rng, inst.pres.alphabet.size(), 2 + rng() % 4, 8);
    if (raw.vertices > max_vertices) continue;
    inst.folded = fold(raw).graph;
    bool clean = true;
    for (const Word& x : inst.peripherals)
      if (has_power_loop(inst.folded, x, inst.folded.vertices)) clean = false;
    if (clean) return inst;
  }
}

Check criterion5() {
  Check c;
  auto t0 = Clock::now();
  std::mt19937_64 rng(501);
  for (int i = 0; i < 100; ++i) {
    RandomInstance inst = random_instance(rng, 50);
    CompletionOptions opts;
    opts.seed = rng();
    LabeledGraph reg = is_regular(inst.folded)
                           ? inst.folded
                           : regular_complete(inst.folded, inst.peripherals, opts).graph;
    PermRep rep = to_perm_rep(reg);
    for (int j = 0; j < 500; ++j) {
      Word w = random_reduced_word(rng, inst.pres.alphabet.size(), 1 + rng() % 30);
      if (oracle_member(rep, w) != is_member(reg, w)) {
        c.require(false, "oracle/graph disagreement at instance " + std::to_string(i));
        break;
      }
    }
  }
  c.require(seconds_since(t0) < 60.0, "time budget");
  return c;
}

Check criterion6() {
  Check c;
  auto t0 = Clock::now();
  std::mt19937_64 rng(601);
  for (int i = 0; i < 100; ++i) {
    LabeledGraph g = random_wedge(rng, 3 + rng() % 3, 3 + rng() % 4, 9);
    auto ref = canonical_form(fold(g).graph);
    for (int rep = 0; rep < 5; ++rep)
      if (canonical_form(fold_random_order(g, rng).graph) != ref) {
        c.require(false, "fold order changed the result at instance " + std::to_string(i));
        break;
      }
  }
  c.require(seconds_since(t0) < 30.0, "time budget");
  return c;
}

Check criterion7() {
  Check c;
  auto t0 = Clock::now();
  std::mt19937_64 rng(701);
  for (int i = 0; i < 100; ++i) {
    RandomInstance inst = random_instance(rng, 40);
    if (is_regular(inst.folded)) continue;
    CompletionOptions opts;
    opts.seed = rng();
    CompletionResult res = regular_complete(inst.folded, inst.peripherals, opts);
    bool ok = is_regular(res.graph);
    for (size_t e = 0; e < inst.folded.edges.size(); ++e)
      if (!(res.graph.edges[e] == inst.folded.edges[e])) ok = false;
    PermRep rep = to_perm_rep(res.graph);
    for (const Word& x : inst.peripherals)
      if (!oracle_power_free(rep, x)) ok = false;
    if (!ok) c.require(false, "completion contract at instance " + std::to_string(i));
  }
  c.require(seconds_since(t0) < 60.0, "time budget");
  return c;
}

Check criterion8(const CoverFamily& fam) {
  Check c;
  const CoverSpec& spec = fam.spec;
  long long nstar = fam.min_degree;
  LabeledGraph g = instantiate(fam, nstar);
  CoverCertificate cert = verify_certificate(g, spec, nstar);
  for (int k = 1; k <= spec.pres.torus_count(); ++k)
    for (int p = 1; p <= spec.pres.boundary_layout[k - 1]; ++p) {
      int b = spec.pres.boundary_index(k, p);
      long long want = nstar * spec.d_total / spec.d_ik(k);
      c.require(static_cast<long long>(cert.wrappings[b - 1].size()) == spec.d_ik(k),
                "arc count of boundary " + std::to_string(b));
      for (long long w : cert.wrappings[b - 1])
        c.require(w == want, "wrapping number of boundary " + std::to_string(b));
    }
  c.require(cert.covered_boundary == spec.pres.boundary_count(),
            "covered boundary count equals the base count");
  c.require(cert.euler_ok, "covered genus is a non-negative integer");
  c.require(cert.even_spacing, "even spacing flag");
  return c;
}

Check criterion9() {
  Check c;
  long long deltas[] = {1, 2, 3, 4};
  long long counts[] = {2, 4, 6};
  int built = 0;
  for (long long delta : deltas)
    for (long long c1 : counts)
      for (long long c2 : counts) {
        if (built >= 20) break;
        ++built;
        SlopeSystem sys;
        Slope s1 = Slope::make(1, 0);
        // intersection of 1/0 with 0/1 is 1, with 1/delta it is delta
        Slope s2 = delta == 1 ? Slope::make(0, 1) : Slope::make(1, delta);
        sys.tori.push_back({{s1, s2}, {c1, c2}});
        sys.validate();
        long long d1 = d_ik(sys, 1, 1), d2 = d_ik(sys, 2, 1);
        c.require(d1 == delta * c2, "d_1k formula");
        c.require(d2 == delta * c1, "d_2k formula");
        c.require(d1 % 2 == 0 && d1 >= 2, "d_1k even and at least 2");
        c.require(d2 % 2 == 0 && d2 >= 2, "d_2k even and at least 2");
        c.require(intersection_count(sys, 1) == c1 * c2 * delta, "point count");
        c.require(total_cusp_ends(sys, 1) == total_cusp_ends(sys, 2), "i-symmetry");
        long long m1 = 1 + (built % 5), m2 = 1 + (built % 7);
        c.require(cusp_cover_index(m1, m2, s1, s2) == m1 * m2 * delta, "cusp cover index");
      }
  c.require(built == 20, "twenty systems built");
  return c;
}

Check criterion10(const CoverFamily& fam) {
  Check c;
  int detected = 0, total = 0;
  auto count_case = [&](bool ok, const std::string& what) {
    ++total;
    if (ok)
      ++detected;
    else
      c.require(false, what);
  };

  // 1-2: invalid spec data is refused with the named errors
  try {
    build_family(parse_cover_spec(
        R"({"genus":1,"boundary":[1,1],"d":[2,2],"w":["x1"],"y":["a1"]})"));
    count_case(false, "peripheral w not detected");
  } catch (const error& e) {
    count_case(e.code() == errc::subgroup_not_peripheral_free, "peripheral w error code");
  }
  try {
    build_family(parse_cover_spec(
        R"({"genus":1,"boundary":[1,1],"d":[2,2],"w":["a1 b1"],"y":["a1 b1"]})"));
    count_case(false, "y in subgroup not detected");
  } catch (const error& e) {
    count_case(e.code() == errc::y_not_separated, "y error code");
  }

  const CoverSpec& spec = fam.spec;
  long long nstar = fam.min_degree;
  LabeledGraph base = instantiate(fam, nstar);

  auto expect_fail = [&](LabeledGraph g, long long param, const std::string& what) {
    try {
      count_case(!verify_certificate(g, spec, param).overall(), what);
    } catch (const error&) {
      count_case(true, what);
    }
  };

  // 3-4: flipped gadget-style edges (orientation mutations)
  for (int which = 0; which < 2; ++which) {
    LabeledGraph g = base;
    int seen = 0;
    for (Edge& e : g.edges)
      if (e.gen == 2 && e.from != e.to && seen++ == which) {
        std::swap(e.from, e.to);
        break;
      }
    expect_fail(g, nstar, "flipped edge " + std::to_string(which));
  }
  // 5: relabeled edge
  {
    LabeledGraph g = base;
    for (Edge& e : g.edges)
      if (e.gen == 2 && e.from != e.to) {
        e.gen = 0;
        break;
      }
    expect_fail(g, nstar, "relabeled edge");
  }
  // 6: deleted edge
  {
    LabeledGraph g = base;
    g.edges.pop_back();
    expect_fail(g, nstar, "deleted edge");
  }
  // 7: duplicated edge
  {
    LabeledGraph g = base;
    g.edges.push_back(g.edges.front());
    expect_fail(g, nstar, "duplicated edge");
  }
  // 8: dropped vertex
  {
    LabeledGraph g = base;
    int victim = g.vertices - 1;
    LabeledGraph h;
    h.alphabet = g.alphabet;
    h.base = g.base;
    h.vertices = g.vertices - 1;
    for (const Edge& e : g.edges)
      if (e.from != victim && e.to != victim) h.edges.push_back(e);
    expect_fail(h, nstar, "dropped vertex");
  }
  // 9: swapped targets of two same-label edges (stays regular, splits a cycle)
  {
    LabeledGraph g = base;
    int first = -1, second = -1;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
      if (g.edges[e].gen == 2 && g.edges[e].from != g.edges[e].to) {
        if (first < 0)
          first = e;
        else {
          second = e;
          break;
        }
      }
    std::swap(g.edges[first].to, g.edges[second].to);
    expect_fail(g, nstar, "swapped targets");
  }
  // 10: wrong degree parameter
  expect_fail(base, nstar + 2, "wrong degree parameter");

  c.require(total == 10, "ten mutation cases ran");
  c.require(detected == total, "every mutation detected");
  return c;
}

}  // namespace

int main() {
  int failures = 0;
  CoverFamily fam1;  // shared by criteria 1, 8 and 10
  std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"criterion 1 (case1-even reproduction)", [&] { return criterion1(fam1); }},
      {"criterion 2 (case2 reproduction)", [] { return criterion2(); }},
      {"criterion 3 (case1-odd reproduction and parity)", [] { return criterion3(); }},
      {"criterion 4 (uniform degree)", [] { return criterion4(); }},
      {"criterion 5 (oracle equivalence)", [] { return criterion5(); }},
      {"criterion 6 (fold confluence)", [] { return criterion6(); }},
      {"criterion 7 (regular completion contract)", [] { return criterion7(); }},
      {"criterion 8 (even spacing)", [&] { return criterion8(fam1); }},
      {"criterion 9 (slope identities)", [] { return criterion9(); }},
      {"criterion 10 (negative paths)", [&] { return criterion10(fam1); }},
  };
  for (auto& [name, run] : criteria) {
    auto t0 = Clock::now();
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.failures++;
      c.detail << "  exception: " << e.what() << "\n";
    }
    double dt = seconds_since(t0);
    std::printf("%-48s %s (%.2fs)\n", name.c_str(), c.failures == 0 ? "PASS" : "FAIL", dt);
    if (c.failures) {
      std::cout << c.detail.str();
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}
