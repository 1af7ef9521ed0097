#include "foldcover/pipeline.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "foldcover/completion.hpp"
#include "foldcover/perm.hpp"

namespace foldcover {

namespace {

// Thrown when a wrap parameter is too small for a clean cut-point selection;
// the caller reacts by growing n, so this never escapes the pipeline.
struct SelectFail {
  std::string why;
};

int vertex_at(const LabeledGraph& g, const BoundaryPath& bp, long long pos) {
  if (pos == 0) {
    const Edge& e = g.edges[bp.edge_ids[0]];
    return bp.forward[0] ? e.from : e.to;
  }
  const Edge& e = g.edges[bp.edge_ids[pos - 1]];
  return bp.forward[pos - 1] ? e.to : e.from;
}

void check_no_peripheral_loops(const LabeledGraph& g, const CoverSpec& spec, errc code,
                               const std::string& stage) {
  for (int b = 1; b <= spec.pres.boundary_count(); ++b) {
    Word x = spec.pres.peripheral_word(b);
    if (auto loop = has_power_loop(g, x, g.vertices))
      throw error(code, stage + ": power loop of boundary word " + std::to_string(b) +
                            " at power " + std::to_string(loop->second));
  }
}

}  // namespace

CoreGraph build_core(const CoverSpec& spec) {
  LabeledGraph g;
  g.alphabet = spec.pres.alphabet.size();
  g.base = g.add_vertex();
  for (const Word& w : spec.w_words) add_loop(g, w);
  for (const Word& y : spec.y_words) {
    if (y.empty())
      throw error(errc::y_not_separated, "the empty word lies in every subgroup");
    add_path(g, y);
  }
  std::vector<std::vector<std::vector<int>>> pre(spec.pres.torus_count());
  for (int k = 1; k <= spec.pres.torus_count(); ++k) {
    pre[k - 1].resize(spec.pres.boundary_layout[k - 1]);
    for (int p = 1; p <= spec.pres.boundary_layout[k - 1]; ++p) {
      for (int q = 1; q <= spec.d_ik(k); ++q) {
        Word prefix = spec.anchor_prefix(k, p, q);
        pre[k - 1][p - 1].push_back(prefix.empty() ? g.base
                                                   : attach_path(g, prefix, g.base).first);
      }
    }
  }

  FoldResult fr = fold(g);
  CoreGraph core;
  core.graph = std::move(fr.graph);

  for (const Word& w : spec.w_words)
    if (!is_member(core.graph, w))
      throw error(errc::internal, "a w-loop failed to close after folding");
  for (size_t i = 0; i < spec.y_words.size(); ++i) {
    auto end = trace(core.graph, spec.y_words[i], core.graph.base);
    if (!end || *end == core.graph.base)
      throw error(errc::y_not_separated,
                  "y-word " + std::to_string(i + 1) + " lies in the w-subgroup");
  }
  check_no_peripheral_loops(core.graph, spec, errc::subgroup_not_peripheral_free,
                            "w-subgroup");

  core.anchors.resize(spec.pres.torus_count());
  for (int k = 1; k <= spec.pres.torus_count(); ++k) {
    core.anchors[k - 1].resize(spec.pres.boundary_layout[k - 1]);
    for (int p = 1; p <= spec.pres.boundary_layout[k - 1]; ++p) {
      auto& dst = core.anchors[k - 1][p - 1];
      for (int v : pre[k - 1][p - 1]) dst.push_back(fr.vertex_map[v]);
      for (size_t q = 0; q + 1 < dst.size(); ++q)
        if (dst[q] == dst[q + 1])
          throw error(errc::connector_not_separating,
                      "connector words do not separate the marked paths of boundary (" +
                          std::to_string(k) + "," + std::to_string(p) + ")");
      int b = spec.pres.boundary_index(k, p);
      Word x = spec.pres.peripheral_word(b);
      for (int v : dst)
        core.max_anchor_ray =
            std::max(core.max_anchor_ray, maximal_x_path(core.graph, x, v).length());
    }
  }
  core.diameter = diameter(core.graph);
  return core;
}

PoweredGraph build_powered(const CoverSpec& spec, const CoreGraph& core, long long n) {
  if (n <= 0 || n % 2 != 0) throw error(errc::internal, "wrap parameter must be even");
  LabeledGraph g = core.graph;
  PoweredGraph pg;
  pg.n = n;
  std::vector<BoundaryPath> paths;
  for (int k = 1; k <= spec.pres.torus_count(); ++k) {
    for (int p = 1; p <= spec.pres.boundary_layout[k - 1]; ++p) {
      BoundaryPath bp;
      bp.k = k;
      bp.p = p;
      bp.b = spec.pres.boundary_index(k, p);
      bp.x = spec.pres.peripheral_word(bp.b);
      long long seg_pow = n * spec.d_total / spec.d_ik(k);
      Word seg = power(bp.x, seg_pow);
      if (seg.length() != seg_pow * bp.x.length())
        throw error(errc::internal, "peripheral word is not cyclically reduced");
      const auto& anchors = core.anchors[k - 1][p - 1];
      for (int q = 1; q <= spec.d_ik(k); ++q) {
        int to = q < spec.d_ik(k) ? anchors[q] : -1;
        auto [end, eids] = attach_path(g, seg, anchors[q - 1], to);
        (void)end;
        for (int e : eids) bp.edge_ids.push_back(e);
        for (const Letter& l : seg.letters) bp.forward.push_back(l.sign > 0);
      }
      paths.push_back(std::move(bp));
    }
  }
  FoldResult fr = fold(g);
  pg.graph = std::move(fr.graph);
  for (BoundaryPath& bp : paths)
    for (int& e : bp.edge_ids) e = fr.edge_map[e];
  pg.paths = std::move(paths);
  long long max_d = *std::max_element(spec.d_per_torus.begin(), spec.d_per_torus.end());
  pg.margin_radius = static_cast<int>(2 * max_d) + core.diameter + 1;
  return pg;
}

std::vector<CutPoint> select_cut_points(const CoverSpec& spec, const PoweredGraph& pg) {
  const LabeledGraph& g = pg.graph;
  const long long n = pg.n;
  const int nb = spec.pres.boundary_count();
  std::vector<int> deg(g.vertices, 0);
  for (const Edge& e : g.edges) {
    ++deg[e.from];
    ++deg[e.to];
  }
  std::vector<int> near = distances_from(g, g.base, pg.margin_radius);
  auto clean = [&](long long pos, const BoundaryPath& bp) {
    int v = vertex_at(g, bp, pos);
    return deg[v] == 2 && near[v] < 0;
  };

  std::vector<CutPoint> cuts;
  std::set<int> used;
  for (int pi = 0; pi < static_cast<int>(pg.paths.size()); ++pi) {
    const BoundaryPath& bp = pg.paths[pi];
    const long long len = bp.x.length();
    const bool last = bp.b == nb;
    const int genus = spec.pres.alphabet.genus;
    for (int a = 1; a <= spec.d_total; ++a) {
      const long long block_start = (a - 1) * n * len;
      const long long block_end = a * n * len;
      CutPoint cp;
      cp.path = pi;
      cp.block = a;
      long long u = block_start + (n / 2) * len;
      if (last) {
        long long phase =
            spec.case_tag == CaseTag::case2 ? 1 : (4LL * genus) % len;
        while (u % len != phase) ++u;
      }
      cp.upos = u;
      long long u2 = -1;
      if (last && spec.case_tag == CaseTag::case1_odd) u2 = u + 4 * len + 1;
      if (spec.case_tag == CaseTag::case2) u2 = u + 2 * len + 2;
      cp.upos2 = u2;

      long long hi = u2 > 0 ? u2 : u;
      if (u - len < block_start || hi + len > block_end)
        throw SelectFail{"cut positions leave their block"};
      if (!clean(u, bp)) throw SelectFail{"primary cut vertex not clean"};
      if (u2 > 0) {
        if (!clean(u2, bp)) throw SelectFail{"secondary cut vertex not clean"};
        for (long long t = u + 1; t < u2; ++t)
          if (!clean(t, bp)) throw SelectFail{"cut interior not clean"};
      }
      for (long long t : {u, u2})
        if (t >= 0 && !used.insert(vertex_at(g, bp, t)).second)
          throw SelectFail{"cut vertices collide"};
      cuts.push_back(cp);
    }
  }
  return cuts;
}

long long choose_wrap_parameter(const CoverSpec& spec, const CoreGraph& core) {
  long long bound = 40LL * spec.pres.alphabet.size() + 2LL * core.max_anchor_ray;
  long long n = bound + 1;
  if (n % 2 != 0) ++n;
  for (int tries = 0; tries < 64; ++tries, n += 2) {
    try {
      PoweredGraph pg = build_powered(spec, core, n);
      select_cut_points(spec, pg);
      return n;
    } catch (const SelectFail&) {
      continue;
    }
  }
  throw error(errc::internal, "no usable wrap parameter found");
}

int gadget_base_size(CaseTag tag) {
  switch (tag) {
    case CaseTag::case1_even: return 2;
    case CaseTag::case1_odd: return 3;
    case CaseTag::case2: return 5;
  }
  return 0;
}

int gadget_gain(CaseTag tag) { return gadget_base_size(tag) - 1; }

std::vector<int> append_gadget(LabeledGraph& g, const CoverSpec& spec, int size) {
  const int genus = spec.pres.alphabet.genus;
  const int nb = spec.pres.boundary_count();
  std::vector<int> spine;
  for (int i = 0; i < size; ++i) spine.push_back(g.add_vertex());
  if (spec.case_tag == CaseTag::case2) {
    if (size < 5 || size % 2 == 0)
      throw error(errc::internal, "case2 gadget size must be odd and at least 5");
    // Letters a2..bg idle on loops at every vertex; a1 edges reflect the
    // spine, b1 edges shift it, leaving in-a1/in-b1 free at the first vertex
    // and out-a1/out-b1 free at the last.
    for (int v : spine)
      for (int gen = 2; gen < 2 * genus; ++gen) g.add_edge(v, v, gen);
    for (int z = 1; z <= size - 1; ++z) g.add_edge(spine[z - 1], spine[size + 1 - z - 1], 0);
    for (int z = 1; z <= size - 1; ++z) g.add_edge(spine[z - 1], spine[z], 1);
    return spine;
  }
  if (size < 2) throw error(errc::internal, "gadget size must be at least 2");
  for (int v : spine)
    for (int gen = 0; gen < 2 * genus; ++gen) g.add_edge(v, v, gen);
  for (int t = 0; t + 1 < size; ++t) {
    for (int xi = 1; xi <= nb - 1; ++xi) {
      bool l2r = spec.case_tag == CaseTag::case1_even ? (xi % 2 == 1)
                                                      : (xi == 1 || xi % 2 == 0);
      int gen = 2 * genus + xi - 1;
      if (l2r)
        g.add_edge(spine[t], spine[t + 1], gen);
      else
        g.add_edge(spine[t + 1], spine[t], gen);
    }
  }
  return spine;
}

namespace {

// Which gadget end receives the arriving path edge of a cut.
bool arrives_at_first(const CoverSpec& spec, int b, bool secondary) {
  const int nb = spec.pres.boundary_count();
  switch (spec.case_tag) {
    case CaseTag::case1_even:
      return b % 2 == 1 || b == nb;
    case CaseTag::case1_odd:
      if (secondary) return true;
      return b == 1 || b % 2 == 0 || b == nb;
    case CaseTag::case2:
      return !secondary;
  }
  return true;
}

}  // namespace

GadgetedGraph insert_gadgets(const CoverSpec& spec, const PoweredGraph& pg,
                             const std::vector<CutPoint>& cuts) {
  LabeledGraph g = pg.graph;
  const int kappa0 = gadget_base_size(spec.case_tag);
  std::vector<std::vector<int>> spines;
  for (int a = 1; a <= spec.d_total; ++a) spines.push_back(append_gadget(g, spec, kappa0));

  // (edge id, endpoint side) -> new endpoint; side 0 = from, 1 = to.
  std::map<std::pair<int, int>, int> patch;
  std::set<int> deleted;
  auto cut_one = [&](const BoundaryPath& bp, long long pos, int first_v, int last_v,
                     bool secondary) {
    int u = vertex_at(pg.graph, bp, pos);
    if (!deleted.insert(u).second) throw error(errc::internal, "cut vertex reused");
    int e_arr = bp.edge_ids[pos - 1];
    int arr_side = bp.forward[pos - 1] ? 1 : 0;
    int e_leave = bp.edge_ids[pos];
    int leave_side = bp.forward[pos] ? 0 : 1;
    bool to_first = arrives_at_first(spec, bp.b, secondary);
    if (!patch.emplace(std::make_pair(e_arr, arr_side), to_first ? first_v : last_v).second)
      throw error(errc::internal, "edge patched twice");
    if (!patch.emplace(std::make_pair(e_leave, leave_side), to_first ? last_v : first_v).second)
      throw error(errc::internal, "edge patched twice");
  };
  for (const CutPoint& cp : cuts) {
    const BoundaryPath& bp = pg.paths[cp.path];
    const auto& spine = spines[cp.block - 1];
    cut_one(bp, cp.upos, spine.front(), spine.back(), false);
    if (cp.upos2 >= 0) cut_one(bp, cp.upos2, spine.front(), spine.back(), true);
  }
  for (auto& [key, target] : patch) {
    Edge& e = g.edges[key.first];
    (key.second == 0 ? e.from : e.to) = target;
  }
  for (const Edge& e : g.edges)
    if (deleted.count(e.from) || deleted.count(e.to))
      throw error(errc::internal, "an edge still references a cut vertex");

  // Drop the cut vertices and renumber.
  std::vector<int> remap(g.vertices, -1);
  int next = 0;
  for (int v = 0; v < g.vertices; ++v)
    if (!deleted.count(v)) remap[v] = next++;
  LabeledGraph cutg;
  cutg.alphabet = g.alphabet;
  cutg.vertices = next;
  cutg.base = remap[g.base];
  for (const Edge& e : g.edges) cutg.add_edge(remap[e.from], remap[e.to], e.gen);

  FoldResult fr = fold(cutg);
  GadgetedGraph out;
  out.graph = std::move(fr.graph);
  for (auto& spine : spines) {
    GadgetSite site;
    for (int v : spine) site.spine.push_back(fr.vertex_map[remap[v]]);
    std::set<int> uniq(site.spine.begin(), site.spine.end());
    if (uniq.size() != site.spine.size())
      throw error(errc::gadget_contract, "gadget spine collapsed during folding");
    out.sites.push_back(std::move(site));
  }

  // Oracle contract for the surgered graph.
  const LabeledGraph& f = out.graph;
  long long wrap = pg.n + gadget_gain(spec.case_tag);
  for (const Word& w : spec.w_words)
    if (!is_member(f, w)) throw error(errc::gadget_contract, "a w-loop broke");
  for (const Word& y : spec.y_words) {
    auto end = trace(f, y, f.base);
    if (!end || *end == f.base) throw error(errc::gadget_contract, "a y-path closed");
  }
  for (int k = 1; k <= spec.pres.torus_count(); ++k)
    for (int p = 1; p <= spec.pres.boundary_layout[k - 1]; ++p)
      for (int q = 1; q <= spec.d_ik(k) - 1; ++q)
        if (!is_member(f, arc_word(spec, wrap, k, p, q)))
          throw error(errc::gadget_contract,
                      "arc word (" + std::to_string(k) + "," + std::to_string(p) + "," +
                          std::to_string(q) + ") is not a loop after insertion");
  check_no_peripheral_loops(f, spec, errc::gadget_contract, "surgered graph");
  return out;
}

CoverFamily build_family(const CoverSpec& spec, const BuildOptions& opts) {
  spec.validate();
  CoreGraph core = build_core(spec);
  long long n = choose_wrap_parameter(spec, core);
  PoweredGraph pg = build_powered(spec, core, n);
  std::vector<CutPoint> cuts;
  try {
    cuts = select_cut_points(spec, pg);
  } catch (const SelectFail& sf) {
    throw error(errc::internal, "cut selection failed after parameter choice: " + sf.why);
  }
  GadgetedGraph gg = insert_gadgets(spec, pg, cuts);

  CoverFamily fam;
  fam.spec = spec;
  fam.n = n;
  fam.delta = gadget_gain(spec.case_tag);
  fam.sites = gg.sites;

  LabeledGraph padded = gg.graph;
  long long target = (n + 6) * spec.d_total + 2;
  if (padded.vertices < target)
    add_missing_label_tail(padded, static_cast<int>(target - padded.vertices));

  // The completion must not touch the gadgets, so their vertices must
  // already be locally regular.
  {
    std::vector<int> out_deg(static_cast<size_t>(padded.vertices) * padded.alphabet, 0);
    std::vector<int> in_deg = out_deg;
    for (const Edge& e : padded.edges) {
      ++out_deg[static_cast<size_t>(e.from) * padded.alphabet + e.gen];
      ++in_deg[static_cast<size_t>(e.to) * padded.alphabet + e.gen];
    }
    for (const GadgetSite& site : fam.sites)
      for (int v : site.spine)
        for (int gen = 0; gen < padded.alphabet; ++gen)
          if (out_deg[static_cast<size_t>(v) * padded.alphabet + gen] != 1 ||
              in_deg[static_cast<size_t>(v) * padded.alphabet + gen] != 1)
            throw error(errc::gadget_contract, "gadget vertex is not locally regular");
  }

  std::vector<Word> peripherals;
  for (int b = 1; b <= spec.pres.boundary_count(); ++b)
    peripherals.push_back(spec.pres.peripheral_word(b));
  CompletionOptions copts;
  copts.seed = opts.seed;
  copts.degree_parity = spec.case_tag == CaseTag::case1_even ? 0 : 1;
  CompletionResult comp = regular_complete(padded, peripherals, copts);

  fam.graph = std::move(comp.graph);
  fam.m_star = fam.graph.vertices;
  fam.min_degree = fam.m_star - (spec.d_total - 1) * (n + fam.delta) - 1;
  if (fam.min_degree % 2 != 0)
    throw error(errc::internal, "threshold degree parameter came out odd");
  if (fam.min_degree < n + 4)
    throw error(errc::internal, "threshold degree parameter is too small");
  return fam;
}

LabeledGraph instantiate(const CoverFamily& family, long long degree_param) {
  if (degree_param % 2 != 0)
    throw error(errc::validation, "degree parameter must be even");
  if (degree_param < family.min_degree)
    throw error(errc::validation, "degree parameter below the family threshold");

  const LabeledGraph& g = family.graph;
  const int kappa0 = gadget_base_size(family.spec.case_tag);
  const int d_total = static_cast<int>(family.spec.d_total);
  std::vector<int> owner(g.vertices, -1);  // gadget index per spine vertex
  for (int a = 0; a < d_total; ++a)
    for (int v : family.sites[a].spine) owner[v] = a;
  std::vector<std::map<int, int>> role(d_total);  // vertex -> spine position
  for (int a = 0; a < d_total; ++a)
    for (size_t i = 0; i < family.sites[a].spine.size(); ++i)
      role[a][family.sites[a].spine[i]] = static_cast<int>(i);

  LabeledGraph out;
  out.alphabet = g.alphabet;
  std::vector<int> remap(g.vertices, -1);
  for (int v = 0; v < g.vertices; ++v)
    if (owner[v] < 0) remap[v] = out.add_vertex();
  if (owner[g.base] >= 0) throw error(errc::internal, "base vertex inside a gadget");
  out.base = remap[g.base];

  std::vector<std::vector<int>> new_spines;
  for (int a = 0; a < d_total; ++a) {
    long long size = a + 1 < d_total ? degree_param - family.n + 1
                                     : kappa0 + (degree_param - family.min_degree);
    new_spines.push_back(append_gadget(out, family.spec, static_cast<int>(size)));
  }
  for (const Edge& e : g.edges) {
    int of = owner[e.from], ot = owner[e.to];
    if (of >= 0 && ot >= 0) {
      if (of != ot) throw error(errc::internal, "edge between two gadgets");
      continue;  // internal gadget edge, regenerated
    }
    if (of < 0 && ot < 0) {
      out.add_edge(remap[e.from], remap[e.to], e.gen);
      continue;
    }
    // Interface edge: the gadget endpoint must be a spine end.
    int a = of >= 0 ? of : ot;
    int sv = of >= 0 ? e.from : e.to;
    int pos = role[a][sv];
    int nv;
    if (pos == 0)
      nv = new_spines[a].front();
    else if (pos == kappa0 - 1)
      nv = new_spines[a].back();
    else
      throw error(errc::internal, "interface edge attaches inside a gadget spine");
    int from = of >= 0 ? nv : remap[e.from];
    int to = ot >= 0 ? nv : remap[e.to];
    out.add_edge(from, to, e.gen);
  }

  if (!is_folded(out)) throw error(errc::internal, "resized graph is not folded");
  if (!is_regular(out)) throw error(errc::internal, "resized graph is not regular");
  if (out.vertices != degree_param * family.spec.d_total + 1)
    throw error(errc::internal, "resized graph has the wrong vertex count");
  return out;
}

std::vector<LabeledGraph> uniform_degree(const std::vector<CoverFamily>& families,
                                         long long degree_param) {
  if (families.empty()) return {};
  long long d = families[0].spec.d_total;
  long long need = 0;
  for (const CoverFamily& f : families) {
    if (f.spec.d_total != d)
      throw error(errc::validation, "families do not share the wrap multiplier");
    need = std::max(need, f.min_degree);
  }
  if (degree_param < need)
    throw error(errc::validation, "degree parameter below some family threshold");
  std::vector<LabeledGraph> out;
  for (const CoverFamily& f : families) out.push_back(instantiate(f, degree_param));
  return out;
}

}  // namespace foldcover
