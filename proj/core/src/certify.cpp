#include "foldcover/certify.hpp"

#include <sstream>

namespace foldcover {

namespace {

const char* pf(bool b) { return b ? "pass" : "fail"; }

}  // namespace

std::string CoverCertificate::to_text() const {
  std::ostringstream out;
  out << "cert degree=" << degree << "\n";
  out << "cert degree_param=" << degree_param << "\n";
  out << "cert property0=" << pf(regular) << "\n";
  out << "cert property1=" << pf(vertex_count) << "\n";
  out << "cert property2=" << pf(w_loops) << "\n";
  out << "cert property3=" << pf(arc_loops) << "\n";
  out << "cert property4=" << pf(power_free) << "\n";
  out << "cert property5=" << pf(y_non_closed) << "\n";
  out << "cert boundary_components=" << pf(boundary_preserved) << "\n";
  out << "cert euler=" << pf(euler_ok) << "\n";
  out << "cert even_spacing=" << pf(even_spacing) << "\n";
  out << "cert wrappings=";
  for (size_t b = 0; b < wrappings.size(); ++b) {
    if (b) out << ';';
    for (size_t q = 0; q < wrappings[b].size(); ++q) {
      if (q) out << ',';
      out << wrappings[b][q];
    }
  }
  out << "\n";
  out << "cert covered_genus=" << covered_genus << "\n";
  out << "cert overall=" << pf(overall()) << "\n";
  return out.str();
}

std::vector<std::vector<long long>> wrapping_numbers(const LabeledGraph& g,
                                                     const CoverSpec& spec,
                                                     long long degree_param) {
  (void)degree_param;
  PermRep rep = to_perm_rep(g);
  std::vector<std::vector<long long>> out(spec.pres.boundary_count());
  for (int k = 1; k <= spec.pres.torus_count(); ++k) {
    for (int p = 1; p <= spec.pres.boundary_layout[k - 1]; ++p) {
      int b = spec.pres.boundary_index(k, p);
      long long dk = spec.d_ik(k);
      Word x = spec.pres.peripheral_word(b);
      auto px = rep.word_perm(x);
      // Marked-point lifts: endpoints of the lifted marked paths.
      std::vector<int> lifts;
      for (int q = 1; q <= dk; ++q) lifts.push_back(rep.act(spec.anchor_prefix(k, p, q), 0));
      std::vector<long long> wraps;
      for (int q = 1; q <= dk; ++q) {
        int from = lifts[q - 1];
        int to = lifts[q % dk];
        long long steps = 0;
        int v = from;
        while (v != to) {
          v = px[v];
          ++steps;
          if (steps > rep.degree) throw error(errc::internal, "marked lift left the orbit");
        }
        // The closing arc re-enters its own fiber one step before the wrap.
        wraps.push_back(q < dk ? steps : steps - 1);
      }
      out[b - 1] = std::move(wraps);
    }
  }
  return out;
}

CoverCertificate verify_certificate(const LabeledGraph& g, const CoverSpec& spec,
                                    long long degree_param) {
  CoverCertificate cert;
  cert.degree = g.vertices;
  cert.degree_param = degree_param;

  cert.regular = is_regular(g) && is_connected(g) && is_folded(g);
  cert.vertex_count = g.vertices == degree_param * spec.d_total + 1;
  if (!cert.regular) return cert;

  PermRep rep = to_perm_rep(g);

  cert.w_loops = true;
  for (const Word& w : spec.w_words)
    if (!oracle_member(rep, w)) cert.w_loops = false;

  cert.arc_loops = true;
  for (int k = 1; k <= spec.pres.torus_count(); ++k)
    for (int p = 1; p <= spec.pres.boundary_layout[k - 1]; ++p)
      for (int q = 1; q <= spec.d_ik(k) - 1; ++q)
        if (!oracle_member(rep, arc_word(spec, degree_param, k, p, q)))
          cert.arc_loops = false;

  cert.power_free = true;
  long long components = 0;
  for (int b = 1; b <= spec.pres.boundary_count(); ++b) {
    Word x = spec.pres.peripheral_word(b);
    if (!oracle_power_free(rep, x)) cert.power_free = false;
    components += static_cast<long long>(cycle_lengths(rep.word_perm(x)).size());
  }
  cert.covered_boundary = components;
  cert.boundary_preserved = components == spec.pres.boundary_count();

  cert.y_non_closed = true;
  for (const Word& y : spec.y_words)
    if (y.empty() || oracle_member(rep, y)) cert.y_non_closed = false;

  auto euler = euler_data(spec.pres, g.vertices, components);
  cert.euler_ok = euler.has_value();
  if (euler) cert.covered_genus = euler->genus;

  cert.wrappings = wrapping_numbers(g, spec, degree_param);
  cert.even_spacing = true;
  for (int k = 1; k <= spec.pres.torus_count(); ++k)
    for (int p = 1; p <= spec.pres.boundary_layout[k - 1]; ++p) {
      int b = spec.pres.boundary_index(k, p);
      long long want = degree_param * spec.d_total / spec.d_ik(k);
      for (long long w : cert.wrappings[b - 1])
        if (w != want) cert.even_spacing = false;
    }
  return cert;
}

}  // namespace foldcover
