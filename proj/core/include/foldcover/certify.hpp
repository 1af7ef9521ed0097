#pragma once

#include <string>
#include <vector>

#include "foldcover/cover_spec.hpp"
#include "foldcover/graph.hpp"
#include "foldcover/perm.hpp"

namespace foldcover {

// Full independent certificate of one cover graph: everything is recomputed
// from the graph and the spec via the permutation oracle, never from
// pipeline bookkeeping.
struct CoverCertificate {
  long long degree = 0;        // vertex count
  long long degree_param = 0;  // the requested even parameter

  bool regular = false;             // property 0
  bool vertex_count = false;        // property 1: degree == param * d_total + 1
  bool w_loops = false;             // property 2
  bool arc_loops = false;           // property 3
  bool power_free = false;          // property 4
  bool y_non_closed = false;        // property 5
  bool boundary_preserved = false;  // |covered boundary| == |boundary|
  bool euler_ok = false;
  bool even_spacing = false;

  long long covered_boundary = 0;
  long long covered_genus = -1;
  // wrappings[b-1] lists the d_ik wrapping numbers of boundary b's arcs.
  std::vector<std::vector<long long>> wrappings;

  bool overall() const {
    return regular && vertex_count && w_loops && arc_loops && power_free && y_non_closed &&
           boundary_preserved && euler_ok && even_spacing;
  }
  std::string to_text() const;  // one `cert ...` line per check
};

// Wrapping number of each arc between consecutive marked-point lifts on each
// covered boundary circle.  Requires a regular connected graph.
std::vector<std::vector<long long>> wrapping_numbers(const LabeledGraph& g,
                                                     const CoverSpec& spec,
                                                     long long degree_param);

CoverCertificate verify_certificate(const LabeledGraph& g, const CoverSpec& spec,
                                    long long degree_param);

}  // namespace foldcover
