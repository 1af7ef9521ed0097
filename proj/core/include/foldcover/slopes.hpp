#pragma once

#include <string>
#include <vector>

#include "foldcover/errors.hpp"

namespace foldcover {

// Isotopy class of an essential simple closed curve on a torus: a coprime
// integer pair up to overall sign, normalized with p >= 0 (and q > 0 when
// p == 0).
struct Slope {
  long long p = 1;
  long long q = 0;

  static Slope make(long long p, long long q);  // validates and normalizes
  friend bool operator==(const Slope&, const Slope&) = default;
};

// Minimal geometric intersection number |p q' - p' q|.
long long slope_intersection(const Slope& a, const Slope& b);

// Per torus: the two surfaces' slopes and (even, positive) curve counts.
struct TorusData {
  Slope slope[2];
  long long count[2] = {0, 0};
};

struct SlopeSystem {
  std::vector<TorusData> tori;

  int torus_count() const { return static_cast<int>(tori.size()); }
  void validate() const;
};

// d_{i,k}: intersection number in torus k between one curve of surface i and
// the whole boundary of the other surface; validated even and >= 2.
long long d_ik(const SlopeSystem& sys, int i, int k);  // i in {1,2}, k 1-based
long long d_lcm(const SlopeSystem& sys, int i);

// Intersection points of the two boundary families on torus k, and the total
// over all tori (the same for both surfaces).
long long intersection_count(const SlopeSystem& sys, int k);
long long total_cusp_ends(const SlopeSystem& sys, int i);

// Index of the sublattice of H_1(torus) generated by m1*l1 and m2*l2.
long long cusp_cover_index(long long m1, long long m2, const Slope& l1, const Slope& l2);

// File format, one line per torus:
//   torus <k> s1=<p>/<q> c1=<int> s2=<p>/<q> c2=<int>
SlopeSystem read_slope_system(const std::string& text);
SlopeSystem read_slope_file(const std::string& path);

}  // namespace foldcover
