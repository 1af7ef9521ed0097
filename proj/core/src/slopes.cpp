#include "foldcover/slopes.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

namespace foldcover {

Slope Slope::make(long long p, long long q) {
  if (p == 0 && q == 0) throw error(errc::validation, "slope (0,0) is not a curve");
  if (std::gcd(std::llabs(p), std::llabs(q)) != 1)
    throw error(errc::validation, "slope coordinates must be coprime");
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

long long slope_intersection(const Slope& a, const Slope& b) {
  return std::llabs(a.p * b.q - b.p * a.q);
}

void SlopeSystem::validate() const {
  if (tori.empty()) throw error(errc::validation, "slope system has no tori");
  for (const TorusData& t : tori) {
    for (int i = 0; i < 2; ++i) {
      if (t.count[i] <= 0 || t.count[i] % 2 != 0)
        throw error(errc::validation, "curve counts must be positive and even");
    }
    if (t.slope[0] == t.slope[1])
      throw error(errc::validation, "the two surfaces must have distinct slopes on each torus");
  }
}

long long d_ik(const SlopeSystem& sys, int i, int k) {
  if (i < 1 || i > 2 || k < 1 || k > sys.torus_count())
    throw error(errc::validation, "surface or torus index out of range");
  const TorusData& t = sys.tori[k - 1];
  long long delta = slope_intersection(t.slope[0], t.slope[1]);
  long long d = delta * t.count[2 - i];  // curves of the other surface
  if (d < 2 || d % 2 != 0)
    throw error(errc::validation, "d_ik must be even and at least 2");
  return d;
}

long long d_lcm(const SlopeSystem& sys, int i) {
  long long l = 1;
  for (int k = 1; k <= sys.torus_count(); ++k) l = std::lcm(l, d_ik(sys, i, k));
  return l;
}

long long intersection_count(const SlopeSystem& sys, int k) {
  const TorusData& t = sys.tori[k - 1];
  return t.count[0] * t.count[1] * slope_intersection(t.slope[0], t.slope[1]);
}

long long total_cusp_ends(const SlopeSystem& sys, int i) {
  (void)i;  // the count is i-symmetric
  long long total = 0;
  for (int k = 1; k <= sys.torus_count(); ++k) total += intersection_count(sys, k);
  return total;
}

long long cusp_cover_index(long long m1, long long m2, const Slope& l1, const Slope& l2) {
  if (m1 < 1 || m2 < 1) throw error(errc::validation, "cover powers must be positive");
  if (l1 == l2) throw error(errc::validation, "equal slopes span a rank-1 sublattice");
  return m1 * m2 * slope_intersection(l1, l2);
}

namespace {

Slope parse_slope(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0)
    throw error(errc::parse_error, "expected '" + key + "=p/q' got '" + tok + "'");
  std::string body = tok.substr(key.size() + 1);
  auto slash = body.find('/');
  if (slash == std::string::npos)
    throw error(errc::parse_error, "slope must be written p/q in '" + tok + "'");
  try {
    long long p = std::stoll(body.substr(0, slash));
    long long q = std::stoll(body.substr(slash + 1));
    return Slope::make(p, q);
  } catch (const error&) {
    throw;
  } catch (...) {
    throw error(errc::parse_error, "bad slope numbers in '" + tok + "'");
  }
}

long long parse_int(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0)
    throw error(errc::parse_error, "expected '" + key + "=<int>' got '" + tok + "'");
  try {
    return std::stoll(tok.substr(key.size() + 1));
  } catch (...) {
    throw error(errc::parse_error, "bad integer in '" + tok + "'");
  }
}

}  // namespace

SlopeSystem read_slope_system(const std::string& text) {
  SlopeSystem sys;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind[0] == '#') continue;
    if (kind != "torus") throw error(errc::parse_error, "unknown line kind '" + kind + "'");
    int k;
    std::string s1, c1, s2, c2;
    if (!(ls >> k >> s1 >> c1 >> s2 >> c2))
      throw error(errc::parse_error, "bad torus line: " + line);
    if (k != sys.torus_count() + 1)
      throw error(errc::parse_error, "torus lines must be numbered consecutively from 1");
    TorusData t;
    t.slope[0] = parse_slope(s1, "s1");
    t.count[0] = parse_int(c1, "c1");
    t.slope[1] = parse_slope(s2, "s2");
    t.count[1] = parse_int(c2, "c2");
    sys.tori.push_back(t);
  }
  sys.validate();
  return sys;
}

SlopeSystem read_slope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream all;
  all << in.rdbuf();
  return read_slope_system(all.str());
}

}  // namespace foldcover
