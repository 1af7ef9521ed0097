#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foldcover/errors.hpp"

namespace foldcover {

// One signed generator occurrence.  sign is +1 or -1.
struct Letter {
  int gen = 0;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Generating set of a bounded-surface group: a1,b1,...,ag,bg,x1,...,x_{nb-1}.
// For nb = 1 the x-letters are absent and genus must be positive.
struct Alphabet {
  int genus = 0;
  int n_boundary = 0;

  int size() const { return 2 * genus + n_boundary - 1; }
  bool is_genus_letter(int gen) const { return gen < 2 * genus; }

  std::string name(int gen) const;
  std::optional<int> index(const std::string& name) const;

  void validate() const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

// A freely reduced word.  All public constructors and operations keep the
// reduced invariant; raw letter sequences only exist inside reduce().
struct Word {
  std::vector<Letter> letters;

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

Word reduce(const std::vector<Letter>& raw);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);     // reduced product
Word power(const Word& w, long long k);        // reduced w^k, k may be negative
Word conjugate(const Word& t, const Word& w);  // t w t^-1, reduced

// Grammar: whitespace-separated tokens, token = name | name^-1 | name^k.
Word parse_word(const Alphabet& a, const std::string& text);
std::string render_word(const Alphabet& a, const Word& w);

// Bounded surface with its boundary circles distributed over tori.
// boundary_layout[k] = number of boundary circles on torus k (0-based k),
// summing to alphabet.n_boundary.  Boundary circles are numbered 1..n_b in
// torus-then-position order.
struct SurfacePresentation {
  Alphabet alphabet;
  std::vector<int> boundary_layout;

  int boundary_count() const { return alphabet.n_boundary; }
  int torus_count() const { return static_cast<int>(boundary_layout.size()); }
  // 1-based circle number of the p-th circle on torus k (both 1-based).
  int boundary_index(int k, int p) const;

  // x_b for b = 1..n_b.  For b < n_b this is the single letter x_b; for
  // b = n_b it is [a1,b1]...[ag,bg] x_1...x_{n_b-1}.
  Word peripheral_word(int b) const;

  void validate() const;
};

}  // namespace foldcover
