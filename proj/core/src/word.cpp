#include "foldcover/word.hpp"

#include <cctype>
#include <sstream>

namespace foldcover {

std::string Alphabet::name(int gen) const {
  if (gen < 0 || gen >= size()) throw error(errc::internal, "generator index out of range");
  if (gen < 2 * genus) {
    int i = gen / 2 + 1;
    return (gen % 2 == 0 ? "a" : "b") + std::to_string(i);
  }
  return "x" + std::to_string(gen - 2 * genus + 1);
}

std::optional<int> Alphabet::index(const std::string& nm) const {
  if (nm.size() < 2) return std::nullopt;
  char c = nm[0];
  for (size_t i = 1; i < nm.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(nm[i]))) return std::nullopt;
  int num = 0;
  try {
    num = std::stoi(nm.substr(1));
  } catch (...) {
    return std::nullopt;
  }
  if (num < 1) return std::nullopt;
  int gen = -1;
  if (c == 'a') gen = 2 * (num - 1);
  else if (c == 'b') gen = 2 * (num - 1) + 1;
  else if (c == 'x') gen = 2 * genus + (num - 1);
  else return std::nullopt;
  if (gen < 0 || gen >= size()) return std::nullopt;
  if (c != 'x' && num > genus) return std::nullopt;
  return gen;
}

void Alphabet::validate() const {
  if (genus < 0) throw error(errc::validation, "genus must be non-negative");
  if (n_boundary < 1) throw error(errc::validation, "need at least one boundary circle");
  if (n_boundary == 1 && genus < 1)
    throw error(errc::validation, "a single boundary circle requires genus >= 1");
  if (size() < 1) throw error(errc::validation, "empty generating set");
}

Word reduce(const std::vector<Letter>& raw) {
  Word w;
  w.letters.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.sign != 1 && l.sign != -1) throw error(errc::internal, "letter sign must be +-1");
    if (!w.letters.empty() && w.letters.back().gen == l.gen &&
        w.letters.back().sign == -l.sign) {
      w.letters.pop_back();
    } else {
      w.letters.push_back(l);
    }
  }
  return w;
}

Word inverse(const Word& w) {
  Word r;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->gen, -it->sign});
  return r;
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters;
  raw.insert(raw.end(), b.letters.begin(), b.letters.end());
  return reduce(raw);
}

Word power(const Word& w, long long k) {
  if (k == 0 || w.empty()) return Word{};
  Word base = k > 0 ? w : inverse(w);
  long long reps = k > 0 ? k : -k;
  // w reduced does not guarantee w^2 reduced (cyclic cancellation), so build
  // through concat.
  Word out;
  for (long long i = 0; i < reps; ++i) out = concat(out, base);
  return out;
}

Word conjugate(const Word& t, const Word& w) { return concat(concat(t, w), inverse(t)); }

Word parse_word(const Alphabet& a, const std::string& text) {
  std::istringstream in(text);
  std::vector<Letter> raw;
  std::string tok;
  while (in >> tok) {
    std::string nm = tok;
    long long exp = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      nm = tok.substr(0, caret);
      std::string e = tok.substr(caret + 1);
      try {
        size_t used = 0;
        exp = std::stoll(e, &used);
        if (used != e.size()) throw std::invalid_argument(e);
      } catch (...) {
        throw error(errc::parse_error, "malformed exponent in token '" + tok + "'");
      }
      if (exp == 0) throw error(errc::parse_error, "zero exponent in token '" + tok + "'");
    }
    auto gen = a.index(nm);
    if (!gen) throw error(errc::parse_error, "unknown generator name '" + nm + "'");
    int sign = exp > 0 ? 1 : -1;
    for (long long i = 0; i < (exp > 0 ? exp : -exp); ++i) raw.push_back({*gen, sign});
  }
  return reduce(raw);
}

std::string render_word(const Alphabet& a, const Word& w) {
  std::ostringstream out;
  size_t i = 0;
  bool first = true;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    long long run = static_cast<long long>(j - i) * w.letters[i].sign;
    if (!first) out << ' ';
    first = false;
    out << a.name(w.letters[i].gen);
    if (run != 1) out << '^' << run;
    i = j;
  }
  return out.str();
}

int SurfacePresentation::boundary_index(int k, int p) const {
  if (k < 1 || k > torus_count() || p < 1 || p > boundary_layout[k - 1])
    throw error(errc::internal, "boundary (k,p) out of range");
  int b = 0;
  for (int i = 0; i < k - 1; ++i) b += boundary_layout[i];
  return b + p;
}

Word SurfacePresentation::peripheral_word(int b) const {
  const Alphabet& a = alphabet;
  int nb = a.n_boundary;
  if (b < 1 || b > nb) throw error(errc::validation, "boundary index out of range");
  if (b < nb) return Word{{Letter{2 * a.genus + (b - 1), 1}}};
  if (nb == 1 && a.genus == 0)
    throw error(errc::validation, "single boundary circle requires genus >= 1");
  std::vector<Letter> raw;
  for (int i = 0; i < a.genus; ++i) {
    raw.push_back({2 * i, 1});
    raw.push_back({2 * i + 1, 1});
    raw.push_back({2 * i, -1});
    raw.push_back({2 * i + 1, -1});
  }
  for (int t = 1; t < nb; ++t) raw.push_back({2 * a.genus + (t - 1), 1});
  return reduce(raw);
}

void SurfacePresentation::validate() const {
  alphabet.validate();
  if (boundary_layout.empty()) throw error(errc::validation, "no tori in boundary layout");
  int total = 0;
  for (int b : boundary_layout) {
    if (b < 0) throw error(errc::validation, "negative boundary count");
    total += b;
  }
  if (total != alphabet.n_boundary)
    throw error(errc::validation, "boundary layout does not sum to the boundary count");
}

}  // namespace foldcover
