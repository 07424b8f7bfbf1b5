#include "gpcx/normal_form.hpp"

#include <algorithm>

namespace gpcx {

namespace {

void check_letter(const PresentationGraph& g, Letter x) {
  if (x.gen >= g.size()) {
    throw InvalidLetter("letter index " + std::to_string(x.gen) +
                        " outside graph of size " + std::to_string(g.size()));
  }
  if (x.sign != +1 && x.sign != -1) {
    throw InvalidLetter("letter sign must be +1 or -1");
  }
  if (x.sign < 0 && g.involution(x.gen)) {
    throw InvalidLetter("inverse sign on involution '" + g.name(x.gen) + "'");
  }
}

}  // namespace

void append_letter(const PresentationGraph& g, Word& w, Letter x) {
  check_letter(g, x);
  // A letter of the same generator can cancel x only if everything after it
  // commutes with x's generator; scan back over that commuting tail.
  int n = static_cast<int>(w.size());
  int j = n - 1;
  while (j >= 0 && w[j].gen != x.gen && g.adjacent(w[j].gen, x.gen)) --j;
  if (j >= 0 && w[j].gen == x.gen &&
      (g.involution(x.gen) || w[j].sign != x.sign)) {
    // deleting a letter whose whole tail commutes with it keeps the word a
    // ShortLex-least geodesic
    w.erase(w.begin() + j);
    return;
  }
  // x can move left up to the last letter it depends on, and ShortLex wants
  // it just before the leftmost greater letter in that range.  Sliding from
  // the right and stopping at the first smaller letter would wedge x behind
  // letters it should jump ("d b c" must become "c d b" when only d,b are
  // dependent).
  int q = n;
  while (q > 0 && !g.dependent(w[q - 1], x)) --q;
  int p = q;
  while (p < n && !letter_less(x, w[p])) ++p;
  w.insert(w.begin() + p, x);
}

Word normal_form(const PresentationGraph& g, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) append_letter(g, out, x);
  return out;
}

bool is_geodesic(const PresentationGraph& g, const Word& w) {
  return normal_form(g, w).size() == w.size();
}

bool dependence_comparable(const PresentationGraph& g, const Word& w,
                           std::size_t i, std::size_t j) {
  if (i >= j || j >= w.size()) {
    throw IndexOutOfRange("positions " + std::to_string(i) + "," +
                          std::to_string(j) + " in word of length " +
                          std::to_string(w.size()));
  }
  if (!is_geodesic(g, w)) throw NotGeodesic("dependence positions need a geodesic word");
  // forward reachability from i through pairwise-dependent positions
  std::vector<char> reached(j + 1, 0);
  reached[i] = 1;
  for (std::size_t q = i + 1; q <= j; ++q) {
    for (std::size_t p = i; p < q; ++p) {
      if (reached[p] && g.dependent(w[p], w[q])) {
        reached[q] = 1;
        break;
      }
    }
  }
  return reached[j] != 0;
}

std::size_t GroupElement::hash() const { return WordHash{}(word_); }

namespace {

void check_same_graph(const GroupElement& a, const GroupElement& b) {
  if (&a.graph() != &b.graph()) {
    throw GraphMismatch("elements from different presentation graphs");
  }
}

}  // namespace

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  check_same_graph(a, b);
  Word w = a.nf();
  for (Letter x : b.nf()) append_letter(a.graph(), w, x);
  return GroupElement(a.graph(), std::move(w));
}

GroupElement multiply(const GroupElement& a, Letter x) {
  Word w = a.nf();
  append_letter(a.graph(), w, x);
  return GroupElement(a.graph(), std::move(w));
}

GroupElement inverse(const GroupElement& a) {
  return GroupElement::from_word(a.graph(), inverse_word(a.graph(), a.nf()));
}

Word inverse_word(const PresentationGraph& g, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    Letter x = *it;
    if (!g.involution(x.gen)) x.sign = -x.sign;
    out.push_back(x);
  }
  return out;
}

}  // namespace gpcx
