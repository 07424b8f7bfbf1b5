#include "gpcx/cayley.hpp"

#include <algorithm>
#include <unordered_set>

#include "gpcx/errors.hpp"

namespace gpcx {

GeodesicPath::GeodesicPath(GroupElement base, Word word)
    : word_(std::move(word)) {
  if (!is_geodesic(base.graph(), word_))
    throw NotGeodesic("path word is not geodesic");
  vertices_.reserve(word_.size() + 1);
  vertices_.push_back(std::move(base));
  for (Letter x : word_) vertices_.push_back(multiply(vertices_.back(), x));
}

Ball ball(const GroupElement& center, int radius, std::size_t cap) {
  const PresentationGraph& g = center.graph();
  Ball out{center, radius, {center}};
  // offsets from the center, so levels are just word lengths
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::vector<Word> level{Word{}};
  for (int d = 0; d < radius && !level.empty(); ++d) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (Letter x : g.alphabet()) {
        Word ext = w;
        append_letter(g, ext, x);
        if (ext.size() == w.size() + 1 && seen.insert(ext).second)
          next.push_back(std::move(ext));
      }
    std::sort(next.begin(), next.end(), shortlex_less);
    if (out.elements.size() + next.size() > cap)
      throw ResourceLimit("ball exceeds element cap");
    for (const Word& w : next)
      out.elements.push_back(multiply(center, GroupElement::from_word(g, w)));
    level = std::move(next);
  }
  return out;
}

int distance(const GroupElement& g, const GroupElement& h) {
  return multiply(inverse(g), h).length();
}

int distance(const GroupElement& x, const GeodesicPath& path) {
  int best = distance(x, path.vertex(0));
  for (int i = 1; i < path.vertex_count(); ++i)
    best = std::min(best, distance(x, path.vertex(i)));
  return best;
}

std::vector<GroupElement> interval(const GroupElement& g,
                                   const GroupElement& h,
                                   std::size_t cap) {
  const PresentationGraph& graph = g.graph();
  GroupElement offset = multiply(inverse(g), h);
  int total = offset.length();
  std::vector<Word> keep{Word{}};
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::vector<Word> level{Word{}};
  for (int d = 0; d < total; ++d) {
    std::vector<Word> next;
    for (const Word& w : level)
      for (Letter x : graph.alphabet()) {
        Word ext = w;
        append_letter(graph, ext, x);
        if (ext.size() != w.size() + 1 || seen.count(ext)) continue;
        // still on a geodesic to the far end?
        GroupElement rest =
            multiply(inverse(GroupElement::from_word(graph, ext)), offset);
        if (rest.length() != total - d - 1) continue;
        seen.insert(ext);
        next.push_back(std::move(ext));
      }
    if (keep.size() + next.size() > cap)
      throw ResourceLimit("interval exceeds element cap");
    keep.insert(keep.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<GroupElement> out;
  out.reserve(keep.size());
  for (const Word& w : keep)
    out.push_back(multiply(g, GroupElement::from_word(graph, w)));
  std::sort(out.begin(), out.end(),
            [](const GroupElement& a, const GroupElement& b) {
              return shortlex_less(a, b);
            });
  return out;
}

std::vector<GroupElement> project(const GeodesicPath& path,
                                  const GroupElement& x) {
  int best = distance(x, path);
  std::vector<GroupElement> out;
  for (int i = 0; i < path.vertex_count(); ++i)
    if (distance(x, path.vertex(i)) == best) out.push_back(path.vertex(i));
  return out;
}

}  // namespace gpcx
