#include "gpcx/walls.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "gpcx/errors.hpp"

namespace gpcx {

namespace {

void check_same_graph(const Wall& a, const Wall& b) {
  if (&a.graph() != &b.graph())
    throw GraphMismatch("walls from different presentation graphs");
}

// ShortLex-greatest letter in mask with nothing dependent after it
int exposed_right_divisor(const PresentationGraph& g, const Word& w,
                          uint64_t mask) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (!(mask >> w[i].gen & 1)) continue;
    bool exposed = true;
    for (int j = i + 1; j < static_cast<int>(w.size()); ++j)
      if (g.dependent(w[i], w[j])) {
        exposed = false;
        break;
      }
    if (exposed && (best < 0 || letter_less(w[best], w[i]))) best = i;
  }
  return best;
}

// leftmost letter in mask with nothing dependent before it
int exposed_left_divisor(const PresentationGraph& g, const Word& w,
                         uint64_t mask) {
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    if (!(mask >> w[i].gen & 1)) continue;
    bool exposed = true;
    for (int j = 0; j < i; ++j)
      if (g.dependent(w[j], w[i])) {
        exposed = false;
        break;
      }
    if (exposed) return i;
  }
  return -1;
}

}  // namespace

Word coset_representative(const PresentationGraph& g, Word w, uint64_t mask) {
  for (;;) {
    int i = exposed_right_divisor(g, w, mask);
    if (i < 0) return w;
    w.erase(w.begin() + i);
  }
}

Wall wall_of_edge(const GroupElement& tail, Letter l) {
  const PresentationGraph& g = tail.graph();
  GroupElement head = multiply(tail, l);
  int v = l.gen;
  uint64_t link = g.link_mask(v);
  Word key;
  if (g.involution(v)) {
    // both endpoints name the wall; take the smaller coset representative
    Word r1 = coset_representative(g, tail.nf(), link);
    Word r2 = coset_representative(g, head.nf(), link);
    key = shortlex_less(r1, r2) ? std::move(r1) : std::move(r2);
  } else {
    // the tail of the positively-oriented edge names the wall
    const GroupElement& t = l.sign > 0 ? tail : head;
    key = coset_representative(g, t.nf(), link);
  }
  return Wall(g, v, std::move(key), WallSource{tail, l});
}

std::vector<Wall> walls_of_path(const GeodesicPath& path) {
  std::vector<Wall> out;
  out.reserve(path.length());
  for (int i = 0; i < path.length(); ++i)
    out.push_back(wall_of_edge(path.vertex(i), path.word()[i]));
  return out;
}

bool product_membership(const PresentationGraph& g, const GroupElement& w,
                        uint64_t A, uint64_t B) {
  // Any exposed strip preserves membership in <A>*<B> in both directions,
  // and a nonempty word with no exposed A-prefix letter and no exposed
  // B-suffix letter cannot factor, so greedy stripping decides exactly.
  Word cur = w.nf();
  bool changed = true;
  while (changed && !cur.empty()) {
    changed = false;
    for (int i; (i = exposed_left_divisor(g, cur, A)) >= 0;) {
      cur.erase(cur.begin() + i);
      changed = true;
    }
    for (int i; (i = exposed_right_divisor(g, cur, B)) >= 0;) {
      cur.erase(cur.begin() + i);
      changed = true;
    }
  }
  return cur.empty();
}

bool on_carrier(const Wall& w, const GroupElement& x) {
  const PresentationGraph& g = w.graph();
  if (&g != &x.graph())
    throw GraphMismatch("wall and vertex from different graphs");
  uint64_t link = g.link_mask(w.type());
  GroupElement m = GroupElement::from_word(g, w.key());
  if (product_membership(g, multiply(inverse(m), x), link, 0)) return true;
  GroupElement mv = multiply(m, Letter{static_cast<uint8_t>(w.type()), 1});
  return product_membership(g, multiply(inverse(mv), x), link, 0);
}

bool crosses(const Wall& a, const Wall& b) {
  check_same_graph(a, b);
  const PresentationGraph& g = a.graph();
  if (a.type() == b.type() || !g.adjacent(a.type(), b.type())) return false;
  // carriers share a vertex iff some pair of side cosets intersects
  uint64_t la = g.link_mask(a.type());
  uint64_t lb = g.link_mask(b.type());
  GroupElement ma = GroupElement::from_word(g, a.key());
  GroupElement mb = GroupElement::from_word(g, b.key());
  GroupElement sa[2] = {ma, multiply(ma, Letter{static_cast<uint8_t>(a.type()), 1})};
  GroupElement sb[2] = {mb, multiply(mb, Letter{static_cast<uint8_t>(b.type()), 1})};
  for (const GroupElement& p : sa)
    for (const GroupElement& q : sb)
      if (product_membership(g, multiply(inverse(p), q), la, lb)) return true;
  return false;
}

bool separates(const Wall& w, const GroupElement& x, const GroupElement& y) {
  if (&x.graph() != &y.graph() || &x.graph() != &w.graph())
    throw GraphMismatch("separates needs one common graph");
  GeodesicPath p(x, multiply(inverse(x), y).nf());
  for (const Wall& c : walls_of_path(p))
    if (c == w) return true;
  return false;
}

bool crosses_via_path(const Wall& a, const Wall& b) {
  check_same_graph(a, b);
  const PresentationGraph& g = a.graph();
  if (a == b) return false;
  if (a.type() == b.type() || !g.adjacent(a.type(), b.type())) return false;
  if (!a.source() || !b.source())
    throw Error("crossing via a path needs source edges on both walls");
  GroupElement t1 = a.source()->tail;
  GroupElement h1 = multiply(t1, a.source()->letter);
  GroupElement t2 = b.source()->tail;
  GroupElement h2 = multiply(t2, b.source()->letter);
  // an endpoint of a's edge on the far side of a from b's edge, and an
  // endpoint of b's edge on the far side of b from it: both walls then
  // separate x from y, so both appear on any geodesic between them
  GroupElement x = separates(a, t1, t2) ? t1 : h1;
  GroupElement y = separates(b, t2, x) ? t2 : h2;
  GeodesicPath p(x, multiply(inverse(x), y).nf());
  std::vector<Wall> ws = walls_of_path(p);
  int i = -1, j = -1;
  for (int k = 0; k < static_cast<int>(ws.size()); ++k) {
    if (ws[k] == a) i = k;
    if (ws[k] == b) j = k;
  }
  if (i < 0 || j < 0) throw Error("source walls missing from joining path");
  if (i > j) std::swap(i, j);
  return !dependence_comparable(g, p.word(), i, j);
}

namespace {

// midpoint vertex of a shortest geodesic between the two source edges,
// symmetric in the two walls
GroupElement enumeration_center(const Wall& a, const Wall& b) {
  if (!a.source() || !b.source())
    throw Error("separation needs source edges on both walls");
  GroupElement ea[2] = {a.source()->tail,
                        multiply(a.source()->tail, a.source()->letter)};
  GroupElement eb[2] = {b.source()->tail,
                        multiply(b.source()->tail, b.source()->letter)};
  bool have = false;
  int best_d = 0;
  GroupElement lo, hi;
  for (const GroupElement& p : ea)
    for (const GroupElement& q : eb) {
      int d = distance(p, q);
      GroupElement u = shortlex_less(p, q) ? p : q;
      GroupElement v = shortlex_less(p, q) ? q : p;
      bool better = !have || d < best_d ||
                    (d == best_d &&
                     (shortlex_less(u, lo) ||
                      (u == lo && shortlex_less(v, hi))));
      if (better) {
        have = true;
        best_d = d;
        lo = u;
        hi = v;
      }
    }
  GeodesicPath geo(lo, multiply(inverse(lo), hi).nf());
  return geo.vertex(best_d / 2);
}

}  // namespace

SeparationVerdict separation(const Wall& a, const Wall& b, int radius,
                             std::optional<int> abort_over, std::size_t cap) {
  check_same_graph(a, b);
  if (radius < 1) throw IndexOutOfRange("separation radius must be >= 1");
  SeparationVerdict out;
  out.search_radius = radius;
  if (a == b) {
    out.relation = Relation::Equal;
    return out;
  }
  if (crosses(a, b)) {
    out.relation = Relation::Crossing;
    return out;
  }
  out.relation = Relation::Disjoint;
  const PresentationGraph& g = a.graph();
  // a wall crossing both must commute with both types
  std::vector<Letter> cands;
  for (int t = 0; t < g.size(); ++t)
    if (g.adjacent(t, a.type()) && g.adjacent(t, b.type()))
      cands.push_back(Letter{static_cast<uint8_t>(t), 1});
  if (cands.empty()) return out;  // exact zero at any radius
  out.radius_limited = true;

  GroupElement center = enumeration_center(a, b);
  std::set<Wall, WallLess> found;
  // offsets from the center, so levels are word lengths
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::vector<Word> level{Word{}};
  std::size_t total = 1;
  for (int d = 0; d <= radius; ++d) {
    for (const Word& rel : level) {
      GroupElement tail = multiply(center, GroupElement::from_word(g, rel));
      for (Letter x : cands) {
        Word ext = rel;
        append_letter(g, ext, x);
        if (ext.size() > rel.size() && static_cast<int>(ext.size()) > radius)
          continue;  // head outside the ball
        Wall w = wall_of_edge(tail, x);
        if (!crosses(w, a) || !crosses(w, b)) continue;
        if (!found.insert(w).second) continue;
        if (abort_over && static_cast<int>(found.size()) > *abort_over) {
          out.crossing_both_count = static_cast<int>(found.size());
          out.certified_over_k = abort_over;
          out.witnesses.assign(found.begin(), found.end());
          return out;
        }
      }
    }
    if (d == radius) break;
    std::vector<Word> next;
    for (const Word& rel : level)
      for (Letter x : g.alphabet()) {
        Word ext = rel;
        append_letter(g, ext, x);
        if (ext.size() == rel.size() + 1 && seen.insert(ext).second)
          next.push_back(std::move(ext));
      }
    total += next.size();
    if (total > cap) throw ResourceLimit("separation ball exceeds element cap");
    level = std::move(next);
  }
  out.crossing_both_count = static_cast<int>(found.size());
  if (!found.empty())
    out.certified_over_k = static_cast<int>(found.size()) - 1;
  out.witnesses.assign(found.begin(), found.end());
  return out;
}

}  // namespace gpcx
