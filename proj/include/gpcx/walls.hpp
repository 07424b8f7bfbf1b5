#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpcx/cayley.hpp"
#include "gpcx/normal_form.hpp"
#include "gpcx/presentation.hpp"

namespace gpcx {

// the edge this wall was built from
struct WallSource {
  GroupElement tail;
  Letter letter;
};

// A hyperplane of the cube complex behind the Cayley graph: the class of
// all edges reachable from the source edge through opposite sides of
// squares.  Identity is the edge label's generator (type) plus a canonical
// coset key for the carrier, so comparisons cost one word comparison.
class Wall {
 public:
  int type() const { return type_; }
  const Word& key() const { return key_; }
  const PresentationGraph& graph() const { return *graph_; }
  const std::optional<WallSource>& source() const { return source_; }

  friend bool operator==(const Wall& a, const Wall& b) {
    return a.graph_ == b.graph_ && a.type_ == b.type_ && a.key_ == b.key_;
  }
  friend bool operator!=(const Wall& a, const Wall& b) { return !(a == b); }

 private:
  Wall(const PresentationGraph& g, int type, Word key,
       std::optional<WallSource> source)
      : graph_(&g), type_(type), key_(std::move(key)),
        source_(std::move(source)) {}

  const PresentationGraph* graph_;
  int type_;
  Word key_;
  std::optional<WallSource> source_;

  friend Wall wall_of_edge(const GroupElement&, Letter);
};

// type, then ShortLex on keys
struct WallLess {
  bool operator()(const Wall& a, const Wall& b) const {
    if (a.type() != b.type()) return a.type() < b.type();
    return shortlex_less(a.key(), b.key());
  }
};

struct WallHash {
  std::size_t operator()(const Wall& w) const {
    return WordHash{}(w.key()) * 31 + static_cast<std::size_t>(w.type());
  }
};

// The canonical minimal-length representative of the left coset
// (of the subgroup generated by the generators in `mask`) containing w:
// repeatedly strips the ShortLex-greatest right divisor lying in the mask.
// w must be a normal form.
Word coset_representative(const PresentationGraph& g, Word w, uint64_t mask);

// wall dual to the edge from tail to tail*l
Wall wall_of_edge(const GroupElement& tail, Letter l);

// one wall per edge, in path order; pairwise distinct for geodesics
std::vector<Wall> walls_of_path(const GeodesicPath& path);

// whether w lies in the set product <A>*<B> of the subgroups generated by
// the generator masks A and B
bool product_membership(const PresentationGraph& g, const GroupElement& w,
                        uint64_t A, uint64_t B);

// whether x lies in the union of the <=2 carrier cosets of the wall
bool on_carrier(const Wall& w, const GroupElement& x);

// Two distinct walls cross iff their types commute and their carriers
// share a vertex (the shared vertex spans a square dual to both).
bool crosses(const Wall& a, const Wall& b);

// Same decision through the dependence order: walls dual to edges of one
// geodesic cross iff their positions are incomparable.  Needs both walls
// to carry source edges.  Agrees with crosses(); kept separate so tests
// can play the two algorithms against each other.
bool crosses_via_path(const Wall& a, const Wall& b);

// whether every geodesic from x to y runs through the wall
bool separates(const Wall& w, const GroupElement& x, const GroupElement& y);

enum class Relation { Equal, Crossing, Disjoint };

struct SeparationVerdict {
  Relation relation;
  // distinct walls crossing both inputs, dual to an edge of the search
  // ball; a lower bound when the search aborted early
  int crossing_both_count = 0;
  int search_radius = 0;
  // true when walls outside the searched ball could still raise the count
  bool radius_limited = false;
  // "more than k walls cross both" is certified for this k by witnesses
  std::optional<int> certified_over_k;
  std::vector<Wall> witnesses;
};

// Counts walls crossing both a and b among walls dual to edges inside the
// ball of the given radius around the midpoint vertex of a shortest
// geodesic between the source edges.  Witness walls make every count > 0
// certified; count completeness is radius-limited unless no generator
// commutes with both types (then the zero count is exact at any radius).
// With abort_over set, stops once the count exceeds it.
SeparationVerdict separation(const Wall& a, const Wall& b, int radius,
                             std::optional<int> abort_over = std::nullopt,
                             std::size_t cap = kDefaultElementCap);

}  // namespace gpcx
