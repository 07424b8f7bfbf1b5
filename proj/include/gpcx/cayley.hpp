#pragma once

#include <cstddef>
#include <vector>

#include "gpcx/normal_form.hpp"
#include "gpcx/presentation.hpp"

namespace gpcx {

// An edge path base, base*l1, base*l1*l2, ... whose word is geodesic.
class GeodesicPath {
 public:
  GeodesicPath(GroupElement base, Word word);

  const GroupElement& base() const { return vertices_.front(); }
  const Word& word() const { return word_; }
  const PresentationGraph& graph() const { return base().graph(); }

  // edge count
  int length() const { return static_cast<int>(word_.size()); }
  int vertex_count() const { return length() + 1; }
  const GroupElement& vertex(int i) const { return vertices_.at(i); }
  const std::vector<GroupElement>& vertices() const { return vertices_; }

 private:
  Word word_;
  std::vector<GroupElement> vertices_;
};

struct Ball {
  GroupElement center;
  int radius;
  // grouped by distance from the center; within a group, ordered by the
  // ShortLex-least word spelling the offset from the center
  std::vector<GroupElement> elements;
};

inline constexpr std::size_t kDefaultElementCap = 5000000;

Ball ball(const GroupElement& center, int radius,
          std::size_t cap = kDefaultElementCap);

// edge-path distance, computed as |normal_form(g^-1 h)|
int distance(const GroupElement& g, const GroupElement& h);
int distance(const GroupElement& x, const GeodesicPath& path);

// all z with d(g,z) + d(z,h) = d(g,h), ShortLex order
std::vector<GroupElement> interval(const GroupElement& g,
                                   const GroupElement& h,
                                   std::size_t cap = kDefaultElementCap);

// path vertices nearest to x, in path order (ties all kept)
std::vector<GroupElement> project(const GeodesicPath& path,
                                  const GroupElement& x);

}  // namespace gpcx
