#pragma once

#include <cstddef>

#include "gpcx/presentation.hpp"

namespace gpcx {

// Multiplies a normal-form word by one letter on the right, in place.
// Either cancels against the unique visible matching letter or inserts the
// new letter at its ShortLex slot.  The word stays a geodesic ShortLex-least
// representative.
void append_letter(const PresentationGraph& g, Word& w, Letter x);

// ShortLex-least geodesic word for the element w represents
Word normal_form(const PresentationGraph& g, const Word& w);

bool is_geodesic(const PresentationGraph& g, const Word& w);

// Whether a chain of pairwise-dependent letters joins positions i < j of a
// geodesic word (0-based).  Incomparable positions can be shuffled next to
// each other.
bool dependence_comparable(const PresentationGraph& g, const Word& w,
                           std::size_t i, std::size_t j);

// An element of the graph product, held as its ShortLex normal form.  Keeps
// a pointer into the defining graph, which must outlive the element.
class GroupElement {
 public:
  GroupElement() : graph_(nullptr) {}

  static GroupElement identity(const PresentationGraph& g) {
    return GroupElement(g, Word{});
  }
  static GroupElement from_word(const PresentationGraph& g, const Word& w) {
    return GroupElement(g, normal_form(g, w));
  }

  const Word& nf() const { return word_; }
  const PresentationGraph& graph() const { return *graph_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.graph_ == b.graph_ && a.word_ == b.word_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }
  friend bool shortlex_less(const GroupElement& a, const GroupElement& b) {
    return shortlex_less(a.word_, b.word_);
  }

  std::size_t hash() const;

 private:
  GroupElement(const PresentationGraph& g, Word w)
      : graph_(&g), word_(std::move(w)) {}

  const PresentationGraph* graph_;
  Word word_;

  friend GroupElement multiply(const GroupElement&, const GroupElement&);
  friend GroupElement multiply(const GroupElement&, Letter);
  friend GroupElement inverse(const GroupElement&);
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& e) const { return e.hash(); }
};

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement multiply(const GroupElement& a, Letter x);
GroupElement inverse(const GroupElement& a);

// letters of w^-1 in reverse order with signs flipped on non-involutions
Word inverse_word(const PresentationGraph& g, const Word& w);

}  // namespace gpcx
