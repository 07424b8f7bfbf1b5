#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gpcx/errors.hpp"

namespace gpcx {

// order of a cyclic vertex group
enum class Order : uint8_t { Two, Infinite };

// one +-1 power of a generator; sign is +1 on involutions always
struct Letter {
  uint8_t gen;
  int8_t sign;

  friend bool operator==(Letter a, Letter b) {
    return a.gen == b.gen && a.sign == b.sign;
  }
  friend bool operator!=(Letter a, Letter b) { return !(a == b); }
};

// generator index first, then +1 before -1
inline bool letter_less(Letter a, Letter b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.sign > b.sign;
}

using Word = std::vector<Letter>;

// length, then letterwise
bool shortlex_less(const Word& a, const Word& b);

// FNV-1a over the letters
struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h = (h ^ l.gen) * 1099511628211ull;
      h = (h ^ (l.sign > 0 ? 1u : 2u)) * 1099511628211ull;
    }
    return h;
  }
};

// A finite simplicial graph with a cyclic group of order 2 or infinity at
// each vertex.  Edges mean the two generators commute.  Generator order is
// declaration order and fixes the ShortLex order on letters.
class PresentationGraph {
 public:
  static constexpr int kMaxGenerators = 64;

  PresentationGraph(std::vector<std::pair<std::string, Order>> generators,
                    std::vector<std::pair<std::string, std::string>> relations);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int g) const { return names_[g]; }
  Order order(int g) const { return orders_[g]; }
  bool involution(int g) const { return orders_[g] == Order::Two; }

  // commuting distinct generators
  bool adjacent(int g, int h) const {
    return g != h && (adj_[g] >> h & 1) != 0;
  }
  uint64_t link_mask(int g) const { return adj_[g]; }

  // letters are dependent when they cannot be swapped past each other
  bool dependent(Letter a, Letter b) const {
    return a.gen == b.gen || (adj_[a.gen] >> b.gen & 1) == 0;
  }

  // number of directed edges at every vertex of the Cayley graph
  int valence() const { return valence_; }

  // all single-letter steps, in ShortLex order
  const std::vector<Letter>& alphabet() const { return alphabet_; }

  // -1 when absent
  int find(const std::string& generator_name) const;

 private:
  std::vector<std::string> names_;
  std::vector<Order> orders_;
  std::vector<uint64_t> adj_;
  std::vector<Letter> alphabet_;
  int valence_ = 0;
};

// Reads the gen/rel format:
//   gen <name> <2|inf>
//   rel <name> <name>
// '#' starts a comment; blank lines are skipped.
PresentationGraph parse_presentation(std::istream& in);
PresentationGraph parse_presentation_file(const std::string& path);

// Whitespace-separated letters, each "<name>" or "<name>^-1".  A sign of
// ^-1 on an involution is folded to the letter itself.  Empty text is the
// empty word.
Word parse_word(const PresentationGraph& g, const std::string& text);

std::string letter_to_string(const PresentationGraph& g, Letter x);
std::string word_to_string(const PresentationGraph& g, const Word& w);

}  // namespace gpcx
