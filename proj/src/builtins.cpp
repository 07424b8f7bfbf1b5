#include "gpcx/builtins.hpp"

#include <map>

namespace gpcx {

namespace {

using Gens = std::vector<std::pair<std::string, Order>>;
using Rels = std::vector<std::pair<std::string, std::string>>;

Gens involutions(std::initializer_list<const char*> names) {
  Gens gens;
  for (const char* n : names) gens.emplace_back(n, Order::Two);
  return gens;
}

Rels complete_bipartite(std::initializer_list<const char*> left,
                        std::initializer_list<const char*> right) {
  Rels rels;
  for (const char* a : left) {
    for (const char* b : right) rels.emplace_back(a, b);
  }
  return rels;
}

// closes the cycle back to the first vertex
Rels cycle(std::initializer_list<const char*> vertices) {
  Rels rels;
  const char* prev = nullptr;
  const char* first = nullptr;
  for (const char* v : vertices) {
    if (!first) first = v;
    if (prev) rels.emplace_back(prev, v);
    prev = v;
  }
  rels.emplace_back(prev, first);
  return rels;
}

Rels join(std::initializer_list<Rels> parts) {
  Rels all;
  for (const Rels& part : parts) all.insert(all.end(), part.begin(), part.end());
  return all;
}

PresentationGraph make_hexagon() {
  return PresentationGraph(involutions({"h1", "h2", "h3", "h4", "h5", "h6"}),
                           cycle({"h1", "h2", "h3", "h6", "h5", "h4"}));
}

PresentationGraph make_k33() {
  return PresentationGraph(involutions({"x1", "x2", "x3", "y1", "y2", "y3"}),
                           complete_bipartite({"x1", "x2", "x3"}, {"y1", "y2", "y3"}));
}

PresentationGraph make_gamma1() {
  return PresentationGraph(
      involutions({"c1", "c2", "c3", "c4", "c5", "c6", "d1", "d2", "d3"}),
      join({cycle({"c1", "c2", "c3", "c6", "c5", "c4"}),
            complete_bipartite({"c4", "c6", "d2"}, {"c5", "d1", "d3"})}));
}

PresentationGraph make_gamma2() {
  return PresentationGraph(
      involutions({"a1", "a2", "a3", "a4", "a5", "a6", "b1", "b2", "b3", "b4",
                   "b5", "b6"}),
      join({cycle({"a1", "a2", "a3", "a6", "a5", "a4"}),
            cycle({"a4", "a5", "a6", "b3", "b2", "b1"}),
            complete_bipartite({"b1", "b3", "b5"}, {"b2", "b4", "b6"})}));
}

PresentationGraph make_croke_kleiner() {
  Gens gens;
  for (const char* n : {"a", "b", "c", "d"}) gens.emplace_back(n, Order::Infinite);
  return PresentationGraph(std::move(gens), {{"a", "b"}, {"b", "c"}, {"c", "d"}});
}

PresentationGraph make_tree3() {
  return PresentationGraph(involutions({"t1", "t2", "t3"}), {});
}

}  // namespace

const PresentationGraph& builtin(const std::string& name) {
  static const std::map<std::string, PresentationGraph> catalog = [] {
    std::map<std::string, PresentationGraph> m;
    m.emplace("hexagon", make_hexagon());
    m.emplace("k33", make_k33());
    m.emplace("gamma1", make_gamma1());
    m.emplace("gamma2", make_gamma2());
    m.emplace("croke-kleiner", make_croke_kleiner());
    m.emplace("tree3", make_tree3());
    return m;
  }();
  auto it = catalog.find(name);
  if (it == catalog.end()) throw ParseError(0, "unknown builtin '" + name + "'");
  return it->second;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "croke-kleiner", "gamma1", "gamma2", "hexagon", "k33", "tree3"};
  return names;
}

}  // namespace gpcx
