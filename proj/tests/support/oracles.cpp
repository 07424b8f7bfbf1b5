#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace gpcx::test {

namespace {

bool commute(const PresentationGraph& g, Letter a, Letter b) {
  return a.gen != b.gen && g.adjacent(a.gen, b.gen);
}

bool cancelling(const PresentationGraph& g, Letter a, Letter b) {
  if (a.gen != b.gen) return false;
  return g.involution(a.gen) || a.sign != b.sign;
}

}  // namespace

std::string word_key(const Word& w) {
  std::string k;
  for (const Letter& l : w) {
    k += std::to_string(int(l.gen));
    k += l.sign > 0 ? '+' : '-';
  }
  return k;
}

std::vector<Word> rewrite_closure(const PresentationGraph& g, const Word& w) {
  std::set<std::string> seen;
  std::deque<Word> queue;
  std::vector<Word> out;
  seen.insert(word_key(w));
  queue.push_back(w);
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    out.push_back(cur);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (commute(g, cur[i], cur[i + 1])) {
        Word next = cur;
        std::swap(next[i], next[i + 1]);
        if (seen.insert(word_key(next)).second) queue.push_back(next);
      }
      if (cancelling(g, cur[i], cur[i + 1])) {
        Word next;
        next.insert(next.end(), cur.begin(), cur.begin() + i);
        next.insert(next.end(), cur.begin() + i + 2, cur.end());
        if (seen.insert(word_key(next)).second) queue.push_back(next);
      }
    }
  }
  return out;
}

Word closure_canonical(const PresentationGraph& g, const Word& w) {
  std::vector<Word> all = rewrite_closure(g, w);
  std::size_t best = w.size();
  for (const Word& cand : all) best = std::min(best, cand.size());
  const Word* pick = nullptr;
  for (const Word& cand : all) {
    if (cand.size() != best) continue;
    if (!pick || shortlex_less(cand, *pick)) pick = &cand;
  }
  return *pick;
}

Word OracleCayley::step(const Word& state, Letter x) {
  auto key = std::make_pair(word_key(state), word_key(Word{x}));
  auto it = steps_.find(key);
  if (it != steps_.end()) return it->second;
  Word ext = state;
  ext.push_back(x);
  Word next = closure_canonical(graph_, ext);
  steps_.emplace(key, next);
  return next;
}

Word OracleCayley::canonical(const Word& w) {
  Word state;
  for (const Letter& l : w) state = step(state, l);
  return state;
}

int OracleCayley::distance(const Word& u, const Word& v) {
  Word from = canonical(u);
  Word to = canonical(v);
  std::string goal = word_key(to);
  if (word_key(from) == goal) return 0;
  std::set<std::string> seen{word_key(from)};
  std::deque<std::pair<Word, int>> queue{{from, 0}};
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    for (const Letter& x : graph_.alphabet()) {
      Word next = step(cur, x);
      std::string k = word_key(next);
      if (k == goal) return d + 1;
      if (seen.insert(k).second) queue.push_back({next, d + 1});
    }
  }
  throw std::logic_error("oracle distance search exhausted");
}

std::vector<Word> OracleCayley::ball(int radius) {
  std::set<std::string> seen{""};
  std::deque<std::pair<Word, int>> queue{{Word{}, 0}};
  std::vector<Word> out;
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    out.push_back(cur);
    if (d == radius) continue;
    for (const Letter& x : graph_.alphabet()) {
      Word next = step(cur, x);
      if (seen.insert(word_key(next)).second) queue.push_back({next, d + 1});
    }
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<Word> OracleCayley::geodesic_words(const Word& u, const Word& v) {
  Word from = canonical(u);
  Word to = canonical(v);
  int total = distance(from, to);
  // distances back to the target for every state within range
  std::map<std::string, int> dist{{word_key(to), 0}};
  std::deque<std::pair<Word, int>> queue{{to, 0}};
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    if (d == total) continue;
    for (const Letter& x : graph_.alphabet()) {
      Word next = step(cur, x);
      if (dist.emplace(word_key(next), d + 1).second)
        queue.push_back({next, d + 1});
    }
  }
  std::vector<Word> out;
  Word letters;
  std::function<void(const Word&, int)> dfs = [&](const Word& state, int left) {
    if (left == 0) {
      out.push_back(letters);
      return;
    }
    for (const Letter& x : graph_.alphabet()) {
      Word next = step(state, x);
      auto it = dist.find(word_key(next));
      if (it == dist.end() || it->second != left - 1) continue;
      letters.push_back(x);
      dfs(next, left - 1);
      letters.pop_back();
    }
  };
  dfs(from, total);
  return out;
}

std::string SquareClasses::edge_key(const GroupElement& tail, Letter x) const {
  // normalize the unoriented edge: positive letter, and for involutions the
  // ShortLex-smaller endpoint as tail
  GroupElement t = tail;
  if (x.sign < 0) {
    t = multiply(t, x);
    x = Letter{x.gen, 1};
  }
  if (graph_.involution(x.gen)) {
    GroupElement other = multiply(t, x);
    if (shortlex_less(other, t)) t = other;
  }
  return word_key(t.nf()) + "|" + std::to_string(int(x.gen));
}

int SquareClasses::id_of(const GroupElement& tail, Letter x) {
  std::string key = edge_key(tail, x);
  auto [it, fresh] = ids_.emplace(key, int(parent_.size()));
  if (fresh) parent_.push_back(it->second);
  return it->second;
}

int SquareClasses::find(int n) const {
  while (parent_[n] != n) {
    parent_[n] = parent_[parent_[n]];
    n = parent_[n];
  }
  return n;
}

SquareClasses::SquareClasses(const PresentationGraph& g, int radius)
    : graph_(g) {
  Ball b = ball(GroupElement::identity(g), radius);
  for (const GroupElement& h : b.elements) {
    for (Letter p : g.alphabet())
      for (Letter q : g.alphabet()) {
        if (p.gen >= q.gen || !g.adjacent(p.gen, q.gen)) continue;
        GroupElement hp = multiply(h, p);
        GroupElement hq = multiply(h, q);
        int e1 = id_of(h, p);
        int e1opp = id_of(hq, p);
        int e2 = id_of(h, q);
        int e2opp = id_of(hp, q);
        parent_[find(e1opp)] = find(e1);
        parent_[find(e2opp)] = find(e2);
        squares_.push_back({e1, e2});
      }
  }
  for (auto [e1, e2] : squares_) {
    int r1 = find(e1);
    int r2 = find(e2);
    linked_.insert({std::min(r1, r2), std::max(r1, r2)});
  }
}

int SquareClasses::edge_class(const GroupElement& tail, Letter x) const {
  auto it = ids_.find(edge_key(tail, x));
  return it == ids_.end() ? -1 : find(it->second);
}

bool SquareClasses::square_linked(const GroupElement& t1, Letter x1,
                                  const GroupElement& t2, Letter x2) const {
  int c1 = edge_class(t1, x1);
  int c2 = edge_class(t2, x2);
  if (c1 < 0 || c2 < 0) return false;
  return linked_.count({std::min(c1, c2), std::max(c1, c2)}) > 0;
}

namespace {

// every element of the subgroup generated by the masked generators with
// length <= radius
std::vector<GroupElement> parabolic_ball(const PresentationGraph& g,
                                         uint64_t mask, int radius) {
  std::vector<Letter> letters;
  for (Letter x : g.alphabet())
    if (mask >> x.gen & 1) letters.push_back(x);
  std::vector<GroupElement> out{GroupElement::identity(g)};
  std::set<std::string> seen{""};
  std::size_t begin = 0;
  for (int d = 0; d < radius; ++d) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Letter x : letters) {
        GroupElement next = multiply(out[i], x);
        if (next.length() != d + 1) continue;
        if (seen.insert(word_key(next.nf())).second) out.push_back(next);
      }
    begin = end;
  }
  return out;
}

}  // namespace

bool factor_product_membership(const PresentationGraph& g,
                               const GroupElement& w, uint64_t A, uint64_t B) {
  int r = w.length();
  std::vector<GroupElement> left = parabolic_ball(g, A, r);
  std::vector<GroupElement> right = parabolic_ball(g, B, r);
  for (const GroupElement& alpha : left)
    for (const GroupElement& beta : right)
      if (multiply(alpha, beta) == w) return true;
  return false;
}

bool shuffle_before(const PresentationGraph& g, const Word& w,
                    std::size_t i, std::size_t j) {
  std::vector<std::size_t> base(w.size());
  for (std::size_t p = 0; p < w.size(); ++p) base[p] = p;
  auto perm_key = [](const std::vector<std::size_t>& perm) {
    std::string k;
    for (std::size_t p : perm) {
      k += std::to_string(p);
      k += ',';
    }
    return k;
  };
  auto places_j_first = [&](const std::vector<std::size_t>& perm) {
    for (std::size_t p : perm) {
      if (p == i) return false;
      if (p == j) return true;
    }
    return false;
  };
  std::set<std::string> seen{perm_key(base)};
  std::deque<std::vector<std::size_t>> queue{base};
  while (!queue.empty()) {
    std::vector<std::size_t> cur = queue.front();
    queue.pop_front();
    if (places_j_first(cur)) return true;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (!commute(g, w[cur[p]], w[cur[p + 1]])) continue;
      std::vector<std::size_t> next = cur;
      std::swap(next[p], next[p + 1]);
      if (seen.insert(perm_key(next)).second) queue.push_back(next);
    }
  }
  return false;
}

}  // namespace gpcx::test
