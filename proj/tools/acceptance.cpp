// End-to-end checks tying the library's answers to independently computed
// references: exhaustive rewriting oracles, brute-force square enumeration,
// pinned example values, and the committed suite outputs.  Each check prints
// one PASS/FAIL line; the exit code is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gpcx/builtins.hpp"
#include "gpcx/cayley.hpp"
#include "gpcx/divergence.hpp"
#include "gpcx/errors.hpp"
#include "gpcx/normal_form.hpp"
#include "gpcx/presentation.hpp"
#include "gpcx/rays.hpp"
#include "gpcx/walls.hpp"
#include "suites.hpp"
#include "support/oracles.hpp"

namespace {

using namespace gpcx;

constexpr double kFlatSlopeLo = 0.8;
constexpr double kFlatSlopeHi = 1.2;
constexpr double kSteepSlopeMin = 1.3;
constexpr double kMinBoundFraction = 0.9;

double now() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// calls fn on every word of length 1..max_len whose letters come from the
// alphabet; geodesic_only prunes to geodesic words (prefixes of geodesics
// are geodesic, so pruning loses nothing)
template <typename F>
void for_words(const PresentationGraph& g, int max_len, bool geodesic_only,
               F&& fn) {
  std::vector<Word> frontier{Word{}};
  for (int d = 0; d < max_len; ++d) {
    std::vector<Word> next;
    for (const Word& w : frontier)
      for (Letter x : g.alphabet()) {
        Word e = w;
        e.push_back(x);
        if (geodesic_only && !is_geodesic(g, e)) continue;
        fn(e);
        next.push_back(std::move(e));
      }
    frontier = std::move(next);
  }
}

Word random_geodesic(const PresentationGraph& g, int len,
                     std::mt19937_64& rng) {
  Word w;
  while (static_cast<int>(w.size()) < len) {
    Word e = w;
    e.push_back(g.alphabet()[rng() % g.alphabet().size()]);
    if (is_geodesic(g, e)) w = std::move(e);
  }
  return w;
}

Word random_period(const PresentationGraph& g, int len, int horizon,
                   std::mt19937_64& rng) {
  for (;;) {
    Word w;
    for (int i = 0; i < len; ++i)
      w.push_back(g.alphabet()[rng() % g.alphabet().size()]);
    try {
      RaySpec probe(g, Word{}, w, horizon);
      return w;
    } catch (const Error&) {
    }
  }
}

RaySpec ray(const PresentationGraph& g, const std::string& prefix,
            const std::string& period, int horizon) {
  return RaySpec(g, parse_word(g, prefix), parse_word(g, period), horizon);
}

std::string wall_tag(const Wall& w) {
  return std::to_string(w.type()) + ":" + test::word_key(w.key());
}

bool normal_forms_match_oracle(std::string& detail) {
  long long words = 0;
  for (const std::string& name : builtin_names()) {
    const PresentationGraph& g = builtin(name);
    test::OracleCayley oracle(g);
    std::map<std::string, std::string> canon_to_nf;
    std::map<std::string, std::string> nf_to_canon;
    bool ok = true;
    for_words(g, 5, false, [&](const Word& w) {
      ++words;
      std::string ck = test::word_key(oracle.canonical(w));
      std::string nk = test::word_key(normal_form(g, w));
      auto c = canon_to_nf.emplace(ck, nk);
      auto n = nf_to_canon.emplace(nk, ck);
      if ((!c.second && c.first->second != nk) ||
          (!n.second && n.first->second != ck))
        ok = false;
    });
    if (!ok) {
      detail = "mismatch in " + name;
      return false;
    }
  }
  detail = std::to_string(words) + " words across six graphs";
  return true;
}

bool walls_are_distinct(std::string& detail) {
  long long checked = 0;
  for (const std::string& name : builtin_names()) {
    const PresentationGraph& g = builtin(name);
    bool ok = true;
    auto distinct = [&](const Word& w) {
      std::vector<Wall> ws =
          walls_of_path(GeodesicPath(GroupElement::identity(g), w));
      std::sort(ws.begin(), ws.end(), WallLess{});
      for (std::size_t i = 0; i + 1 < ws.size(); ++i)
        if (ws[i] == ws[i + 1]) ok = false;
      ++checked;
    };
    for_words(g, 6, true, distinct);
    std::mt19937_64 rng(40);
    for (int i = 0; i < 200; ++i) distinct(random_geodesic(g, 10, rng));
    if (!ok) {
      detail = "repeated wall in " + name;
      return false;
    }
  }
  detail = std::to_string(checked) + " paths, 6 graphs, all walls distinct";
  return true;
}

bool crossing_algorithms_agree(std::string& detail) {
  long long pairs = 0;
  for (const char* name : {"hexagon", "croke-kleiner"}) {
    const PresentationGraph& g = builtin(name);
    test::SquareClasses classes(g, 8);
    std::set<std::pair<std::string, std::string>> done;
    bool ok = true;
    for_words(g, 6, true, [&](const Word& w) {
      std::vector<Wall> ws =
          walls_of_path(GeodesicPath(GroupElement::identity(g), w));
      for (std::size_t i = 0; i < ws.size() && ok; ++i)
        for (std::size_t j = i + 1; j < ws.size() && ok; ++j) {
          std::string a = wall_tag(ws[i]);
          std::string b = wall_tag(ws[j]);
          if (a > b) std::swap(a, b);
          if (!done.emplace(a, b).second) continue;
          ++pairs;
          bool via_carrier = crosses(ws[i], ws[j]);
          bool via_order = crosses_via_path(ws[i], ws[j]);
          bool via_square = classes.square_linked(
              ws[i].source()->tail, ws[i].source()->letter,
              ws[j].source()->tail, ws[j].source()->letter);
          if (via_carrier != via_order || via_carrier != via_square)
            ok = false;
        }
    });
    if (!ok) {
      detail = std::string("disagreement in ") + name;
      return false;
    }
  }
  detail = std::to_string(pairs) + " distinct wall pairs, three algorithms";
  return true;
}

bool hexagon_pairs_separated(std::string& detail) {
  const PresentationGraph& g = builtin("hexagon");
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 100) {
    Word w = random_geodesic(g, 10, rng);
    std::vector<Wall> ws =
        walls_of_path(GeodesicPath(GroupElement::identity(g), w));
    std::size_t i = rng() % ws.size();
    std::size_t j = rng() % ws.size();
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    SeparationVerdict v = separation(ws[i], ws[j], 8, 1);
    if (v.relation != Relation::Disjoint) continue;
    if (v.crossing_both_count > 1 ||
        (v.certified_over_k && *v.certified_over_k >= 1)) {
      detail = "pair with certified count above 1";
      return false;
    }
    ++done;
  }
  detail = "100 disjoint pairs, every count at most 1 at radius 8";
  return true;
}

bool detector_matches_examples(std::string& detail) {
  const PresentationGraph& ck = builtin("croke-kleiner");
  DetectorParams tight{0, 2, 6, 40};
  DetectionResult ad = detect_contracting(ray(ck, "", "a d", 40), tight);
  if (!ad.accepted || ad.radius_limited) {
    detail = "croke-kleiner (a d) not cleanly accepted";
    return false;
  }
  DetectorParams loose{8, 6, 8, 14};
  if (detect_contracting(ray(ck, "", "b", 14), loose).accepted) {
    detail = "croke-kleiner b accepted";
    return false;
  }
  const PresentationGraph& k33 = builtin("k33");
  std::mt19937_64 rng(42);
  DetectorParams flat{8, 6, 8, 16};
  for (int i = 0; i < 20; ++i) {
    Word p = random_period(k33, 4, 16, rng);
    if (detect_contracting(RaySpec(k33, Word{}, p, 16), flat).accepted) {
      detail = "k33 ray accepted: " + word_to_string(k33, p);
      return false;
    }
  }
  const PresentationGraph& hex = builtin("hexagon");
  DetectorParams hexp{1, 6, 6, 12};
  for (int i = 0; i < 20; ++i) {
    Word p = random_period(hex, 4, 12, rng);
    if (!detect_contracting(RaySpec(hex, Word{}, p, 12), hexp).accepted) {
      detail = "hexagon ray rejected: " + word_to_string(hex, p);
      return false;
    }
  }
  detail = "pinned rays plus 20 random per graph behave as recorded";
  return true;
}

bool block_length_splits_verdicts(std::string& detail) {
  const PresentationGraph& ck = builtin("croke-kleiner");
  DetectorParams p{0, 4, 6, 24};
  for (const char* period :
       {"a d", "a a d", "a a d d", "a a a d", "a a a d d d", "a d d"}) {
    if (!detect_contracting(ray(ck, "", period, 24), p).accepted) {
      detail = std::string("short-block ray rejected: ") + period;
      return false;
    }
  }
  for (int m : {4, 5, 6}) {
    int block_len = 2 * m + 1;
    std::string prefix;
    for (int i = 0; i < m; ++i) prefix += i ? " a c" : "a c";
    DetectorParams q{0, 4, 6, 2 * block_len + 6};
    DetectionResult res =
        detect_contracting(ray(ck, prefix, "a d", q.horizon), q);
    if (res.accepted || res.window->width() < block_len - 2) {
      detail = "block of length " + std::to_string(block_len) +
               " missing its obstruction window";
      return false;
    }
  }
  detail = "blocks up to 3 accepted; blocks of 9, 11, 13 obstruct";
  return true;
}

bool hexagon_subgroup_contrast(std::string& detail) {
  const PresentationGraph& g2 = builtin("gamma2");
  DetectorParams p2{1, 6, 5, 12};
  for (const char* period : {"a1 a3", "a1 a5", "a1 a6", "a2 a4", "a2 a5",
                             "a2 a6", "a3 a4", "a3 a5", "a4 a6"}) {
    if (!detect_contracting(ray(g2, "", period, 12), p2).accepted) {
      detail = std::string("gamma2 ray rejected: ") + period;
      return false;
    }
  }
  const PresentationGraph& g1 = builtin("gamma1");
  int prev = 0;
  for (int len : {4, 6, 8, 10}) {
    std::string prefix;
    for (int i = 0; i < len / 2; ++i) prefix += i ? " c4 c6" : "c4 c6";
    DetectorParams p1{1, 2, 5, len + 8};
    DetectionResult res =
        detect_contracting(ray(g1, prefix, "c1 c3", len + 8), p1);
    if (res.accepted || res.window->width() <= prev) {
      detail = "gamma1 block of length " + std::to_string(len) +
               " did not widen the window";
      return false;
    }
    prev = res.window->width();
  }
  detail = "gamma2 rays uniformly accepted; gamma1 windows grow 4,6,8,10";
  return true;
}

bool detour_growth_classes(std::string& detail) {
  const PresentationGraph& t3 = builtin("tree3");
  DivergenceProfile tree =
      divergence_profile(ray(t3, "", "t1 t2", 8), {1, 2});
  if (tree.classification != Growth::NoDetour) {
    detail = "tree3 ray has detours";
    return false;
  }
  const PresentationGraph& k33 = builtin("k33");
  DivergenceProfile flat = divergence_profile(
      ray(k33, "", "x1 y1 x2 y2", 24), {2, 3, 4, 5, 6, 7, 8, 9, 10});
  if (flat.classification != Growth::Linear || flat.slope < kFlatSlopeLo ||
      flat.slope > kFlatSlopeHi) {
    detail = "k33 diagonal slope " + std::to_string(flat.slope) +
             " outside [0.8, 1.2]";
    return false;
  }
  const PresentationGraph& hex = builtin("hexagon");
  DivergenceProfile steep = divergence_profile(
      ray(hex, "", "h1 h3", 26), {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, 1);
  if (steep.classification != Growth::Superlinear ||
      steep.slope < kSteepSlopeMin) {
    detail = "hexagon slope " + std::to_string(steep.slope) + " below 1.3";
    return false;
  }
  RaySpec hray = ray(hex, "", "h1 h3", 26);
  ContractionEstimate est =
      estimate_contraction(hray.path(12), {2, 3}, 40, 0);
  QuadraticBoundReport qbc =
      quadratic_bound_check(steep, std::max(1, est.D_hat));
  if (qbc.pass_fraction < kMinBoundFraction) {
    detail = "quadratic bound fraction " + std::to_string(qbc.pass_fraction);
    return false;
  }
  detail = "tree3 blocked; k33 slope " + std::to_string(flat.slope).substr(0, 4) +
           "; hexagon slope " + std::to_string(steep.slope).substr(0, 4) +
           "; bound fraction 1";
  return true;
}

bool estimates_are_consistent(std::string& detail) {
  struct Case {
    const char* graph;
    const char* period;
  };
  std::vector<Case> cases;
  for (const char* p : {"h1 h3", "h1 h5", "h1 h6", "h2 h4", "h2 h5", "h2 h6",
                        "h3 h4", "h3 h5", "h4 h6"})
    cases.push_back({"hexagon", p});
  for (const char* p :
       {"a d", "a a d", "a a d d", "a a a d", "a a a d d d", "a d d"})
    cases.push_back({"croke-kleiner", p});
  for (const char* p : {"a1 a3", "a1 a5", "a1 a6", "a2 a4", "a2 a5", "a2 a6",
                        "a3 a4", "a3 a5", "a4 a6"})
    cases.push_back({"gamma2", p});
  for (const Case& c : cases) {
    const PresentationGraph& g = builtin(c.graph);
    GeodesicPath path = ray(g, "", c.period, 12).path(12);
    int d_hat = estimate_contraction(path, {2, 3}, 40, 0).D_hat;
    SlimnessEstimate slim = estimate_slimness(path, 40, 0);
    if (d_hat > 6 * slim.delta_i + 2 || slim.delta_i > 3 * slim.delta_ii + 2 ||
        slim.delta_ii > slim.delta_i + 2) {
      detail = std::string(c.graph) + " " + c.period + ": D=" +
               std::to_string(d_hat) + " di=" + std::to_string(slim.delta_i) +
               " dii=" + std::to_string(slim.delta_ii);
      return false;
    }
  }
  detail = std::to_string(cases.size()) +
           " accepted rays satisfy all three inequalities";
  return true;
}

bool carrier_distance_bound(std::string& detail) {
  int nonvacuous = 0;
  for (const char* name : {"hexagon", "croke-kleiner"}) {
    const PresentationGraph& g = builtin(name);
    int nu = g.valence();
    std::mt19937_64 rng(45);
    // a word staying on the carrier: optionally cross the dual edge, then
    // wander inside the link subgroup (one side coset of the carrier)
    auto carrier_word = [&](Letter edge, int len) {
      std::vector<Letter> link;
      for (Letter x : g.alphabet())
        if (g.adjacent(x.gen, edge.gen)) link.push_back(x);
      Word w;
      if (rng() % 2) w.push_back(edge);
      while (static_cast<int>(w.size()) < len)
        w.push_back(link[rng() % link.size()]);
      return w;
    };
    int done = 0;
    while (done < 50) {
      Word w = random_geodesic(g, 10, rng);
      GeodesicPath path(GroupElement::identity(g), w);
      std::vector<Wall> ws = walls_of_path(path);
      std::size_t i = rng() % (ws.size() - 1);
      std::size_t j = i + 1 + rng() % std::min<std::size_t>(3, ws.size() - 1 - i);
      SeparationVerdict v = separation(ws[i], ws[j], 8);
      if (v.relation != Relation::Disjoint) continue;
      int k = v.crossing_both_count;
      const GroupElement& x1 = path.vertex(static_cast<int>(i));
      const GroupElement& x2 = path.vertex(static_cast<int>(j));
      int r = distance(x1, x2);
      GroupElement y1 = multiply(
          x1, GroupElement::from_word(g, carrier_word(w[i], 10)));
      GroupElement y2 = multiply(
          x2, GroupElement::from_word(g, carrier_word(w[j], 10)));
      if (!on_carrier(ws[i], y1) || !on_carrier(ws[j], y2)) {
        detail = "sampled point left its carrier";
        return false;
      }
      int lhs = distance(y1, y2);
      int rhs = distance(x1, y1) + distance(x2, y2) - 2 * k - nu * r;
      if (lhs < rhs) {
        detail = std::string(name) + ": d=" + std::to_string(lhs) +
                 " below bound " + std::to_string(rhs);
        return false;
      }
      if (rhs > 0) ++nonvacuous;
      ++done;
    }
  }
  detail = "100 carrier quadruples, " + std::to_string(nonvacuous) +
           " with a positive bound";
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return "<missing " + path + ">";
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool suites_match_goldens(std::string& detail) {
  for (const std::string& name : suites::suite_names()) {
    suites::SuiteOutcome out = suites::run_suite(name, 0);
    std::string dir = std::string(GOLDEN_DIR) + "/" + name;
    if (!out.all_passed) {
      detail = name + " has failing claims";
      return false;
    }
    if (out.results_csv != slurp(dir + "/results.csv") ||
        out.summary_json != slurp(dir + "/summary.json")) {
      detail = name + " differs from its golden files";
      return false;
    }
  }
  detail = "all four suites byte-match their committed outputs at seed 0";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    bool (*fn)(std::string&);
  };
  const Criterion criteria[] = {
      {"normal forms match the exhaustive rewriting oracle",
       normal_forms_match_oracle},
      {"path walls are pairwise distinct", walls_are_distinct},
      {"three crossing algorithms agree", crossing_algorithms_agree},
      {"hexagon wall pairs are 0- or 1-separated", hexagon_pairs_separated},
      {"detector verdicts match the pinned examples",
       detector_matches_examples},
      {"block length controls croke-kleiner verdicts",
       block_length_splits_verdicts},
      {"hexagon subgroups contrast inside gamma1 and gamma2",
       hexagon_subgroup_contrast},
      {"detour growth separates tree, product, and hexagon",
       detour_growth_classes},
      {"contraction and slimness estimates are mutually bounded",
       estimates_are_consistent},
      {"carrier distances respect the separation bound",
       carrier_distance_bound},
      {"suites byte-match their goldens", suites_match_goldens},
  };
  int failures = 0;
  double start = now();
  int id = 0;
  for (const Criterion& c : criteria) {
    ++id;
    double t0 = now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("[%s] %2d %-55s %6.1fs  %s\n", ok ? "PASS" : "FAIL", id,
                c.label, now() - t0, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/11 passed in %.1fs\n", 11 - failures, now() - start);
  return failures;
}
