#include "suites.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gpcx/builtins.hpp"
#include "gpcx/cayley.hpp"
#include "gpcx/divergence.hpp"
#include "gpcx/errors.hpp"
#include "gpcx/normal_form.hpp"
#include "gpcx/presentation.hpp"
#include "gpcx/rays.hpp"
#include "gpcx/walls.hpp"

namespace gpcx::suites {

namespace {

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

const char* relation_name(Relation rel) {
  switch (rel) {
    case Relation::Equal: return "EQUAL";
    case Relation::Crossing: return "CROSSING";
    default: return "DISJOINT";
  }
}

const char* growth_name(Growth c) {
  switch (c) {
    case Growth::NoDetour: return "NO_DETOUR";
    case Growth::Linear: return "LINEAR";
    default: return "SUPERLINEAR";
  }
}

// Accumulates CSV rows and per-claim verdicts.  Row and claim order is
// insertion order, so a suite is byte-stable as long as it appends in a
// fixed sequence.
class Builder {
 public:
  void row(const std::string& claim, const std::string& kind,
           const std::string& input, const std::string& params,
           const std::string& result, const std::string& value,
           const std::string& extra) {
    int idx = next_row_[claim]++;
    csv_ += claim + "," + std::to_string(idx) + "," + kind + "," + input +
            "," + params + "," + result + "," + value + "," + extra + "\n";
  }

  void claim(const std::string& id, const std::string& description,
             const std::string& anchor, bool passed) {
    nlohmann::json c;
    c["id"] = id;
    c["description"] = description;
    c["paper_anchor"] = anchor;
    c["status"] = passed ? "pass" : "fail";
    c["data_ref"] = "results.csv#claim=" + id;
    claims_.push_back(c);
    all_passed_ = all_passed_ && passed;
  }

  SuiteOutcome finish(const std::string& name, uint64_t seed) const {
    SuiteOutcome out;
    out.name = name;
    out.all_passed = all_passed_;
    out.results_csv =
        "claim,row,kind,input,params,result,value,extra\n" + csv_;
    nlohmann::json j;
    j["suite"] = name;
    j["version"] = kVersion;
    j["seed"] = seed;
    j["claims"] = claims_;
    out.summary_json = j.dump(2) + "\n";
    return out;
  }

 private:
  std::string csv_;
  std::map<std::string, int> next_row_;
  nlohmann::json claims_ = nlohmann::json::array();
  bool all_passed_ = true;
};

std::string detect_params(const DetectorParams& p) {
  return "k=" + std::to_string(p.k) + ";r=" + std::to_string(p.r) +
         ";radius=" + std::to_string(p.radius) +
         ";horizon=" + std::to_string(p.horizon);
}

// runs the detector and records one row; returns the result for claims
DetectionResult detect_row(Builder& b, const std::string& claim,
                           const PresentationGraph& g,
                           const std::string& prefix,
                           const std::string& period, int ray_horizon,
                           const DetectorParams& p) {
  RaySpec ray(g, parse_word(g, prefix), parse_word(g, period), ray_horizon);
  DetectionResult res = detect_contracting(ray, p);
  std::string rl = res.radius_limited ? "1" : "0";
  if (res.accepted) {
    std::string chain;
    int maxcount = 0;
    for (int i : res.witness->indices)
      chain += (chain.empty() ? "" : ":") + std::to_string(i);
    for (const SeparationVerdict& v : res.witness->pair_verdicts)
      maxcount = std::max(maxcount, v.crossing_both_count);
    b.row(claim, "detect", prefix + "|" + period, detect_params(p), "ACCEPT",
          std::to_string(res.witness->max_gap),
          "chain=" + chain + ";maxcount=" + std::to_string(maxcount) +
              ";radius_limited=" + rl);
  } else {
    b.row(claim, "detect", prefix + "|" + period, detect_params(p), "REJECT",
          std::to_string(res.window->width()),
          "window=[" + std::to_string(res.window->begin) + ":" +
              std::to_string(res.window->end) + "];radius_limited=" + rl);
  }
  return res;
}

void profile_rows(Builder& b, const std::string& claim,
                  const PresentationGraph& g, const std::string& period,
                  const DivergenceProfile& prof, int t_samples) {
  for (const LdivRow& row : prof.rows) {
    std::string status = row.status == RowStatus::Finite    ? "FINITE"
                         : row.status == RowStatus::Infinite ? "INFINITE"
                                                             : "CAPPED";
    b.row(claim, "ldiv", "|" + period,
          "r=" + std::to_string(row.r) + ";t=" + std::to_string(row.t_min) +
              ";rmax=" + std::to_string(row.search_bound),
          status,
          row.status == RowStatus::Finite ? std::to_string(row.value) : "-1",
          "witness_length=" + std::to_string(row.witness.size()) +
              ";finite=" + std::to_string(row.finite_samples) +
              ";infinite=" + std::to_string(row.infinite_samples) +
              ";capped=" + std::to_string(row.capped_samples));
  }
  b.row(claim, "slope", "|" + period,
        "r=" + std::to_string(prof.rows.front().r) + ":" +
            std::to_string(prof.rows.back().r) +
            ";t_samples=" + std::to_string(t_samples),
        growth_name(prof.classification), fixed4(prof.slope),
        "threshold=" + fixed4(prof.linear_threshold));
}

Word random_word(const PresentationGraph& g, const std::vector<Letter>& pool,
                 std::mt19937_64& rng, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(pool[rng() % pool.size()]);
  return w;
}

// random period whose infinite repetition stays geodesic
Word random_period(const PresentationGraph& g, const std::vector<Letter>& pool,
                   std::mt19937_64& rng, int len, int horizon) {
  for (;;) {
    Word w = random_word(g, pool, rng, len);
    try {
      RaySpec probe(g, Word{}, w, horizon);
      return w;
    } catch (const Error&) {
    }
  }
}

std::vector<Letter> letters_of(const PresentationGraph& g,
                               const std::string& names) {
  std::vector<Letter> pool;
  for (Letter l : parse_word(g, names)) pool.push_back(l);
  return pool;
}

std::string itinerary_tag(const PresentationGraph& g, const Itinerary& it) {
  std::string s;
  for (const ItineraryVertex& v : it.vertices) {
    s += v.omega ? "O[" : "G[";
    s += word_to_string(g, v.key);
    s += "]";
  }
  return s;
}

SuiteOutcome run_hexagon(uint64_t seed) {
  const PresentationGraph& g = builtin("hexagon");
  Builder b;
  std::mt19937_64 rng(seed);

  std::vector<std::string> periods = {"h1 h3", "h1 h5", "h1 h6",
                                      "h2 h4", "h2 h5", "h2 h6",
                                      "h3 h4", "h3 h5", "h4 h6"};
  while (periods.size() < 20)
    periods.push_back(
        word_to_string(g, random_period(g, g.alphabet(), rng, 4, 12)));

  DetectorParams p;
  p.k = 1;
  p.r = 6;
  p.radius = 6;
  p.horizon = 12;
  bool all_accepted = true;
  int max_chain_count = 0;
  for (const std::string& period : periods) {
    DetectionResult res = detect_row(b, "hx-detect-uniform", g, "", period,
                                     p.horizon, p);
    all_accepted = all_accepted && res.accepted;
    if (res.witness)
      for (const SeparationVerdict& v : res.witness->pair_verdicts)
        max_chain_count = std::max(max_chain_count, v.crossing_both_count);
  }
  b.claim("hx-detect-uniform",
          "all 20 sampled periodic rays accepted at k=1, r=6",
          "in the six-cycle group every geodesic direction is contracting",
          all_accepted);
  b.claim("hx-chain-separation",
          "every witnessing wall pair has at most 1 wall crossing both "
          "(observed max " + std::to_string(max_chain_count) + ")",
          "walls along six-cycle geodesics are 0- or 1-separated",
          max_chain_count <= 1);

  bool pairs_ok = true;
  for (int n = 0; n < 100;) {
    Word raw = random_word(g, g.alphabet(), rng, 10);
    Word nf = normal_form(g, raw);
    if (nf.size() < 2) continue;
    GeodesicPath path(GroupElement::identity(g), nf);
    std::vector<Wall> walls = walls_of_path(path);
    int i = static_cast<int>(rng() % walls.size());
    int j = static_cast<int>(rng() % walls.size());
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    SeparationVerdict v = separation(walls[i], walls[j], 8, 1);
    if (v.relation != Relation::Disjoint) continue;
    bool within = v.crossing_both_count <= 1 &&
                  (!v.certified_over_k || *v.certified_over_k < 1);
    pairs_ok = pairs_ok && within;
    b.row("hx-pair-separation", "sep", word_to_string(g, nf),
          "i=" + std::to_string(i) + ";j=" + std::to_string(j) +
              ";radius=8;abort_over=1",
          relation_name(v.relation), std::to_string(v.crossing_both_count),
          std::string("radius_limited=") + (v.radius_limited ? "1" : "0") +
              ";certified_over=" +
              (v.certified_over_k ? std::to_string(*v.certified_over_k)
                                  : "-"));
    ++n;
  }
  b.claim("hx-pair-separation",
          "100 random disjoint wall pairs from geodesics of length <= 10 "
          "have at most 1 wall crossing both at radius 8",
          "walls along six-cycle geodesics are 0- or 1-separated", pairs_ok);

  RaySpec ray(g, Word{}, parse_word(g, "h1 h3"), 26);
  std::vector<int> radii;
  for (int r = 2; r <= 12; ++r) radii.push_back(r);
  DivergenceProfile prof = divergence_profile(ray, radii, 1);
  profile_rows(b, "hx-divergence-superlinear", g, "h1 h3", prof, 1);
  b.claim("hx-divergence-superlinear",
          "detour growth of the (h1 h3) ray fits slope " +
              fixed4(prof.slope) + " over the finite radii, >= 1.3",
          "hyperbolic divergence is exponential, so far above any linear "
          "envelope",
          prof.classification == Growth::Superlinear && prof.slope >= 1.3);

  ContractionEstimate est = estimate_contraction(
      ray.path(12), {2, 3}, 40, static_cast<uint32_t>(seed));
  b.row("hx-quadratic-bound", "dhat", "|h1 h3",
        "radii=2 3;budget=40;seed=" + std::to_string(seed) + ";horizon=12",
        "OK", std::to_string(est.D_hat),
        "samples=" + std::to_string(est.samples.size()));
  QuadraticBoundReport qb = quadratic_bound_check(prof, std::max(1, est.D_hat));
  for (const QuadraticBoundRow& row : qb.rows)
    b.row("hx-quadratic-bound", "qbc", "|h1 h3",
          "r=" + std::to_string(row.r) +
              ";dhat=" + std::to_string(qb.D_hat),
          row.counted ? (row.pass ? "PASS" : "FAIL") : "SKIP",
          row.status == RowStatus::Finite ? std::to_string(row.value) : "-1",
          "bound=" + fixed4(row.bound));
  b.row("hx-quadratic-bound", "fraction", "|h1 h3",
        "dhat=" + std::to_string(qb.D_hat),
        qb.pass_fraction >= 0.9 ? "PASS" : "FAIL", fixed4(qb.pass_fraction),
        "");
  b.claim("hx-quadratic-bound",
          "ldiv clears the quadratic lower bound with slack 2 on " +
              fixed4(qb.pass_fraction * 100) + "% of computed radii",
          "a D-contracting ray has lower divergence at least r^2/2D - D",
          qb.pass_fraction >= 0.9);

  return b.finish("hexagon", seed);
}

SuiteOutcome run_k33(uint64_t seed) {
  const PresentationGraph& g = builtin("k33");
  Builder b;
  std::mt19937_64 rng(seed);

  std::vector<std::string> periods = {"x1 x2", "x1 x3", "x2 x3",
                                      "y1 y2", "y1 y3", "y2 y3"};
  while (periods.size() < 20)
    periods.push_back(
        word_to_string(g, random_period(g, g.alphabet(), rng, 4, 16)));

  DetectorParams p;
  p.k = 8;
  p.r = 6;
  p.radius = 8;
  p.horizon = 16;
  bool all_rejected = true;
  for (const std::string& period : periods) {
    DetectionResult res =
        detect_row(b, "k33-detect-reject", g, "", period, p.horizon, p);
    all_rejected = all_rejected && !res.accepted;
  }
  b.claim("k33-detect-reject",
          "all 20 sampled periodic rays rejected for every k <= 8",
          "a direct product of infinite groups has no contracting ray",
          all_rejected);

  bool counts_ok = true;
  for (const std::string& period : {"x1 x2", "y1 y3"}) {
    Word w = parse_word(g, period);
    GeodesicPath path(GroupElement::identity(g), w);
    std::vector<Wall> walls = walls_of_path(path);
    SeparationVerdict v = separation(walls[0], walls[1], 8, 8);
    counts_ok = counts_ok && v.relation == Relation::Disjoint &&
                v.certified_over_k && *v.certified_over_k == 8;
    b.row("k33-parallel-counts", "sep", period,
          "i=0;j=1;radius=8;abort_over=8", relation_name(v.relation),
          std::to_string(v.crossing_both_count),
          std::string("radius_limited=") + (v.radius_limited ? "1" : "0") +
              ";certified_over=" +
              (v.certified_over_k ? std::to_string(*v.certified_over_k)
                                  : "-"));
  }
  b.claim("k33-parallel-counts",
          "parallel wall pairs are certifiably crossed by more than 8 walls",
          "walls in a product are crossed arbitrarily often", counts_ok);

  RaySpec diag(g, Word{}, parse_word(g, "x1 y1 x2 y2"), 24);
  std::vector<int> radii;
  for (int r = 2; r <= 10; ++r) radii.push_back(r);
  DivergenceProfile prof = divergence_profile(diag, radii);
  profile_rows(b, "k33-divergence-linear", g, "x1 y1 x2 y2", prof, 0);
  bool envelope = true;
  for (const LdivRow& row : prof.rows)
    envelope = envelope && row.status == RowStatus::Finite &&
               row.value >= 2 * row.r && row.value <= 4 * row.r + 2;
  b.claim("k33-divergence-linear",
          "diagonal ray detours stay in [2r, 4r+2] and fit slope " +
              fixed4(prof.slope) + " in [0.8, 1.2]",
          "divergence in a product is linear",
          envelope && prof.classification == Growth::Linear &&
              prof.slope >= 0.8 && prof.slope <= 1.2);

  bool all_flat = prof.classification == Growth::Linear;
  for (const std::string& period : {"x1 x2", "y1 y3"}) {
    RaySpec one_sided(g, Word{}, parse_word(g, period), 16);
    DivergenceProfile side =
        divergence_profile(one_sided, {2, 3, 4, 5, 6});
    profile_rows(b, "k33-profiles-flat", g, period, side, 0);
    all_flat = all_flat && (side.classification == Growth::Linear ||
                            side.classification == Growth::NoDetour);
  }
  b.claim("k33-profiles-flat",
          "every sampled profile is LINEAR or NO_DETOUR",
          "no direction of a product diverges superlinearly", all_flat);

  return b.finish("k33", seed);
}

SuiteOutcome run_croke_kleiner(uint64_t seed) {
  const PresentationGraph& g = builtin("croke-kleiner");
  Builder b;

  DetectorParams tight;
  tight.k = 0;
  tight.r = 2;
  tight.radius = 6;
  tight.horizon = 40;
  DetectionResult ad =
      detect_row(b, "ck-alternating-accept", g, "", "a d", 40, tight);
  b.claim("ck-alternating-accept",
          "the (a d) ray is accepted at k=0, r=2 with gap-1 chain",
          "consecutive a- and d-walls are strongly separated",
          ad.accepted && !ad.radius_limited && ad.witness->max_gap == 1);

  DetectorParams central;
  central.k = 8;
  central.r = 6;
  central.radius = 8;
  central.horizon = 14;
  DetectionResult bray =
      detect_row(b, "ck-central-reject", g, "", "b", 14, central);
  b.claim("ck-central-reject",
          "the central b ray is rejected for every k <= 8",
          "walls along a central direction are crossed arbitrarily often",
          !bray.accepted);

  DetectorParams blocks;
  blocks.k = 0;
  blocks.r = 4;
  blocks.radius = 6;
  blocks.horizon = 24;
  bool blocks_ok = true;
  for (const std::string& period :
       {"a d", "a a d", "a a d d", "a a a d", "a a a d d d", "a d d"}) {
    DetectionResult res =
        detect_row(b, "ck-short-blocks-accept", g, "", period, 24, blocks);
    blocks_ok = blocks_ok && res.accepted;
  }
  b.claim("ck-short-blocks-accept",
          "six rays with a/d-blocks of length <= 3 accepted at uniform "
          "k=0, r=4",
          "a uniform block bound gives a uniform contraction bound",
          blocks_ok);

  bool windows_ok = true;
  int prev_width = 0;
  for (int m : {4, 5}) {
    std::string prefix;
    for (int i = 0; i < m; ++i) prefix += i ? " a c" : "a c";
    int L = 2 * m + 1;
    DetectorParams wp = blocks;
    wp.horizon = 2 * L + 6;
    DetectionResult res = detect_row(b, "ck-block-window-growth", g, prefix,
                                     "a d", wp.horizon, wp);
    bool row_ok = !res.accepted && res.window->width() >= L - 2 &&
                  res.window->width() > prev_width;
    if (!res.accepted) prev_width = res.window->width();
    windows_ok = windows_ok && row_ok;
  }
  b.claim("ck-block-window-growth",
          "rays entering (a c)-blocks of length 9 and 11 are rejected with "
          "windows of width >= L-2, growing with L",
          "the obstruction to contraction scales with the commuting block",
          windows_ok);

  RaySpec adray(g, Word{}, parse_word(g, "a d"), 14);
  DivergenceProfile prof = divergence_profile(adray, {2, 3, 4, 5});
  profile_rows(b, "ck-divergence-quadratic", g, "a d", prof, 0);
  b.claim("ck-divergence-quadratic",
          "the (a d) ray detours grow superlinearly (slope " +
              fixed4(prof.slope) + ") but slower than cubically",
          "divergence of the alternating ray is quadratic",
          prof.classification == Growth::Superlinear && prof.slope > 1.2 &&
              prof.slope < 2.5);

  RaySpec alpha(g, Word{}, parse_word(g, "a d"), 12);
  RaySpec beta(g, Word{}, parse_word(g, "b"), 12);
  ProjectionCheck chk = bounded_projection_check(alpha, beta, 12);
  b.row("ck-central-projection", "projection", "a d|b", "horizon=12", "OK",
        std::to_string(chk.max_displacement), "");
  b.claim("ck-central-projection",
          "the central ray projects to the base of the (a d) ray",
          "a contracting ray sees bounded projections from disjoint rays",
          chk.max_displacement == 0);

  return b.finish("croke-kleiner", seed);
}

SuiteOutcome run_gamma(uint64_t seed) {
  const PresentationGraph& g2 = builtin("gamma2");
  const PresentationGraph& g1 = builtin("gamma1");
  Builder b;
  std::mt19937_64 rng(seed);

  std::vector<std::string> periods = {"a1 a3", "a1 a5", "a1 a6",
                                      "a2 a4", "a2 a5", "a2 a6",
                                      "a3 a4", "a3 a5", "a4 a6"};
  std::vector<Letter> a_pool = letters_of(g2, "a1 a2 a3 a4 a5 a6");
  while (periods.size() < 15)
    periods.push_back(
        word_to_string(g2, random_period(g2, a_pool, rng, 4, 12)));

  DetectorParams p2;
  p2.k = 1;
  p2.r = 6;
  p2.radius = 5;
  p2.horizon = 12;
  bool all_accepted = true;
  for (const std::string& period : periods) {
    DetectionResult res =
        detect_row(b, "g2-uniform-accept", g2, "", period, 12, p2);
    all_accepted = all_accepted && res.accepted;
  }
  b.claim("g2-uniform-accept",
          "all 15 sampled rays in the attached hexagon accepted at uniform "
          "k=1, r=6",
          "hexagonal directions stay contracting after the second group is "
          "glued on",
          all_accepted);

  DetectorParams p1;
  p1.k = 1;
  p1.r = 2;
  p1.radius = 5;
  bool growth_ok = true;
  int prev_width = 0;
  for (int L : {4, 6, 8, 10}) {
    std::string prefix;
    for (int i = 0; i < L / 2; ++i) prefix += i ? " c4 c6" : "c4 c6";
    p1.horizon = L + 8;
    DetectionResult res =
        detect_row(b, "g1-window-growth", g1, prefix, "c1 c3", L + 8, p1);
    bool row_ok =
        !res.accepted && res.window->width() > prev_width;
    if (!res.accepted) prev_width = res.window->width();
    growth_ok = growth_ok && row_ok;
  }
  b.claim("g1-window-growth",
          "shared-letter blocks of length 4, 6, 8, 10 are rejected with "
          "strictly growing windows",
          "no uniform detector parameters survive arbitrarily long shared "
          "blocks",
          growth_ok);

  bool itineraries_ok = true;
  std::string word = "c1 d1";
  for (int m = 1; m <= 4; ++m) {
    Itinerary it = itinerary(g1, parse_word(g1, word));
    b.row("g1-itinerary-stats", "itinerary", word, "", itinerary_tag(g1, it),
          std::to_string(it.length()), "pinned=1");
    itineraries_ok = itineraries_ok && it.length() == 2 * m;
    word += " c1 d1";
  }
  for (int n = 0; n < 20; ++n) {
    Word raw = random_word(g1, g1.alphabet(), rng, 8);
    Itinerary it = itinerary(g1, raw);
    b.row("g1-itinerary-stats", "itinerary", word_to_string(g1, raw), "",
          itinerary_tag(g1, it), std::to_string(it.length()), "pinned=0");
  }
  b.claim("g1-itinerary-stats",
          "alternating words (c1 d1)^m realize itineraries of length 2m",
          "itineraries of the amalgam alternate between the two vertex "
          "groups",
          itineraries_ok);

  b.row("g-contrast", "contrast", "gamma2|gamma1", "",
        all_accepted && growth_ok ? "CONTRAST" : "NONE",
        all_accepted && growth_ok ? "1" : "0", "");
  b.claim("g-contrast",
          "uniform acceptance on one side, unboundedly growing obstructions "
          "on the other",
          "the two groups differ in a quasi-isometry invariant of their "
          "contracting directions",
          all_accepted && growth_ok);

  return b.finish("gamma1-vs-gamma2", seed);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "hexagon", "k33", "croke-kleiner", "gamma1-vs-gamma2"};
  return names;
}

SuiteOutcome run_suite(const std::string& name, uint64_t seed) {
  if (name == "hexagon") return run_hexagon(seed);
  if (name == "k33") return run_k33(seed);
  if (name == "croke-kleiner") return run_croke_kleiner(seed);
  if (name == "gamma1-vs-gamma2") return run_gamma(seed);
  throw ParseError(0, "unknown suite: " + name);
}

}  // namespace gpcx::suites
