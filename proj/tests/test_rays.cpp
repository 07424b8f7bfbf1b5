#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include <gpcx/builtins.hpp>
#include <gpcx/cayley.hpp>
#include <gpcx/errors.hpp>
#include <gpcx/normal_form.hpp>
#include <gpcx/rays.hpp>
#include <gpcx/walls.hpp>

#include "support/oracles.hpp"

using namespace gpcx;

namespace {

Word wtext(const PresentationGraph& g, const std::string& text) {
  return parse_word(g, text);
}

std::string wstr(const PresentationGraph& g, const Word& w) {
  return word_to_string(g, w);
}

RaySpec ray(const PresentationGraph& g, const std::string& prefix,
            const std::string& period, int horizon) {
  return RaySpec(g, wtext(g, prefix), wtext(g, period), horizon);
}

std::string itinerary_tag(const PresentationGraph& g, const Itinerary& it) {
  std::string s;
  for (const ItineraryVertex& v : it.vertices) {
    s += v.omega ? "O[" : "G[";
    s += wstr(g, v.key);
    s += "]";
  }
  return s;
}

}  // namespace

TEST_CASE("ray specs unroll and validate") {
  const PresentationGraph& ck = builtin("croke-kleiner");
  RaySpec r = ray(ck, "", "a d", 10);
  CHECK(wstr(ck, r.unroll(5)) == "a d a d a");
  CHECK(wstr(ck, r.unroll(0)) == "");
  CHECK(r.path(10).length() == 10);
  CHECK_THROWS_AS(r.unroll(11), HorizonExceeded);

  RaySpec mixed(ck, wtext(ck, "b"), wtext(ck, "a d"), 7);
  CHECK(wstr(ck, mixed.unroll(4)) == "b a d a");

  CHECK_THROWS_AS(ray(ck, "", "", 5), IndexOutOfRange);
  CHECK_THROWS_AS(ray(ck, "", "a d", 0), IndexOutOfRange);
  CHECK_THROWS_AS(ray(ck, "", "a a^-1", 4), NotGeodesic);

  const PresentationGraph& hex = builtin("hexagon");
  // h1 h2 h1 h2 collapses, so horizon 4 is past the geodesic range
  CHECK_THROWS_AS(ray(hex, "", "h1 h2", 4), NotGeodesic);
  CHECK_NOTHROW(ray(hex, "", "h1 h2", 2));
}

TEST_CASE("detector accepts the croke-kleiner a d ray unconditionally") {
  const PresentationGraph& ck = builtin("croke-kleiner");
  DetectorParams p;
  p.k = 0;
  p.r = 2;
  p.radius = 6;
  p.horizon = 40;
  DetectionResult res = detect_contracting(ray(ck, "", "a d", 40), p);
  REQUIRE(res.accepted);
  REQUIRE(res.witness.has_value());
  CHECK_FALSE(res.radius_limited);
  const ContractionWitness& wit = *res.witness;
  CHECK(wit.max_gap == 1);
  CHECK(wit.indices.front() < p.r);
  CHECK(wit.indices.back() >= p.horizon - p.r);
  for (std::size_t t = 0; t + 1 < wit.indices.size(); ++t)
    CHECK(wit.indices[t + 1] - wit.indices[t] < p.r);
  for (const SeparationVerdict& v : wit.pair_verdicts) {
    CHECK(v.relation == Relation::Disjoint);
    CHECK(v.crossing_both_count == 0);
    CHECK_FALSE(v.radius_limited);
  }
}

TEST_CASE("detector witness re-validates in the absolute frame") {
  const PresentationGraph& ck = builtin("croke-kleiner");
  DetectorParams p;
  p.k = 0;
  p.r = 2;
  p.radius = 5;
  p.horizon = 12;
  RaySpec r = ray(ck, "", "a d", 12);
  DetectionResult res = detect_contracting(r, p);
  REQUIRE(res.accepted);
  GeodesicPath path = r.path(p.horizon);
  std::vector<Wall> walls = walls_of_path(path);
  const ContractionWitness& wit = *res.witness;
  for (std::size_t t = 0; t + 1 < wit.indices.size(); ++t) {
    SeparationVerdict again =
        separation(walls[wit.indices[t]], walls[wit.indices[t + 1]], p.radius);
    CHECK(again.relation == wit.pair_verdicts[t].relation);
    CHECK(again.crossing_both_count ==
          wit.pair_verdicts[t].crossing_both_count);
  }
}

TEST_CASE("detector accepts the hexagon ray at k=1 but not k=0") {
  const PresentationGraph& hex = builtin("hexagon");
  DetectorParams p;
  p.k = 1;
  p.r = 2;
  p.radius = 8;
  p.horizon = 10;
  RaySpec r = ray(hex, "", "h1 h3", 10);
  DetectionResult res = detect_contracting(r, p);
  REQUIRE(res.accepted);
  CHECK(res.radius_limited);
  for (const SeparationVerdict& v : res.witness->pair_verdicts) {
    CHECK(v.crossing_both_count == 1);
    CHECK(v.witnesses.size() == 1);
    CHECK(hex.name(v.witnesses[0].type()) == "h2");
  }

  p.k = 0;
  p.radius = 4;
  DetectionResult rej = detect_contracting(r, p);
  CHECK_FALSE(rej.accepted);
  REQUIRE(rej.window.has_value());
  CHECK(rej.window->begin == 0);
  CHECK(rej.window->end == p.horizon - 1);
}

TEST_CASE("detector rejects flat directions in k33") {
  const PresentationGraph& k33 = builtin("k33");
  DetectorParams p;
  p.k = 8;
  p.r = 6;
  p.radius = 8;
  p.horizon = 16;
  DetectionResult res = detect_contracting(ray(k33, "", "x1 x2", 16), p);
  CHECK_FALSE(res.accepted);
  REQUIRE(res.window.has_value());
  CHECK(res.window->begin == 0);
  CHECK(res.window->end == p.horizon - 1);
  CHECK(res.window->width() >= p.r);
  CHECK_FALSE(res.radius_limited);
}

TEST_CASE("detector rejects a central direction of a block") {
  const PresentationGraph& ck = builtin("croke-kleiner");
  DetectorParams p;
  p.k = 0;
  p.r = 2;
  p.radius = 4;
  p.horizon = 10;
  DetectionResult res = detect_contracting(ray(ck, "", "b", 10), p);
  CHECK_FALSE(res.accepted);
  CHECK(res.window->begin == 0);
  CHECK(res.window->end == p.horizon - 1);
}

TEST_CASE("detector accepts free product rays at k=0") {
  const PresentationGraph& t3 = builtin("tree3");
  DetectorParams p;
  p.k = 0;
  p.r = 2;
  p.radius = 2;
  p.horizon = 12;
  DetectionResult res = detect_contracting(ray(t3, "", "t1 t2", 12), p);
  REQUIRE(res.accepted);
  CHECK_FALSE(res.radius_limited);
}

TEST_CASE("a long block inside the prefix opens an obstruction window") {
  const PresentationGraph& ck = builtin("croke-kleiner");
  // block "a c a c a c a c a" of length 9 before the first d
  RaySpec r(ck, wtext(ck, "a c a c a c a c"), wtext(ck, "a d"), 16);
  DetectorParams p;
  p.k = 0;
  p.r = 4;
  p.radius = 6;
  p.horizon = 16;
  DetectionResult res = detect_contracting(r, p);
  REQUIRE_FALSE(res.accepted);
  REQUIRE(res.window.has_value());
  CHECK(res.window->begin == 0);
  CHECK(res.window->end == 6);
  CHECK(res.window->width() == 7);

  // the same period without the block is accepted under the same params
  DetectionResult ok = detect_contracting(ray(ck, "", "a d", 16), p);
  CHECK(ok.accepted);
}

TEST_CASE("detector monotonicity in k") {
  const PresentationGraph& hex = builtin("hexagon");
  RaySpec r = ray(hex, "", "h1 h3", 8);
  DetectorParams p;
  p.r = 2;
  p.radius = 8;
  p.horizon = 8;
  p.k = 1;
  REQUIRE(detect_contracting(r, p).accepted);
  p.k = 3;
  CHECK(detect_contracting(r, p).accepted);
}

TEST_CASE("detector parameter validation") {
  const PresentationGraph& ck = builtin("croke-kleiner");
  RaySpec r = ray(ck, "", "a d", 12);
  DetectorParams p;
  p.horizon = 3;
  p.r = 2;
  CHECK_THROWS_AS(detect_contracting(r, p), HorizonTooSmall);
  p.horizon = 20;
  CHECK_THROWS_AS(detect_contracting(r, p), HorizonExceeded);
  p.horizon = 12;
  p.r = 0;
  CHECK_THROWS_AS(detect_contracting(r, p), IndexOutOfRange);
  p.r = 2;
  p.radius = 0;
  CHECK_THROWS_AS(detect_contracting(r, p), IndexOutOfRange);
  p.radius = 4;
  p.k = -1;
  CHECK_THROWS_AS(detect_contracting(r, p), IndexOutOfRange);
}

TEST_CASE("contraction estimates stay deterministic and well formed") {
  const PresentationGraph& hex = builtin("hexagon");
  GeodesicPath path(GroupElement::identity(hex), wtext(hex, "h1 h3 h1 h3 h1 h3 h1 h3"));
  ContractionEstimate a = estimate_contraction(path, {2, 3}, 4, 7);
  ContractionEstimate b = estimate_contraction(path, {2, 3}, 4, 7);
  CHECK(a.D_hat == b.D_hat);
  CHECK(a.samples.size() == b.samples.size());
  REQUIRE_FALSE(a.samples.empty());
  for (const ContractionSample& s : a.samples) {
    CHECK(distance(s.center, path) > s.radius);
    CHECK(s.diameter >= 0);
    CHECK(s.diameter <= a.D_hat);
  }
  CHECK_THROWS_AS(estimate_contraction(path, {}, 4, 7), IndexOutOfRange);
  CHECK_THROWS_AS(estimate_contraction(path, {2}, 0, 7), IndexOutOfRange);
  CHECK_THROWS_AS(estimate_contraction(path, {5}, 4, 7), IndexOutOfRange);
}

TEST_CASE("flat balls shadow long segments, hyperbolic balls short ones") {
  const PresentationGraph& k33 = builtin("k33");
  GeodesicPath diag(GroupElement::identity(k33),
                    wtext(k33, "x1 y1 x2 y2 x1 y1 x2 y2 x1 y1 x2 y2"));
  ContractionEstimate flat = estimate_contraction(diag, {2, 3}, 6, 11);
  REQUIRE_FALSE(flat.samples.empty());

  const PresentationGraph& hex = builtin("hexagon");
  GeodesicPath thin(GroupElement::identity(hex),
                    wtext(hex, "h1 h3 h1 h3 h1 h3 h1 h3 h1 h3 h1 h3"));
  ContractionEstimate narrow = estimate_contraction(thin, {2, 3}, 6, 11);
  REQUIRE_FALSE(narrow.samples.empty());
  CHECK(flat.D_hat > narrow.D_hat);
  CHECK(flat.D_hat >= 3);
}

TEST_CASE("slimness estimates and the comparison inequalities") {
  const PresentationGraph& hex = builtin("hexagon");
  GeodesicPath path(GroupElement::identity(hex),
                    wtext(hex, "h1 h3 h1 h3 h1 h3 h1 h3"));
  SlimnessEstimate slim = estimate_slimness(path, 10, 13);
  CHECK(slim.samples_i.size() == 10);
  CHECK(slim.samples_ii.size() == 10);
  for (const SlimnessSampleI& s : slim.samples_i) CHECK(s.value >= 0);
  CHECK(slim.delta_ii <= slim.delta_i + 2);
  CHECK(slim.delta_i <= 3 * slim.delta_ii + 2);

  ContractionEstimate con = estimate_contraction(path, {2, 3}, 6, 13);
  CHECK(con.D_hat <= 6 * slim.delta_i + 2);

  SlimnessEstimate again = estimate_slimness(path, 10, 13);
  CHECK(again.delta_i == slim.delta_i);
  CHECK(again.delta_ii == slim.delta_ii);
}

TEST_CASE("projections of a central ray stay at the base") {
  const PresentationGraph& ck = builtin("croke-kleiner");
  RaySpec alpha = ray(ck, "", "a d", 12);
  RaySpec beta = ray(ck, "", "b", 12);
  ProjectionCheck chk = bounded_projection_check(alpha, beta, 12);
  CHECK(chk.max_displacement == 0);
  CHECK(chk.displacements.size() == 13);
}

TEST_CASE("projections of a flat companion ray wander") {
  const PresentationGraph& k33 = builtin("k33");
  RaySpec alpha = ray(k33, "", "x1 y1 x2 y2", 12);
  RaySpec beta = ray(k33, "", "x1 x2", 12);
  ProjectionCheck chk = bounded_projection_check(alpha, beta, 12);
  CHECK(chk.max_displacement >= 10);
}

TEST_CASE("identical unrollings are rejected as indistinguishable") {
  const PresentationGraph& ck = builtin("croke-kleiner");
  RaySpec alpha = ray(ck, "", "a d", 12);
  RaySpec beta = ray(ck, "a d", "a d", 12);
  CHECK_THROWS_AS(bounded_projection_check(alpha, beta, 12),
                  RaysIndistinguishable);
  RaySpec gamma = ray(ck, "", "a d a b", 12);
  CHECK_NOTHROW(bounded_projection_check(alpha, gamma, 12));
}

TEST_CASE("block decomposition of croke-kleiner words") {
  const PresentationGraph& ck = builtin("croke-kleiner");
  auto decompose = [&](const std::string& text) {
    std::vector<std::string> out;
    for (const BlockPiece& p : block_decomposition(ck, wtext(ck, text)))
      out.push_back(std::to_string(p.block) + ":" + wstr(ck, p.subword));
    return out;
  };
  CHECK(decompose("a b a") == std::vector<std::string>{"1:a b a"});
  CHECK(decompose("a d") == std::vector<std::string>{"1:a", "2:d"});
  CHECK(decompose("c a c d") == std::vector<std::string>{"1:c a c", "2:d"});
  CHECK(decompose("b c") == std::vector<std::string>{"1:b c"});
  CHECK(decompose("") == std::vector<std::string>{});
  CHECK(decompose("d b a") == std::vector<std::string>{"2:d b", "1:a"});

  CHECK_THROWS_AS(block_decomposition(ck, wtext(ck, "a a^-1")), NotGeodesic);
  CHECK_THROWS_AS(block_decomposition(builtin("hexagon"), Word{}),
                  GraphMismatch);
}

TEST_CASE("itinerary pinned examples") {
  const PresentationGraph& g1 = builtin("gamma1");
  auto itin = [&](const std::string& text) {
    return itinerary_tag(g1, itinerary(g1, wtext(g1, text)));
  };
  CHECK(itin("c1") == "G[]");
  CHECK(itin("c4") == "G[]");
  CHECK(itin("c4 d1") == "G[]O[]");
  CHECK(itin("c1 d1 c1 d1") == "G[]O[c1]G[c1 d1]O[c1 d1 c1]");
  CHECK(itinerary(g1, wtext(g1, "c1 d1 c1 d1")).length() == 4);
  CHECK(itinerary(g1, wtext(g1, "c1")).length() == 1);
  CHECK(itinerary(g1, wtext(g1, "c4 d1")).length() == 2);
  CHECK(itin("d1 c1") == "G[]O[]G[d1]");
  CHECK(itin("") == "G[]");
  CHECK(itin("d1 d1") == "G[]");
}

TEST_CASE("itineraries depend only on the element") {
  const PresentationGraph& g1 = builtin("gamma1");
  std::map<std::string, std::string> seen;
  Word w;
  int checked = 0;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth > 0) {
      std::string nf = wstr(g1, normal_form(g1, w));
      std::string tag = itinerary_tag(g1, itinerary(g1, w));
      auto [it, fresh] = seen.emplace(nf, tag);
      if (!fresh) {
        ++checked;
        if (it->second != tag) {
          CAPTURE(wstr(g1, w));
          REQUIRE(it->second == tag);
        }
      }
    }
    if (depth == 6) return;
    for (Letter l : g1.alphabet()) {
      w.push_back(l);
      self(self, depth + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);
  CHECK(checked > 100000);
}

TEST_CASE("itineraries alternate strictly") {
  const PresentationGraph& g1 = builtin("gamma1");
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    Word w;
    int len = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < len; ++i)
      w.push_back(g1.alphabet()[rng() % g1.alphabet().size()]);
    Itinerary it = itinerary(g1, w);
    REQUIRE_FALSE(it.vertices.empty());
    CHECK_FALSE(it.vertices.front().omega);
    CHECK(wstr(g1, it.vertices.front().key).empty());
    for (std::size_t i = 0; i + 1 < it.vertices.size(); ++i)
      CHECK(it.vertices[i].omega != it.vertices[i + 1].omega);
  }
}
