#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gpcx/cayley.hpp"
#include "gpcx/normal_form.hpp"
#include "gpcx/presentation.hpp"
#include "gpcx/walls.hpp"

namespace gpcx {

// An eventually periodic ray from the identity, validated geodesic out to
// its horizon at construction.
class RaySpec {
 public:
  RaySpec(const PresentationGraph& g, Word prefix, Word period, int horizon);

  const PresentationGraph& graph() const { return *graph_; }
  const Word& prefix() const { return prefix_; }
  const Word& period() const { return period_; }
  int horizon() const { return horizon_; }

  // first `length` letters of prefix followed by repeated period
  Word unroll(int length) const;
  GeodesicPath path(int length) const;

 private:
  const PresentationGraph* graph_;
  Word prefix_;
  Word period_;
  int horizon_;
};

struct DetectorParams {
  int k = 0;
  int r = 2;       // consecutive crossing positions must differ by < r
  int radius = 6;  // separation search radius
  int horizon = 40;
};

struct ContractionWitness {
  // edge positions of the chained wall crossings, increasing
  std::vector<int> indices;
  // verdict for each consecutive pair, walls in the absolute frame
  std::vector<SeparationVerdict> pair_verdicts;
  int max_gap = 0;
};

// inclusive edge-position range no qualifying pair bridges
struct ObstructionWindow {
  int begin = 0;
  int end = 0;
  int width() const { return end - begin + 1; }
};

struct DetectionResult {
  bool accepted = false;
  // acceptance relied on counts that larger search radii could still raise
  bool radius_limited = false;
  std::optional<ContractionWitness> witness;
  std::optional<ObstructionWindow> window;
};

// Chains wall crossings along the ray: position j extends a chain from a
// reachable i when j - i < r and the walls at i and j are disjoint with at
// most k walls crossing both (searched within p.radius).  Accepts when a
// chain starting in the first r positions reaches the last r.
DetectionResult detect_contracting(const RaySpec& ray,
                                   const DetectorParams& p);

struct ContractionSample {
  GroupElement center;
  int radius = 0;
  int diameter = 0;  // of the projection of the whole ball onto the path
};

struct ContractionEstimate {
  int D_hat = 0;  // max sampled projection diameter
  std::vector<ContractionSample> samples;
};

// Samples ball centers off the path (d(center, path) > radius) and
// measures how long a segment each ball projects to.  Deterministic for a
// fixed seed.
ContractionEstimate estimate_contraction(const GeodesicPath& path,
                                         std::vector<int> ball_radii,
                                         int sample_budget, uint32_t seed);

struct SlimnessSampleI {
  GroupElement x;
  GroupElement y;
  int value = 0;
};

struct SlimnessSampleII {
  GroupElement x;
  GroupElement y;
  GroupElement z;
  int value = 0;
};

struct SlimnessEstimate {
  // max over samples of d(projection of x, interval(x, y))
  int delta_i = 0;
  // max over samples of max_{w in [y,z] on the path} d(w, I(x,y) u I(x,z))
  int delta_ii = 0;
  std::vector<SlimnessSampleI> samples_i;
  std::vector<SlimnessSampleII> samples_ii;
};

SlimnessEstimate estimate_slimness(const GeodesicPath& path,
                                   int sample_budget, uint32_t seed);

struct ProjectionCheck {
  // displacement[t] = farthest vertex of project(alpha, beta(t)) from the
  // base vertex
  std::vector<int> displacements;
  int max_displacement = 0;
};

// Tracks how far along alpha the projection of beta wanders.  Throws
// RaysIndistinguishable when the unrollings agree to the horizon.
ProjectionCheck bounded_projection_check(const RaySpec& alpha,
                                         const RaySpec& beta, int horizon);

// One maximal run of letters inside a single vertex-group block of the
// croke-kleiner graph: 1 = <a,b,c>, 2 = <b,c,d>.
struct BlockPiece {
  int block = 1;
  Word subword;
};

// Greedy left-to-right factorization: a forces block 1, d forces block 2,
// b and c extend the current block (letters before the first forced letter
// attach to the first forced block; a word with no forced letter is one
// block-1 piece).  The graph must have generators named a, b, c, d.
std::vector<BlockPiece> block_decomposition(const PresentationGraph& g,
                                            const Word& w);

struct ItineraryVertex {
  bool omega = false;  // false: coset of <c1..c6>; true: coset of <c4..c6,d1..d3>
  Word key;            // canonical coset representative
};

// Alternating walk in the splitting tree, starting at the base vertex.
struct Itinerary {
  std::vector<ItineraryVertex> vertices;
  // cosets visited
  int length() const { return static_cast<int>(vertices.size()); }
};

// Factors w into maximal blocks lying in <c1..c6> or in <c4..c6,d1..d3>
// (shared c4..c6 letters extend the current block) and records the coset
// visited at each alternation.  Normal-form-equal words get equal
// itineraries.  The graph must have generators named c1..c6, d1..d3.
Itinerary itinerary(const PresentationGraph& g, const Word& w);

}  // namespace gpcx
