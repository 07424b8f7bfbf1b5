#pragma once

#include <cstddef>
#include <vector>

#include "gpcx/cayley.hpp"
#include "gpcx/presentation.hpp"
#include "gpcx/rays.hpp"

namespace gpcx {

// Shortest detour around one deleted ball on a ray.  The search is
// confined to the closed annulus r <= d(center, .) <= search_bound, so a
// finite length is exact for detours inside the annulus and `infinite`
// certifies only that none fits there.
struct LdivResult {
  bool infinite = false;
  int length = 0;
  int search_bound = 0;
  std::size_t explored = 0;
  Word witness;  // edge letters from gamma(t-r) to gamma(t+r) when finite
};

// Length of the shortest path from gamma(t-r) to gamma(t+r) that avoids
// the open ball of radius r around gamma(t).  R_max = 0 picks r + 2:
// steps alternate between the r and r+1 shells, so that leaves a spare
// shell beyond the ones a hugging detour uses.  Requires 1 <= r < t and
// t + r <= horizon.  Throws ResourceLimit after visiting more than `cap`
// annulus elements.
LdivResult ldiv_at(const RaySpec& ray, int r, int t, int R_max = 0,
                   std::size_t cap = kDefaultElementCap);

enum class RowStatus { Finite, Infinite, Capped };

// One radius of a divergence profile, minimized over the sampled t.
struct LdivRow {
  int r = 0;
  RowStatus status = RowStatus::Capped;
  int value = 0;  // finite minimum, meaningful for Finite rows
  int t_min = 0;  // t attaining it; first sampled t otherwise
  int search_bound = 0;
  int finite_samples = 0;
  int infinite_samples = 0;
  int capped_samples = 0;
  Word witness;  // detour attaining the minimum
};

enum class Growth { NoDetour, Linear, Superlinear };

struct DivergenceProfile {
  std::vector<LdivRow> rows;
  double slope = 0.0;  // least-squares log-log fit over Finite rows
  double linear_threshold = 1.2;
  Growth classification = Growth::Linear;
};

// ldiv(r) over the given radii.  t runs over the first period of the ray
// past the prefix, plus every in-prefix offset; later t repeat those by
// periodicity.  t_samples = 0 keeps them all, otherwise only the first
// t_samples.  Rows whose every sample blew the cap are Capped: they stay
// out of the fit but are reported.  A row is Infinite only when every
// sampled t exhausted its annulus, and any such row classifies the ray
// NoDetour; otherwise the fitted slope against `linear_threshold` decides
// Linear versus Superlinear.
DivergenceProfile divergence_profile(const RaySpec& ray,
                                     std::vector<int> r_values,
                                     int t_samples = 0, int R_max = 0,
                                     std::size_t cap = kDefaultElementCap,
                                     double linear_threshold = 1.2);

// ldiv(r) against (r^2 / (2 D_hat) - D_hat) / 2, the quadratic lower
// bound for a D_hat-contracting ray with a multiplicative slack of 2
// folded in.  Nonpositive bounds pass trivially; Infinite rows pass;
// Capped rows are reported but not counted.
struct QuadraticBoundRow {
  int r = 0;
  RowStatus status = RowStatus::Capped;
  long long value = 0;
  double bound = 0.0;
  bool pass = false;
  bool counted = false;
};

struct QuadraticBoundReport {
  std::vector<QuadraticBoundRow> rows;
  double pass_fraction = 1.0;  // over counted rows, 1.0 when none
  int D_hat = 0;
};

QuadraticBoundReport quadratic_bound_check(const DivergenceProfile& profile,
                                           int D_hat);
QuadraticBoundReport quadratic_bound_check(const RaySpec& ray, int D_hat,
                                           std::vector<int> r_values,
                                           int t_samples = 0, int R_max = 0,
                                           std::size_t cap = kDefaultElementCap);

}  // namespace gpcx
