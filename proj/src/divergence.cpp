#include "gpcx/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <unordered_map>

#include "gpcx/errors.hpp"
#include "gpcx/normal_form.hpp"

namespace gpcx {

namespace {

Letter inverse_letter(const PresentationGraph& g, Letter l) {
  if (g.involution(l.gen)) return l;
  return Letter{l.gen, static_cast<int8_t>(-l.sign)};
}

// distance to the deleted ball's center and the letter that entered the
// state, enough to walk a shortest path backwards
struct SearchNode {
  int dist = 0;
  Letter via{0, 0};
};

}  // namespace

LdivResult ldiv_at(const RaySpec& ray, int r, int t, int R_max,
                   std::size_t cap) {
  const PresentationGraph& g = ray.graph();
  if (r < 1) throw IndexOutOfRange("ldiv radius must be at least 1");
  if (t <= r) throw IndexOutOfRange("ldiv needs t > r");
  if (R_max == 0) R_max = r + 2;
  if (R_max <= r) throw IndexOutOfRange("ldiv needs R_max > r");
  if (t + r > ray.horizon())
    throw HorizonExceeded("ldiv window reaches past the ray horizon");

  GeodesicPath path = ray.path(t + r);
  GroupElement center_inv = inverse(path.vertex(t));
  Word start = multiply(center_inv, path.vertex(t - r)).nf();
  Word target = multiply(center_inv, path.vertex(t + r)).nf();

  LdivResult out;
  out.search_bound = R_max;

  // breadth-first over normal forms of offsets from the center; the word
  // length of an offset is its distance to the center
  std::unordered_map<Word, SearchNode, WordHash> nodes;
  auto seed = nodes.emplace(start, SearchNode{}).first;
  std::deque<const Word*> frontier{&seed->first};
  int found = -1;
  while (!frontier.empty() && found < 0) {
    const Word& cur = *frontier.front();
    frontier.pop_front();
    int dist = nodes.at(cur).dist;
    for (Letter l : g.alphabet()) {
      Word next = cur;
      append_letter(g, next, l);
      if (static_cast<int>(next.size()) < r ||
          static_cast<int>(next.size()) > R_max)
        continue;
      auto ins = nodes.emplace(std::move(next), SearchNode{dist + 1, l});
      if (!ins.second) continue;
      if (nodes.size() > cap)
        throw ResourceLimit("ldiv search visited more than " +
                            std::to_string(cap) + " annulus elements");
      if (ins.first->first == target) {
        found = dist + 1;
        break;
      }
      frontier.push_back(&ins.first->first);
    }
  }
  out.explored = nodes.size();

  if (found < 0) {
    out.infinite = true;
    return out;
  }
  out.length = found;
  Word back = target;
  while (back != start) {
    SearchNode n = nodes.at(back);
    out.witness.push_back(n.via);
    append_letter(g, back, inverse_letter(g, n.via));
  }
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

namespace {

// every t with the window in the periodic tail repeats one of the first
// period_length of them under left translation, so those plus the
// in-prefix offsets cover all distinct windows
std::vector<int> sample_ts(const RaySpec& ray, int r, int t_samples) {
  int prefix = static_cast<int>(ray.prefix().size());
  int period = static_cast<int>(ray.period().size());
  std::vector<int> ts;
  int last = std::min(ray.horizon() - r, prefix + r + period);
  for (int t = r + 1; t <= last; ++t) {
    ts.push_back(t);
    if (t_samples > 0 && static_cast<int>(ts.size()) >= t_samples) break;
  }
  return ts;
}

}  // namespace

DivergenceProfile divergence_profile(const RaySpec& ray,
                                     std::vector<int> r_values, int t_samples,
                                     int R_max, std::size_t cap,
                                     double linear_threshold) {
  if (r_values.empty()) throw IndexOutOfRange("no radii to profile");
  std::sort(r_values.begin(), r_values.end());
  r_values.erase(std::unique(r_values.begin(), r_values.end()),
                 r_values.end());
  if (r_values.front() < 1) throw IndexOutOfRange("radii must be positive");
  if (2 * r_values.back() + 1 > ray.horizon())
    throw HorizonExceeded("profile radius needs horizon >= 2r + 1");

  DivergenceProfile out;
  out.linear_threshold = linear_threshold;
  for (int r : r_values) {
    LdivRow row;
    row.r = r;
    row.search_bound = R_max == 0 ? r + 2 : R_max;
    std::vector<int> ts = sample_ts(ray, r, t_samples);
    row.t_min = ts.front();
    for (int t : ts) {
      LdivResult one;
      try {
        one = ldiv_at(ray, r, t, R_max, cap);
      } catch (const ResourceLimit&) {
        ++row.capped_samples;
        continue;
      }
      if (one.infinite) {
        ++row.infinite_samples;
        continue;
      }
      if (row.finite_samples == 0 || one.length < row.value) {
        row.value = one.length;
        row.t_min = t;
        row.witness = one.witness;
      }
      ++row.finite_samples;
    }
    if (row.finite_samples > 0)
      row.status = RowStatus::Finite;
    else if (row.capped_samples == 0)
      row.status = RowStatus::Infinite;
    out.rows.push_back(std::move(row));
  }

  bool no_detour = false;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const LdivRow& row : out.rows) {
    if (row.status == RowStatus::Infinite) no_detour = true;
    if (row.status != RowStatus::Finite || row.value < 1) continue;
    double x = std::log(static_cast<double>(row.r));
    double y = std::log(static_cast<double>(row.value));
    sx += x, sy += y, sxx += x * x, sxy += x * y;
    ++n;
  }
  if (n >= 2 && sxx * n - sx * sx > 0)
    out.slope = (sxy * n - sx * sy) / (sxx * n - sx * sx);
  out.classification = no_detour ? Growth::NoDetour
                       : out.slope < linear_threshold ? Growth::Linear
                                                      : Growth::Superlinear;
  return out;
}

QuadraticBoundReport quadratic_bound_check(const DivergenceProfile& profile,
                                           int D_hat) {
  if (D_hat < 1) throw IndexOutOfRange("quadratic bound needs D_hat >= 1");
  QuadraticBoundReport out;
  out.D_hat = D_hat;
  int counted = 0, passed = 0;
  for (const LdivRow& row : profile.rows) {
    QuadraticBoundRow qr;
    qr.r = row.r;
    qr.status = row.status;
    qr.value = row.value;
    qr.bound =
        (static_cast<double>(row.r) * row.r / (2.0 * D_hat) - D_hat) / 2.0;
    if (row.status == RowStatus::Infinite) {
      qr.pass = true;
      qr.counted = true;
    } else if (row.status == RowStatus::Finite) {
      qr.pass = qr.bound <= 0.0 || static_cast<double>(row.value) >= qr.bound;
      qr.counted = true;
    }
    counted += qr.counted;
    passed += qr.counted && qr.pass;
    out.rows.push_back(qr);
  }
  if (counted > 0)
    out.pass_fraction = static_cast<double>(passed) / counted;
  return out;
}

QuadraticBoundReport quadratic_bound_check(const RaySpec& ray, int D_hat,
                                           std::vector<int> r_values,
                                           int t_samples, int R_max,
                                           std::size_t cap) {
  return quadratic_bound_check(
      divergence_profile(ray, std::move(r_values), t_samples, R_max, cap),
      D_hat);
}

}  // namespace gpcx
