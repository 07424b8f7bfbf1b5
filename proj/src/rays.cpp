#include "gpcx/rays.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "gpcx/errors.hpp"

namespace gpcx {

RaySpec::RaySpec(const PresentationGraph& g, Word prefix, Word period,
                 int horizon)
    : graph_(&g), prefix_(std::move(prefix)), period_(std::move(period)),
      horizon_(horizon) {
  if (period_.empty()) throw IndexOutOfRange("ray period is empty");
  if (horizon_ < 1) throw IndexOutOfRange("ray horizon must be positive");
  Word u = unroll(horizon_);
  if (!is_geodesic(g, u))
    throw NotGeodesic("ray word is not geodesic out to its horizon");
}

Word RaySpec::unroll(int length) const {
  if (length < 0) throw IndexOutOfRange("negative unroll length");
  if (length > horizon_)
    throw HorizonExceeded("unroll past the validated horizon");
  Word out;
  out.reserve(static_cast<std::size_t>(length));
  for (std::size_t i = 0; i < static_cast<std::size_t>(length); ++i)
    out.push_back(i < prefix_.size()
                      ? prefix_[i]
                      : period_[(i - prefix_.size()) % period_.size()]);
  return out;
}

GeodesicPath RaySpec::path(int length) const {
  return GeodesicPath(GroupElement::identity(*graph_), unroll(length));
}

namespace {

constexpr int kStart = -1;
constexpr int kUnreached = -2;

std::string wall_pair_tag(const Wall& a, const Wall& b) {
  std::string s;
  auto add = [&s](const Wall& w) {
    s.push_back(static_cast<char>(w.type() + 1));
    for (Letter l : w.key()) {
      s.push_back(static_cast<char>(l.gen + 1));
      s.push_back(l.sign > 0 ? '+' : '-');
    }
    s.push_back('|');
  };
  add(a);
  add(b);
  return s;
}

Wall shift_wall(const GroupElement& by, const Wall& w) {
  const std::optional<WallSource>& src = w.source();
  return wall_of_edge(multiply(by, src->tail), src->letter);
}

}  // namespace

DetectionResult detect_contracting(const RaySpec& ray,
                                   const DetectorParams& p) {
  if (p.k < 0 || p.r < 1 || p.radius < 1)
    throw IndexOutOfRange("detector parameters out of range");
  if (p.horizon < 2 * p.r)
    throw HorizonTooSmall("detector horizon shorter than twice the gap bound");
  GeodesicPath path = ray.path(p.horizon);
  const Word& w = path.word();
  const int h = p.horizon;

  // Verdicts depend on the pair only up to translation, so queries are
  // keyed by the pair shifted to put the first edge at the identity.
  // Periodic rays then hit the cache for almost every pair.
  std::map<std::string, SeparationVerdict> memo;
  auto shifted_pair = [&](int i, int j) {
    GroupElement shift = inverse(path.vertex(i));
    Wall wi = wall_of_edge(GroupElement::identity(path.graph()), w[i]);
    Wall wj = wall_of_edge(multiply(shift, path.vertex(j)), w[j]);
    return std::make_pair(wi, wj);
  };
  auto pair_verdict = [&](int i, int j) -> const SeparationVerdict& {
    auto [wi, wj] = shifted_pair(i, j);
    std::string tag = wall_pair_tag(wi, wj);
    auto it = memo.find(tag);
    if (it == memo.end())
      it = memo.emplace(tag, separation(wi, wj, p.radius, p.k)).first;
    return it->second;
  };
  auto qualifies = [&](int i, int j) {
    const SeparationVerdict& v = pair_verdict(i, j);
    return v.relation == Relation::Disjoint && v.crossing_both_count <= p.k;
  };

  std::vector<int> parent(static_cast<std::size_t>(h), kUnreached);
  for (int j = 0; j < h; ++j) {
    if (j < p.r) {
      parent[j] = kStart;
      continue;
    }
    for (int i = j - 1; i >= 0 && i > j - p.r; --i) {
      if (parent[i] == kUnreached) continue;
      if (qualifies(i, j)) {
        parent[j] = i;
        break;
      }
    }
  }

  int target = -1;
  for (int j = h - 1; j >= h - p.r; --j)
    if (parent[j] != kUnreached) {
      target = j;
      break;
    }

  DetectionResult out;
  if (target >= 0) {
    out.accepted = true;
    ContractionWitness wit;
    for (int j = target; j != kStart; j = parent[j]) wit.indices.push_back(j);
    std::reverse(wit.indices.begin(), wit.indices.end());
    for (std::size_t t = 0; t + 1 < wit.indices.size(); ++t) {
      int i = wit.indices[t];
      int j = wit.indices[t + 1];
      SeparationVerdict v = pair_verdict(i, j);
      for (Wall& x : v.witnesses) x = shift_wall(path.vertex(i), x);
      wit.max_gap = std::max(wit.max_gap, j - i);
      out.radius_limited = out.radius_limited || v.radius_limited;
      wit.pair_verdicts.push_back(std::move(v));
    }
    out.witness = std::move(wit);
    return out;
  }

  // No chain.  A refuted pair is refuted for every radius (crossings and
  // over-count witnesses are exact), so the rejection stands as is.
  std::vector<char> bridged(static_cast<std::size_t>(h - 1), 0);
  for (int i = 0; i + 1 < h; ++i)
    for (int j = i + 1; j < h && j - i < p.r; ++j)
      if (qualifies(i, j))
        for (int x = i; x < j; ++x) bridged[static_cast<std::size_t>(x)] = 1;
  ObstructionWindow win;
  int run_begin = -1;
  for (int x = 0; x + 1 < h; ++x)
    if (!bridged[static_cast<std::size_t>(x)]) {
      run_begin = x;
      break;
    }
  if (run_begin >= 0) {
    int run_end = run_begin;
    while (run_end + 2 < h && !bridged[static_cast<std::size_t>(run_end + 1)])
      ++run_end;
    win.begin = run_begin;
    win.end = run_end + 1;
  } else {
    // every cut is bridged by some pair, but never from a reachable start;
    // report the window past the reachability frontier
    int frontier = -1;
    for (int j = 0; j < h; ++j)
      if (parent[j] != kUnreached) frontier = j;
    win.begin = frontier + 1;
    win.end = std::min(frontier + p.r, h - 1);
  }
  out.window = win;
  return out;
}

namespace {

Word random_offset(std::mt19937& rng, const std::vector<Letter>& alphabet,
                   int length) {
  Word out;
  out.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i)
    out.push_back(alphabet[rng() % alphabet.size()]);
  return out;
}

// grows `pool` with every projection of every element of `elements`
void collect_projections(const GeodesicPath& path,
                         const std::vector<GroupElement>& elements,
                         std::vector<GroupElement>& pool) {
  std::set<std::string> seen;
  for (const GroupElement& p : pool) seen.insert(word_to_string(path.graph(), p.nf()));
  for (const GroupElement& z : elements)
    for (const GroupElement& p : project(path, z))
      if (seen.insert(word_to_string(path.graph(), p.nf())).second)
        pool.push_back(p);
}

int set_diameter(const std::vector<GroupElement>& pts) {
  int best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::max(best, distance(pts[i], pts[j]));
  return best;
}

}  // namespace

ContractionEstimate estimate_contraction(const GeodesicPath& path,
                                         std::vector<int> ball_radii,
                                         int sample_budget, uint32_t seed) {
  if (ball_radii.empty() || sample_budget < 1)
    throw IndexOutOfRange("estimator needs radii and a positive budget");
  std::sort(ball_radii.begin(), ball_radii.end());
  ball_radii.erase(std::unique(ball_radii.begin(), ball_radii.end()),
                   ball_radii.end());
  if (ball_radii.front() < 1)
    throw IndexOutOfRange("ball radii must be positive");
  if (path.length() < 2 * ball_radii.back())
    throw IndexOutOfRange("path too short for the requested ball radii");

  const PresentationGraph& g = path.graph();
  std::vector<Letter> alphabet = g.alphabet();
  std::mt19937 rng(seed);
  ContractionEstimate est;
  for (int rho : ball_radii) {
    int found = 0;
    int attempts = 0;
    const int max_attempts = 60 * sample_budget;
    while (found < sample_budget && attempts < max_attempts) {
      ++attempts;
      int t = static_cast<int>(rng() % (path.vertex_count()));
      Word off = random_offset(rng, alphabet, rho + 1 + static_cast<int>(rng() % 3));
      GroupElement center = multiply(path.vertex(t), GroupElement::from_word(g, off));
      if (distance(center, path) <= rho) continue;
      Ball b = ball(center, rho);
      std::vector<GroupElement> shadow;
      collect_projections(path, b.elements, shadow);
      int diam = set_diameter(shadow);
      est.samples.push_back({center, rho, diam});
      est.D_hat = std::max(est.D_hat, diam);
      ++found;
    }
  }
  return est;
}

namespace {

int set_to_point_min(const std::vector<GroupElement>& set,
                     const GroupElement& x) {
  int best = -1;
  for (const GroupElement& z : set) {
    int d = distance(z, x);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

}  // namespace

SlimnessEstimate estimate_slimness(const GeodesicPath& path,
                                   int sample_budget, uint32_t seed) {
  if (sample_budget < 1) throw IndexOutOfRange("estimator needs a budget");
  const PresentationGraph& g = path.graph();
  std::vector<Letter> alphabet = g.alphabet();
  std::mt19937 rng(seed);
  SlimnessEstimate est;

  auto sample_off_path = [&]() {
    int t = static_cast<int>(rng() % path.vertex_count());
    Word off = random_offset(rng, alphabet, 1 + static_cast<int>(rng() % 5));
    return multiply(path.vertex(t), GroupElement::from_word(g, off));
  };

  for (int s = 0; s < sample_budget; ++s) {
    GroupElement x = sample_off_path();
    GroupElement y = path.vertex(static_cast<int>(rng() % path.vertex_count()));
    std::vector<GroupElement> proj = project(path, x);
    std::vector<GroupElement> seg = interval(x, y);
    int best = -1;
    for (const GroupElement& p : proj) {
      int d = set_to_point_min(seg, p);
      if (best < 0 || d < best) best = d;
    }
    est.samples_i.push_back({x, y, best});
    est.delta_i = std::max(est.delta_i, best);
  }

  for (int s = 0; s < sample_budget; ++s) {
    int t1 = static_cast<int>(rng() % path.vertex_count());
    int t2 = static_cast<int>(rng() % path.vertex_count());
    if (t1 > t2) std::swap(t1, t2);
    GroupElement x = sample_off_path();
    GroupElement y = path.vertex(t1);
    GroupElement z = path.vertex(t2);
    std::vector<GroupElement> sides = interval(x, y);
    for (const GroupElement& e : interval(x, z)) sides.push_back(e);
    int worst = 0;
    for (int t = t1; t <= t2; ++t)
      worst = std::max(worst, set_to_point_min(sides, path.vertex(t)));
    est.samples_ii.push_back({x, y, z, worst});
    est.delta_ii = std::max(est.delta_ii, worst);
  }
  return est;
}

ProjectionCheck bounded_projection_check(const RaySpec& alpha,
                                         const RaySpec& beta, int horizon) {
  if (&alpha.graph() != &beta.graph())
    throw GraphMismatch("rays live over different graphs");
  if (horizon < 1) throw IndexOutOfRange("projection horizon must be positive");
  Word wa = alpha.unroll(horizon);
  Word wb = beta.unroll(horizon);
  if (wa == wb)
    throw RaysIndistinguishable("rays agree out to the horizon");
  GeodesicPath pa(GroupElement::identity(alpha.graph()), wa);
  GeodesicPath pb(GroupElement::identity(beta.graph()), wb);
  ProjectionCheck out;
  out.displacements.reserve(static_cast<std::size_t>(horizon) + 1);
  for (int t = 0; t <= horizon; ++t) {
    int far = 0;
    for (const GroupElement& p : project(pa, pb.vertex(t)))
      far = std::max(far, p.length());
    out.displacements.push_back(far);
    out.max_displacement = std::max(out.max_displacement, far);
  }
  return out;
}

std::vector<BlockPiece> block_decomposition(const PresentationGraph& g,
                                            const Word& w) {
  int ia = g.find("a");
  int ib = g.find("b");
  int ic = g.find("c");
  int id = g.find("d");
  if (ia < 0 || ib < 0 || ic < 0 || id < 0)
    throw GraphMismatch("block decomposition needs generators a, b, c, d");
  for (Letter l : w)
    if (l.gen != ia && l.gen != ib && l.gen != ic && l.gen != id)
      throw InvalidLetter("letter outside the two blocks");
  if (!is_geodesic(g, w)) throw NotGeodesic("block decomposition input");

  std::vector<BlockPiece> out;
  Word pending;
  for (Letter l : w) {
    int forced = l.gen == ia ? 1 : l.gen == id ? 2 : 0;
    if (forced == 0) {
      if (out.empty())
        pending.push_back(l);
      else
        out.back().subword.push_back(l);
    } else if (!out.empty() && out.back().block == forced) {
      out.back().subword.push_back(l);
    } else {
      BlockPiece piece{forced, std::move(pending)};
      pending = {};
      piece.subword.push_back(l);
      out.push_back(std::move(piece));
    }
  }
  if (!pending.empty()) out.push_back(BlockPiece{1, std::move(pending)});
  return out;
}

Itinerary itinerary(const PresentationGraph& g, const Word& w) {
  int cs[6];
  int ds[3];
  uint64_t gamma_mask = 0;
  uint64_t omega_mask = 0;
  for (int i = 0; i < 6; ++i) {
    cs[i] = g.find("c" + std::to_string(i + 1));
    if (cs[i] < 0) throw GraphMismatch("itinerary needs generators c1..c6");
    gamma_mask |= uint64_t{1} << cs[i];
    if (i >= 3) omega_mask |= uint64_t{1} << cs[i];
  }
  for (int i = 0; i < 3; ++i) {
    ds[i] = g.find("d" + std::to_string(i + 1));
    if (ds[i] < 0) throw GraphMismatch("itinerary needs generators d1..d3");
    omega_mask |= uint64_t{1} << ds[i];
  }
  auto side = [&](Letter l) {
    // 1: only the hexagon factor, 2: only the product factor, 0: shared
    if (l.gen == cs[0] || l.gen == cs[1] || l.gen == cs[2]) return 1;
    if (l.gen == ds[0] || l.gen == ds[1] || l.gen == ds[2]) return 2;
    if (l.gen == cs[3] || l.gen == cs[4] || l.gen == cs[5]) return 0;
    throw InvalidLetter("letter outside the amalgam factors");
  };

  // The walk only depends on the element, so blocks are read off the
  // normal form (raw spellings of the identity would otherwise wobble).
  Word nf = normal_form(g, w);
  struct RawBlock {
    int side;
    Word letters;
  };
  std::vector<RawBlock> blocks;
  Word pending;
  for (Letter l : nf) {
    int s = side(l);
    if (s == 0) {
      if (blocks.empty())
        pending.push_back(l);
      else
        blocks.back().letters.push_back(l);
    } else if (!blocks.empty() && blocks.back().side == s) {
      blocks.back().letters.push_back(l);
    } else {
      RawBlock b{s, std::move(pending)};
      pending = {};
      b.letters.push_back(l);
      blocks.push_back(std::move(b));
    }
  }
  if (!pending.empty() && blocks.empty())
    blocks.push_back(RawBlock{1, std::move(pending)});

  Itinerary out;
  out.vertices.push_back(ItineraryVertex{false, {}});
  GroupElement acc = GroupElement::identity(g);
  int at = 1;
  for (const RawBlock& b : blocks) {
    if (b.side != at) {
      at = b.side;
      uint64_t mask = at == 1 ? gamma_mask : omega_mask;
      out.vertices.push_back(
          ItineraryVertex{at == 2, coset_representative(g, acc.nf(), mask)});
    }
    for (Letter l : b.letters) acc = multiply(acc, l);
  }
  return out;
}

}  // namespace gpcx
