#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gpcx/builtins.hpp"
#include "gpcx/cayley.hpp"
#include "gpcx/divergence.hpp"
#include "gpcx/errors.hpp"
#include "gpcx/normal_form.hpp"
#include "gpcx/presentation.hpp"
#include "gpcx/rays.hpp"
#include "gpcx/walls.hpp"
#include "suites.hpp"

namespace {

using namespace gpcx;
using nlohmann::json;

struct Globals {
  bool as_json = false;
  std::string out_dir;
  uint64_t seed = 0;
};

std::string fixed4(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

// one owner per graph source; builtins are static, files are parsed here
struct GraphChoice {
  std::string builtin_name;
  std::string file;
  std::optional<PresentationGraph> owned;

  const PresentationGraph& resolve() {
    if (!builtin_name.empty()) return builtin(builtin_name);
    if (file.empty())
      throw CLI::RequiredError("--builtin NAME or --graph FILE");
    if (!owned) owned.emplace(parse_presentation_file(file));
    return *owned;
  }
};

void add_graph_options(CLI::App* sub, GraphChoice& gc) {
  std::string names;
  for (const std::string& n : builtin_names())
    names += (names.empty() ? "" : ", ") + n;
  sub->add_option("--builtin", gc.builtin_name, "built-in graph: " + names);
  sub->add_option("-g,--graph", gc.file, "presentation file (gen/rel lines)");
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

json verdict_json(const PresentationGraph& g, const SeparationVerdict& v) {
  json j;
  j["relation"] = relation_name(v.relation);
  j["count"] = v.crossing_both_count;
  j["search_radius"] = v.search_radius;
  j["radius_limited"] = v.radius_limited;
  if (v.certified_over_k)
    j["certified_over_k"] = *v.certified_over_k;
  else
    j["certified_over_k"] = nullptr;
  json wits = json::array();
  for (const Wall& w : v.witnesses)
    wits.push_back(
        {{"type", g.name(w.type())}, {"key", word_to_string(g, w.key())}});
  j["witnesses"] = wits;
  return j;
}

void emit(const Globals& gl, const json& j, const std::string& plain) {
  if (gl.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << plain << "\n";
}

RaySpec make_ray(const PresentationGraph& g, const std::string& prefix,
                 const std::string& period, int horizon) {
  return RaySpec(g, parse_word(g, prefix), parse_word(g, period), horizon);
}

void run_nf(const Globals& gl, GraphChoice& gc, const std::string& text) {
  const PresentationGraph& g = gc.resolve();
  Word w = parse_word(g, text);
  Word reduced = normal_form(g, w);
  emit(gl,
       json{{"input", text},
            {"normal_form", word_to_string(g, reduced)},
            {"length", reduced.size()},
            {"geodesic_input", is_geodesic(g, w)}},
       word_to_string(g, reduced));
}

void run_dist(const Globals& gl, GraphChoice& gc, const std::string& u,
              const std::string& v) {
  const PresentationGraph& g = gc.resolve();
  GroupElement a = GroupElement::from_word(g, parse_word(g, u));
  GroupElement b = GroupElement::from_word(g, parse_word(g, v));
  int d = distance(a, b);
  emit(gl, json{{"u", u}, {"v", v}, {"distance", d}}, std::to_string(d));
}

void run_walls(const Globals& gl, GraphChoice& gc, const std::string& text) {
  const PresentationGraph& g = gc.resolve();
  GeodesicPath path(GroupElement::identity(g), parse_word(g, text));
  std::vector<Wall> walls = walls_of_path(path);
  json rows = json::array();
  std::string plain;
  for (std::size_t i = 0; i < walls.size(); ++i) {
    rows.push_back({{"index", i},
                    {"type", g.name(walls[i].type())},
                    {"key", word_to_string(g, walls[i].key())}});
    plain += std::to_string(i) + " " + g.name(walls[i].type()) + " [" +
             word_to_string(g, walls[i].key()) + "]";
    if (i + 1 < walls.size()) plain += "\n";
  }
  emit(gl, json{{"word", text}, {"walls", rows}}, plain);
}

void run_sep(const Globals& gl, GraphChoice& gc, const std::string& text,
             int i, int j, int radius, int abort_over) {
  const PresentationGraph& g = gc.resolve();
  GeodesicPath path(GroupElement::identity(g), parse_word(g, text));
  std::vector<Wall> walls = walls_of_path(path);
  if (walls.size() < 2)
    throw IndexOutOfRange("need a word crossing at least two walls");
  if (j < 0) j = static_cast<int>(walls.size()) - 1;
  if (i < 0 || j <= i || j >= static_cast<int>(walls.size()))
    throw IndexOutOfRange("wall indices out of range");
  std::optional<int> abort;
  if (abort_over >= 0) abort = abort_over;
  SeparationVerdict v = separation(walls[i], walls[j], radius, abort);
  std::string plain = std::string(relation_name(v.relation)) +
                      " count=" + std::to_string(v.crossing_both_count) +
                      " radius=" + std::to_string(v.search_radius);
  if (v.radius_limited) plain += " radius_limited";
  if (v.certified_over_k)
    plain += " certified_over=" + std::to_string(*v.certified_over_k);
  json out = verdict_json(g, v);
  out["word"] = text;
  out["i"] = i;
  out["j"] = j;
  emit(gl, out, plain);
}

void run_detect(const Globals& gl, GraphChoice& gc, const std::string& prefix,
                const std::string& period, const DetectorParams& p) {
  const PresentationGraph& g = gc.resolve();
  RaySpec ray = make_ray(g, prefix, period, p.horizon);
  DetectionResult res = detect_contracting(ray, p);
  json j;
  j["prefix"] = prefix;
  j["period"] = period;
  j["params"] = {
      {"k", p.k}, {"r", p.r}, {"radius", p.radius}, {"horizon", p.horizon}};
  j["accepted"] = res.accepted;
  j["radius_limited"] = res.radius_limited;
  std::string plain;
  if (res.accepted) {
    const ContractionWitness& wit = *res.witness;
    std::string chain;
    for (std::size_t n = 0; n < wit.indices.size(); ++n)
      chain += (n ? ":" : "") + std::to_string(wit.indices[n]);
    json pairs = json::array();
    for (std::size_t n = 0; n + 1 < wit.indices.size(); ++n) {
      const SeparationVerdict& v = wit.pair_verdicts[n];
      pairs.push_back({{"i", wit.indices[n]},
                       {"j", wit.indices[n + 1]},
                       {"relation", relation_name(v.relation)},
                       {"count", v.crossing_both_count},
                       {"radius_limited", v.radius_limited}});
    }
    j["witness"] = {{"indices", wit.indices},
                    {"max_gap", wit.max_gap},
                    {"pairs", pairs}};
    j["window"] = nullptr;
    plain =
        "ACCEPT max_gap=" + std::to_string(wit.max_gap) + " chain=" + chain;
  } else {
    j["witness"] = nullptr;
    j["window"] = {{"begin", res.window->begin},
                   {"end", res.window->end},
                   {"width", res.window->width()}};
    plain = "REJECT window=[" + std::to_string(res.window->begin) + ":" +
            std::to_string(res.window->end) +
            "] width=" + std::to_string(res.window->width());
  }
  if (res.radius_limited) plain += " radius_limited";
  emit(gl, j, plain);
}

struct LdivArgs {
  std::string prefix;
  std::string period;
  int horizon = 40;
  int r = 0;
  int t = 0;
  int rmax = 0;
  std::size_t cap = kDefaultElementCap;
  std::string profile;  // "lo:hi" switches to profile mode
  int t_samples = 0;
};

std::pair<int, int> parse_range(const std::string& s) {
  auto colon = s.find(':');
  try {
    if (colon != std::string::npos)
      return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
  } catch (const std::logic_error&) {
  }
  throw ParseError(0, "radius range must look like 2:10, got " + s);
}

void run_ldiv(const Globals& gl, GraphChoice& gc, const LdivArgs& a) {
  const PresentationGraph& g = gc.resolve();
  RaySpec ray = make_ray(g, a.prefix, a.period, a.horizon);
  std::string ray_id =
      a.prefix.empty() ? a.period : a.prefix + " | " + a.period;
  if (a.profile.empty()) {
    if (a.r < 1) throw IndexOutOfRange("ldiv needs -r at least 1");
    int t = a.t > 0 ? a.t : a.r + 1;
    LdivResult res = ldiv_at(ray, a.r, t, a.rmax, a.cap);
    json j;
    j["ray"] = ray_id;
    j["r"] = a.r;
    j["t"] = t;
    j["search_bound"] = res.search_bound;
    j["infinite"] = res.infinite;
    j["explored"] = res.explored;
    if (res.infinite) {
      j["length"] = nullptr;
      j["witness"] = nullptr;
      emit(gl, j, "INFINITE search_bound=" + std::to_string(res.search_bound));
    } else {
      j["length"] = res.length;
      j["witness"] = word_to_string(g, res.witness);
      emit(gl, j, std::to_string(res.length));
    }
    return;
  }
  auto [lo, hi] = parse_range(a.profile);
  std::vector<int> radii;
  for (int r = lo; r <= hi; ++r) radii.push_back(r);
  DivergenceProfile prof =
      divergence_profile(ray, radii, a.t_samples, a.rmax, a.cap);
  if (gl.as_json) {
    json rows = json::array();
    for (const LdivRow& row : prof.rows) {
      json jr;
      jr["ray_id"] = ray_id;
      jr["r"] = row.r;
      jr["t_min"] = row.t_min;
      jr["ldiv"] =
          row.status == RowStatus::Finite ? json(row.value) : json(nullptr);
      jr["status"] = row.status == RowStatus::Finite     ? "FINITE"
                     : row.status == RowStatus::Infinite ? "INFINITE"
                                                         : "CAPPED";
      jr["infinite_flag"] = row.status == RowStatus::Infinite;
      jr["witness_length"] = row.witness.size();
      rows.push_back(jr);
    }
    json j;
    j["rows"] = rows;
    j["slope"] = prof.slope;
    j["classification"] = growth_name(prof.classification);
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "ray_id,r,t_min,ldiv,infinite_flag,witness_length\n";
  for (const LdivRow& row : prof.rows) {
    std::string ldiv =
        row.status == RowStatus::Finite ? std::to_string(row.value) : "-1";
    std::cout << ray_id << "," << row.r << "," << row.t_min << "," << ldiv
              << "," << (row.status == RowStatus::Infinite ? 1 : 0) << ","
              << row.witness.size() << "\n";
  }
  std::cout << "slope=" << fixed4(prof.slope)
            << " classification=" << growth_name(prof.classification) << "\n";
}

void run_slim(const Globals& gl, GraphChoice& gc, const std::string& prefix,
              const std::string& period, int horizon, int budget) {
  const PresentationGraph& g = gc.resolve();
  RaySpec ray = make_ray(g, prefix, period, horizon);
  SlimnessEstimate est = estimate_slimness(ray.path(horizon), budget,
                                           static_cast<uint32_t>(gl.seed));
  emit(gl,
       json{{"delta_i", est.delta_i},
            {"delta_ii", est.delta_ii},
            {"samples_i", est.samples_i.size()},
            {"samples_ii", est.samples_ii.size()}},
       "delta_i=" + std::to_string(est.delta_i) +
           " delta_ii=" + std::to_string(est.delta_ii));
}

void run_contract(const Globals& gl, GraphChoice& gc,
                  const std::string& prefix, const std::string& period,
                  int horizon, std::vector<int> radii, int budget) {
  const PresentationGraph& g = gc.resolve();
  RaySpec ray = make_ray(g, prefix, period, horizon);
  ContractionEstimate est = estimate_contraction(
      ray.path(horizon), radii, budget, static_cast<uint32_t>(gl.seed));
  json samples = json::array();
  for (const ContractionSample& s : est.samples)
    samples.push_back({{"center", word_to_string(g, s.center.nf())},
                       {"radius", s.radius},
                       {"diameter", s.diameter}});
  emit(gl, json{{"D_hat", est.D_hat}, {"samples", samples}},
       "D_hat=" + std::to_string(est.D_hat));
}

void run_itinerary(const Globals& gl, GraphChoice& gc,
                   const std::string& text) {
  const PresentationGraph& g = gc.resolve();
  Itinerary it = itinerary(g, parse_word(g, text));
  json rows = json::array();
  std::string tag;
  for (const ItineraryVertex& v : it.vertices) {
    rows.push_back({{"side", v.omega ? "omega" : "gamma"},
                    {"key", word_to_string(g, v.key)}});
    tag += v.omega ? "O[" : "G[";
    tag += word_to_string(g, v.key);
    tag += "]";
  }
  emit(gl, json{{"word", text}, {"vertices", rows}, {"length", it.length()}},
       tag + " length=" + std::to_string(it.length()));
}

void run_suite_cmd(const Globals& gl, const std::string& name) {
  suites::SuiteOutcome out = suites::run_suite(name, gl.seed);
  std::filesystem::path dir(gl.out_dir.empty() ? "." : gl.out_dir);
  std::filesystem::create_directories(dir);
  std::ofstream csv(dir / "results.csv", std::ios::binary);
  csv << out.results_csv;
  std::ofstream summary(dir / "summary.json", std::ios::binary);
  summary << out.summary_json;
  if (gl.as_json) {
    std::cout << out.summary_json;
    return;
  }
  json j = json::parse(out.summary_json);
  for (const json& c : j["claims"])
    std::cout << (c["status"] == "pass" ? "pass  " : "FAIL  ")
              << c["id"].get<std::string>() << "\n";
  std::cout << "suite " << name << ": "
            << (out.all_passed ? "all claims pass" : "some claims FAIL")
            << " (files in " << dir.string() << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "walls, rays, and divergence in graph products of cyclic groups"};
  app.require_subcommand(1);
  Globals gl;
  app.add_flag("--json", gl.as_json, "machine-readable output");
  app.add_option("--out", gl.out_dir, "output directory for suite files");
  app.add_option("--seed", gl.seed, "seed for sampled estimates");

  auto subcommand = [&app](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  GraphChoice gc;
  std::string word_text, u_text, v_text, prefix, period, suite_name;
  int sep_i = 0, sep_j = -1, radius = 6, abort_over = -1;
  DetectorParams det;
  LdivArgs ldiv;
  int horizon = 12, budget = 40;
  std::vector<int> radii = {2, 3};

  CLI::App* nf = subcommand("nf", "normal form of a word");
  add_graph_options(nf, gc);
  nf->add_option("-w,--word", word_text, "word to reduce")->required();
  nf->callback([&] { run_nf(gl, gc, word_text); });

  CLI::App* dist = subcommand("dist", "distance between two words");
  add_graph_options(dist, gc);
  dist->add_option("-u", u_text, "first word")->required();
  dist->add_option("-v", v_text, "second word")->required();
  dist->callback([&] { run_dist(gl, gc, u_text, v_text); });

  CLI::App* walls = subcommand("walls", "walls crossed by a word");
  add_graph_options(walls, gc);
  walls->add_option("-w,--word", word_text, "geodesic word")->required();
  walls->callback([&] { run_walls(gl, gc, word_text); });

  CLI::App* sep =
      subcommand("sep", "separation verdict for two walls of a word's path");
  add_graph_options(sep, gc);
  sep->add_option("-w,--word", word_text, "geodesic word")->required();
  sep->add_option("-i", sep_i, "first wall index (default 0)");
  sep->add_option("-j", sep_j, "second wall index (default last)");
  sep->add_option("--radius", radius, "search radius");
  sep->add_option("--abort-over", abort_over,
                  "stop once this many crossings are witnessed");
  sep->callback(
      [&] { run_sep(gl, gc, word_text, sep_i, sep_j, radius, abort_over); });

  CLI::App* detect =
      subcommand("detect", "contraction detector on a periodic ray");
  add_graph_options(detect, gc);
  detect->add_option("--prefix", prefix, "prefix word (default empty)");
  detect->add_option("--period", period, "period word")->required();
  detect->add_option("-k", det.k, "separation bound");
  detect->add_option("-r", det.r, "chain gap bound");
  detect->add_option("--radius", det.radius, "separation search radius");
  detect->add_option("--horizon", det.horizon, "positions to examine");
  detect->callback([&] { run_detect(gl, gc, prefix, period, det); });

  CLI::App* ld =
      subcommand("ldiv", "shortest detour around a deleted ball on a ray");
  add_graph_options(ld, gc);
  ld->add_option("--prefix", ldiv.prefix, "prefix word");
  ld->add_option("--period", ldiv.period, "period word")->required();
  ld->add_option("--horizon", ldiv.horizon, "ray horizon");
  ld->add_option("-r", ldiv.r, "deleted ball radius");
  ld->add_option("-t", ldiv.t, "center position (default r+1)");
  ld->add_option("--rmax", ldiv.rmax, "annulus outer radius (default r+2)");
  ld->add_option("--cap", ldiv.cap, "search element cap");
  ld->add_option("--profile", ldiv.profile,
                 "radius range lo:hi; emits the profile CSV");
  ld->add_option("--t-samples", ldiv.t_samples,
                 "window positions per radius (default all)");
  ld->callback([&] { run_ldiv(gl, gc, ldiv); });

  CLI::App* slim =
      subcommand("slim", "sampled thin-triangle constants of a ray");
  add_graph_options(slim, gc);
  slim->add_option("--prefix", prefix, "prefix word");
  slim->add_option("--period", period, "period word")->required();
  slim->add_option("--horizon", horizon, "ray horizon");
  slim->add_option("--budget", budget, "sample budget");
  slim->callback([&] { run_slim(gl, gc, prefix, period, horizon, budget); });

  CLI::App* contract = subcommand(
      "contract", "sampled projection diameters of balls off a ray");
  add_graph_options(contract, gc);
  contract->add_option("--prefix", prefix, "prefix word");
  contract->add_option("--period", period, "period word")->required();
  contract->add_option("--horizon", horizon, "ray horizon");
  contract->add_option("--radii", radii, "ball radii to sample");
  contract->add_option("--budget", budget, "sample budget");
  contract->callback(
      [&] { run_contract(gl, gc, prefix, period, horizon, radii, budget); });

  CLI::App* itin =
      subcommand("itinerary", "amalgam itinerary of a word (gamma1 graph)");
  add_graph_options(itin, gc);
  itin->add_option("-w,--word", word_text, "word")->required();
  itin->callback([&] { run_itinerary(gl, gc, word_text); });

  CLI::App* suite = subcommand("suite", "run an experiment suite");
  suite->add_option("name", suite_name,
                    "one of: hexagon, k33, croke-kleiner, gamma1-vs-gamma2")
      ->required();
  suite->callback([&] { run_suite_cmd(gl, suite_name); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const gpcx::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidLetter& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
