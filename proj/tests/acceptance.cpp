// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "badladder/bundle.hpp"
#include "badladder/errors.hpp"
#include "badladder/hyperbolicity.hpp"
#include "badladder/ladder.hpp"

using namespace badladder;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!r.pass) ++failures;
  std::printf("[%s] %d %s (%.2fs) %s\n", r.pass ? "PASS" : "FAIL", id, name, secs,
              r.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

const LadderCoord kTop0{0, Level::Top};
const LadderCoord kMid0{0, Level::Mid};

const CayleyBall& ball(int radius) {
  static std::map<int, CayleyBall> cache;
  auto it = cache.find(radius);
  if (it == cache.end()) it = cache.emplace(radius, build_ball(default_presentation(), radius)).first;
  return it->second;
}

const EmbeddedLadder& ladder(int radius) {
  static std::map<int, EmbeddedLadder> cache;
  auto it = cache.find(radius);
  if (it == cache.end()) it = cache.emplace(radius, locate_ladder(ball(radius))).first;
  return it->second;
}

Outcome plain_ladder_at_scale() {
  const auto start = Clock::now();
  const LadderGraph g{200, false};
  const auto diff = sym_diff_exact(g, kTop0, kMid0, LadderEnd::Plus, default_window(g, LadderEnd::Plus));
  const auto rows = sym_diff_growth(diff, LadderEnd::Plus, 196);
  const double secs = seconds_since(start);
  for (int n = 1; n <= 196; ++n) {
    if (rows[n].second != static_cast<std::size_t>(n)) {
      return {false, "count " + std::to_string(rows[n].second) + " at n=" + std::to_string(n)};
    }
  }
  for (const auto& c : diff) {
    if (c.level != Level::Mid || c.index < 1) return {false, "non-rung vertex " + to_string(c)};
  }
  return {secs < 1.0, "rung midpoints MID_1..MID_196, " + std::to_string(secs) + "s"};
}

Outcome cubulated_constant() {
  const auto start = Clock::now();
  std::set<std::size_t> constants;
  int n0_max = 0;
  for (int N : {50, 100, 200}) {
    const LadderGraph g{N, true};
    const auto diff = sym_diff_exact(g, kTop0, kMid0, LadderEnd::Plus, default_window(g, LadderEnd::Plus));
    const auto rows = sym_diff_growth(diff, LadderEnd::Plus, N - 4);
    const std::size_t last = rows.back().second;
    int n0 = static_cast<int>(rows.size()) - 1;
    while (n0 > 0 && rows[n0 - 1].second == last) --n0;
    n0_max = std::max(n0_max, n0);
    constants.insert(last);
  }
  const double secs = seconds_since(start);
  // The brute-force oracle gives an empty symmetric difference.
  const bool ok = constants == std::set<std::size_t>{0} && n0_max <= 4 && secs < 1.0;
  return {ok, "constant=" + std::to_string(*constants.begin()) + " n0=" + std::to_string(n0_max) +
                  " distinct_constants=" + std::to_string(constants.size())};
}

Outcome convexity(int radius, double budget) {
  const auto start = Clock::now();
  const auto& b = ball(radius);
  const auto& l = ladder(radius);
  const auto report = check_convexity(b, l);
  std::size_t off = 0;
  for (auto source : {kTop0, kMid0}) {
    const auto r = truncated_ray_bundle(b, l, *l.vertex(source), LadderEnd::Plus);
    off += r.off_ladder.size();
  }
  const double secs = seconds_since(start);
  const bool ok = report.convex() && report.distance_mismatches.empty() && off == 0 &&
                  report.pairs_checked > 0 && secs < budget;
  return {ok, "R=" + std::to_string(radius) + " vertices=" + std::to_string(b.vertex_count()) +
                  " pairs=" + std::to_string(report.pairs_checked) +
                  " uncertified=" + std::to_string(report.uncertified_pairs) +
                  " violations=" + std::to_string(report.violations.size()) +
                  " off_ladder=" + std::to_string(off) + " " + std::to_string(secs) + "s"};
}

Outcome growth_at_ten() {
  const auto& b = ball(10);
  const auto& l = ladder(10);
  const auto rx = truncated_ray_bundle(b, l, *l.vertex(kTop0), LadderEnd::Plus);
  const auto ry = truncated_ray_bundle(b, l, *l.vertex(kMid0), LadderEnd::Plus);
  const auto growth = symdiff_growth(b, rx, ry);
  const auto cross = compare_with_ladder_model(b, l, rx, ry, growth);
  std::string table;
  for (const auto& row : growth) table += (table.empty() ? "" : ",") + std::to_string(row.count);
  // Slope exactly one from some offset on, with at least three steps.
  std::size_t offset = growth.empty() ? 0 : growth.size() - 1;
  while (offset > 0 && growth[offset].count == growth[offset - 1].count + 1) --offset;
  const std::size_t steps = growth.empty() ? 0 : growth.size() - 1 - offset;
  const bool ok = growth.size() >= 2 && steps >= 3 && cross.mismatches.empty();
  return {ok, "counts=[" + table + "] offset=" + std::to_string(offset) +
                  " cross_model_mismatches=" + std::to_string(cross.mismatches.size())};
}

Outcome oracle_equivalence() {
  const auto& b = ball(8);
  std::mt19937_64 rng(20261015);
  std::vector<VertexId> pool;
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    if (b.base_dist(v) <= 5) pool.push_back(v);
  }
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  BfsField scratch;

  std::size_t pairs = 0, bad_pairs = 0;
  for (int tries = 0; pairs < 500 && tries < 100000; ++tries) {
    const VertexId u = pool[pick(rng)], v = pool[pick(rng)];
    if (!distance(b, u, v, scratch).is_certified()) continue;
    const auto en = enumerate_geodesics(b, u, v, 200000);
    if (en.truncated) continue;
    std::set<VertexId> seen;
    for (const auto& path : en.paths) seen.insert(path.begin(), path.end());
    const auto iv = interval(b, u, v, scratch);
    if (!std::equal(seen.begin(), seen.end(), iv.begin(), iv.end())) ++bad_pairs;
    ++pairs;
  }

  std::size_t triples = 0, bad_triples = 0;
  for (int tries = 0; triples < 500 && tries < 100000; ++tries) {
    const VertexId u = pool[pick(rng)], v = pool[pick(rng)], w = pool[pick(rng)];
    const auto uv = distance(b, u, v, scratch), vw = distance(b, v, w, scratch),
               uw = distance(b, u, w, scratch);
    if (!uv.is_certified() || !vw.is_certified() || !uw.is_certified()) continue;
    if (uw.value() > uv.value() + vw.value()) ++bad_triples;
    ++triples;
  }

  std::vector<VertexId> shifts;
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    if (b.base_dist(v) <= 2) shifts.push_back(v);
  }
  std::uniform_int_distribution<std::size_t> pick_shift(0, shifts.size() - 1);
  std::size_t isometries = 0, bad_isometries = 0;
  for (int tries = 0; isometries < 200 && tries < 100000; ++tries) {
    const auto h = b.normal_form(shifts[pick_shift(rng)]);
    const VertexId u = pool[pick(rng)], v = pool[pick(rng)];
    const auto hu = b.left_multiply(h, u), hv = b.left_multiply(h, v);
    if (!hu || !hv) continue;
    const auto d0 = distance(b, u, v, scratch), d1 = distance(b, *hu, *hv, scratch);
    if (!d0.is_certified() || !d1.is_certified()) continue;
    if (d0.value() != d1.value()) ++bad_isometries;
    ++isometries;
  }

  const bool ok = pairs >= 500 && triples >= 500 && isometries >= 200 && bad_pairs == 0 &&
                  bad_triples == 0 && bad_isometries == 0;
  return {ok, "pairs=" + std::to_string(pairs) + "/" + std::to_string(bad_pairs) +
                  " triples=" + std::to_string(triples) + "/" + std::to_string(bad_triples) +
                  " isometries=" + std::to_string(isometries) + "/" +
                  std::to_string(bad_isometries) + " (checked/failed)"};
}

Outcome tree_sanity() {
  const auto tree = build_ball(free_presentation(), 6);
  const auto small = build_ball(free_presentation(), 4);
  const auto sample = exhaustive_certified_triples(small);
  const int delta = slim_constant(small, sample);
  const bool ok = tree.vertex_count() == 1457 && tree.edge_count() == 1456 && delta == 0;
  return {ok, "vertices=" + std::to_string(tree.vertex_count()) +
                  " edges=" + std::to_string(tree.edge_count()) + " " + report_line(delta, sample)};
}

Outcome stabilization() {
  std::size_t reports = 0, skipped = 0;
  for (int N : {10, 50, 100, 200}) {
    for (bool cub : {false, true}) {
      const LadderGraph g{N, cub};
      for (LadderEnd e : {LadderEnd::Plus, LadderEnd::Minus}) {
        for (auto x : {kTop0, kMid0, LadderCoord{0, Level::Bot}}) {
          ray_bundle_exact(g, x, e, default_window(g, e));
          ++reports;
        }
      }
    }
  }
  for (int radius = 3; radius <= 10; ++radius) {
    const auto& b = ball(radius);
    const auto& l = ladder(radius);
    for (LadderEnd e : {LadderEnd::Plus, LadderEnd::Minus}) {
      for (auto x : {kTop0, kMid0, LadderCoord{0, Level::Bot}, LadderCoord{1, Level::Top}}) {
        const auto v = l.vertex(x);
        if (!v) continue;
        try {
          truncated_ray_bundle(b, l, *v, e);
          ++reports;
        } catch (const PreconditionError&) {
          ++skipped;  // no certified margin pair at this radius
        }
      }
    }
  }
  return {true, "reports=" + std::to_string(reports) + " uncertified_skipped=" + std::to_string(skipped)};
}

}  // namespace

int main() {
  criterion(1, "plain ladder: |symdiff n [0,n]| = n, N=200", plain_ladder_at_scale);
  criterion(2, "cubulated ladder: constant symmetric difference", cubulated_constant);
  criterion(3, "convexity and confinement, R=8", [] { return convexity(8, 60.0); });
  criterion(3, "convexity and confinement, R=10", [] { return convexity(10, 60.0); });
  criterion(4, "symdiff growth slope 1 at R=10, cross-model", growth_at_ten);
  criterion(5, "interval/enumeration, triangle inequality, isometry at R=8", oracle_equivalence);
  criterion(6, "free group tree sanity", tree_sanity);
  criterion(7, "two-margin stabilization at all tested sizes", stabilization);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
