#include <doctest.h>

#include <map>
#include <queue>

#include "badladder/errors.hpp"
#include "badladder/ladder.hpp"

using namespace badladder;

namespace {

constexpr Level kLevels[] = {Level::Top, Level::Mid, Level::Bot};

LadderCoord top(int n) { return {n, Level::Top}; }
LadderCoord mid(int n) { return {n, Level::Mid}; }
LadderCoord bot(int n) { return {n, Level::Bot}; }

// Independent oracle: BFS on an explicitly enumerated truncated ladder.
std::vector<LadderCoord> oracle_neighbors(const LadderGraph& g, LadderCoord c) {
  std::vector<LadderCoord> out;
  auto add = [&](LadderCoord d) {
    if (g.contains(d)) out.push_back(d);
  };
  if (c.level != Level::Mid || g.cubulated) {
    add({c.index + 1, c.level});
    add({c.index - 1, c.level});
  }
  if (c.level == Level::Mid) {
    add(top(c.index));
    add(bot(c.index));
  } else {
    add(mid(c.index));
  }
  return out;
}

std::map<LadderCoord, int> oracle_bfs(const LadderGraph& g, LadderCoord src) {
  std::map<LadderCoord, int> dist{{src, 0}};
  std::queue<LadderCoord> queue;
  queue.push(src);
  while (!queue.empty()) {
    const LadderCoord c = queue.front();
    queue.pop();
    for (LadderCoord d : oracle_neighbors(g, c)) {
      if (dist.emplace(d, dist[c] + 1).second) queue.push(d);
    }
  }
  return dist;
}

// Brute force over the lane targets at one margin.
std::vector<LadderCoord> oracle_bundle(const LadderGraph& g, LadderCoord x, int target,
                                       IndexWindow w) {
  const auto dx = oracle_bfs(g, x);
  std::vector<LadderCoord> out;
  for (Level tl : kLevels) {
    if (tl == Level::Mid && !g.cubulated) continue;
    const LadderCoord t{target, tl};
    const auto dt = oracle_bfs(g, t);
    for (int n = w.lo; n <= w.hi; ++n) {
      for (Level l : kLevels) {
        const LadderCoord c{n, l};
        if (dx.at(c) + dt.at(c) == dx.at(t)) out.push_back(c);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LadderCoord> all_levels(int lo, int hi) {
  std::vector<LadderCoord> out;
  for (int n = lo; n <= hi; ++n) {
    for (Level l : kLevels) out.push_back({n, l});
  }
  return out;
}

}  // namespace

TEST_CASE("closed-form distances") {
  const LadderGraph plain{20, false}, cub{20, true};
  CHECK(ladder_distance(plain, top(0), top(7)) == 7);
  CHECK(ladder_distance(plain, top(0), bot(0)) == 2);
  CHECK(ladder_distance(plain, mid(0), mid(5)) == 7);
  CHECK(ladder_distance(cub, mid(0), mid(5)) == 5);
  CHECK(ladder_distance(plain, mid(3), mid(3)) == 0);
  CHECK_THROWS_AS(ladder_distance(plain, top(21), top(0)), UsageError);
}

TEST_CASE("closed form equals BFS on the truncated graph") {
  for (bool cubulated : {false, true}) {
    const LadderGraph g{9, cubulated};
    const auto coords = all_levels(-g.truncation + 2, g.truncation - 2);
    for (LadderCoord u : coords) {
      const auto dist = oracle_bfs(g, u);
      for (LadderCoord v : coords) CHECK(ladder_distance(g, u, v) == dist.at(v));
    }
  }
}

TEST_CASE("finite ladder graph matches the oracle adjacency") {
  for (bool cubulated : {false, true}) {
    const LadderGraph g{6, cubulated};
    const FiniteLadder f = make_finite_ladder(g);
    for (VertexId v = 0; v < f.coords.size(); ++v) {
      CHECK(f.vertex(f.coords[v]) == v);
      std::vector<LadderCoord> got;
      for (VertexId w : f.graph.neighbors(v)) got.push_back(f.coords[w]);
      auto want = oracle_neighbors(g, f.coords[v]);
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("bundles towards +inf") {
  const LadderGraph plain{24, false}, cub{24, true};
  const IndexWindow w{0, 20};

  CHECK(ray_bundle_exact(plain, top(0), LadderEnd::Plus, w) == all_levels(0, 20));

  std::vector<LadderCoord> from_mid{mid(0)};
  for (int n = 0; n <= 20; ++n) {
    from_mid.push_back(top(n));
    from_mid.push_back(bot(n));
  }
  std::sort(from_mid.begin(), from_mid.end());
  CHECK(ray_bundle_exact(plain, mid(0), LadderEnd::Plus, w) == from_mid);

  const auto cub_mid = ray_bundle_exact(cub, mid(0), LadderEnd::Plus, w);
  for (int n = 0; n <= 20; ++n) CHECK(std::binary_search(cub_mid.begin(), cub_mid.end(), mid(n)));
}

TEST_CASE("bundles agree with the brute-force target oracle") {
  for (bool cubulated : {false, true}) {
    const LadderGraph g{12, cubulated};
    for (LadderCoord x : {top(0), mid(0), bot(-3), mid(4), top(9)}) {
      for (LadderEnd e : {LadderEnd::Plus, LadderEnd::Minus}) {
        if (sign(e) * x.index >= g.truncation - 1) continue;
        const IndexWindow w = default_window(g, e);
        CHECK(ray_bundle_exact(g, x, e, w) == oracle_bundle(g, x, sign(e) * g.truncation, w));
      }
    }
  }
}

TEST_CASE("symmetric difference grows by one per rung on the plain ladder") {
  const LadderGraph g{30, false};
  const auto diff = sym_diff_exact(g, top(0), mid(0), LadderEnd::Plus, {0, 26});
  std::vector<LadderCoord> mids;
  for (int n = 1; n <= 26; ++n) mids.push_back(mid(n));
  CHECK(diff == mids);
  const auto growth = sym_diff_growth(diff, LadderEnd::Plus, g.truncation - 4);
  for (auto [n, count] : growth) CHECK(count == static_cast<std::size_t>(n));
}

TEST_CASE("symmetric difference is bounded on the cubulated ladder") {
  // Oracle (tests/oracles/oracle.py): the two bundles coincide, so the constant is 0.
  for (int n : {10, 30, 60}) {
    const LadderGraph g{n, true};
    const IndexWindow w = default_window(g, LadderEnd::Plus);
    CHECK(sym_diff_exact(g, top(0), mid(0), LadderEnd::Plus, w).empty());
  }
}

TEST_CASE("end symmetry") {
  for (bool cubulated : {false, true}) {
    const LadderGraph g{15, cubulated};
    for (LadderCoord x : {top(0), mid(2), bot(-4)}) {
      const auto plus = ray_bundle_exact(g, x, LadderEnd::Plus, {-3, 13});
      auto minus = ray_bundle_exact(g, {-x.index, x.level}, LadderEnd::Minus, {-13, 3});
      for (auto& c : minus) c.index = -c.index;
      std::sort(minus.begin(), minus.end());
      CHECK(plus == minus);
    }
  }
}

TEST_CASE("x = y gives an empty difference") {
  CHECK(sym_diff_exact({10, false}, bot(1), bot(1), LadderEnd::Minus, {-8, 0}).empty());
}

TEST_CASE("margin violations") {
  const LadderGraph g{10, false};
  CHECK_THROWS_AS(ray_bundle_exact(g, top(0), LadderEnd::Plus, {0, 9}), UsageError);
  CHECK_THROWS_AS(ray_bundle_exact(g, top(0), LadderEnd::Plus, {-9, 0}), UsageError);
  CHECK_THROWS_AS(ray_bundle_exact(g, top(9), LadderEnd::Plus, {0, 8}), UsageError);
  CHECK_THROWS_AS(ray_bundle_exact(g, top(11), LadderEnd::Minus, {0, 8}), UsageError);
}

TEST_CASE("coordinate and end syntax") {
  CHECK(parse_coord("TOP:0") == top(0));
  CHECK(parse_coord("mid:-3") == mid(-3));
  CHECK(parse_coord("BOT:+2") == bot(2));
  CHECK(to_string(mid(-3)) == "MID:-3");
  CHECK_THROWS_AS(parse_coord("SIDE:1"), UsageError);
  CHECK_THROWS_AS(parse_coord("TOP"), UsageError);
  CHECK_THROWS_AS(parse_coord("TOP:x"), UsageError);
  CHECK(parse_end("+") == LadderEnd::Plus);
  CHECK(parse_end("-inf") == LadderEnd::Minus);
  CHECK_THROWS_AS(parse_end("0"), UsageError);
}
