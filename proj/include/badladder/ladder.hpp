#pragma once

// Closed-form model of the bad ladder: two bi-infinite sides (TOP, BOT)
// joined at every integer index by a rung of length two whose midpoint is
// MID. The cubulated variant adds the midline edges MID_n -- MID_{n+1},
// splitting each hexagon into two unit squares.

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "badladder/graph.hpp"

namespace badladder {

enum class Level : std::uint8_t { Top, Mid, Bot };

struct LadderCoord {
  int index = 0;
  Level level = Level::Top;

  friend constexpr auto operator<=>(LadderCoord, LadderCoord) = default;
};

/// Parses `TOP:3`, `MID:-2`, `BOT:0` (case-insensitive level).
LadderCoord parse_coord(std::string_view text);
std::string to_string(LadderCoord c);
std::string to_string(Level level);

enum class LadderEnd : std::int8_t { Minus = -1, Plus = 1 };

constexpr int sign(LadderEnd e) { return static_cast<int>(e); }
LadderEnd parse_end(std::string_view text);  // "+", "-", "+inf", "-inf"
std::string to_string(LadderEnd e);

/// Closed index range [lo, hi].
struct IndexWindow {
  int lo = 0;
  int hi = 0;
  bool contains(int n) const { return lo <= n && n <= hi; }
};

/// The ladder truncated to indices [-truncation, truncation].
struct LadderGraph {
  int truncation = 1;
  bool cubulated = false;

  bool contains(LadderCoord c) const { return c.index >= -truncation && c.index <= truncation; }
};

/// Exact distance in the infinite ladder (which the truncation preserves).
/// Throws UsageError if either coordinate lies outside the truncation.
int ladder_distance(const LadderGraph& g, LadderCoord u, LadderCoord v);

/// Vertices lying on a geodesic ray from x to the end e, restricted to the
/// window. Rays are approximated by geodesics to the lane targets
/// {TOP, BOT, and MID if cubulated} at indices sign(e)*(N-1) and sign(e)*N;
/// the two target margins must give the same set (AssertionFailure
/// otherwise). The window must keep a margin of 2 from the truncation and x
/// must lie strictly before the targets (UsageError otherwise).
std::vector<LadderCoord> ray_bundle_exact(const LadderGraph& g, LadderCoord x, LadderEnd e,
                                          IndexWindow window);

/// Symmetric difference of the two exact bundles on the window, sorted.
std::vector<LadderCoord> sym_diff_exact(const LadderGraph& g, LadderCoord x, LadderCoord y,
                                        LadderEnd e, IndexWindow window);

/// Largest window allowed towards an end: [0, N-2] for +inf, [-(N-2), 0] for -inf.
IndexWindow default_window(const LadderGraph& g, LadderEnd e);

/// |symdiff| restricted to the growing windows [0, n] (or [-n, 0]),
/// n = 0..n_max, as (n, count) rows.
std::vector<std::pair<int, std::size_t>> sym_diff_growth(std::span<const LadderCoord> symdiff,
                                                         LadderEnd e, int n_max);

/// The truncated ladder as an explicit graph, for BFS cross-checks and the
/// hyperbolicity estimator. coords[v] names vertex v.
struct FiniteLadder {
  SimpleGraph graph;
  std::vector<LadderCoord> coords;

  VertexId vertex(LadderCoord c) const;
};

FiniteLadder make_finite_ladder(const LadderGraph& g);

}  // namespace badladder
