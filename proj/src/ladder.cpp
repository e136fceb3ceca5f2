#include "badladder/ladder.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <iterator>

#include "badladder/errors.hpp"

namespace badladder {

namespace {

bool is_side(Level l) { return l != Level::Mid; }

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

constexpr Level kLevels[] = {Level::Top, Level::Mid, Level::Bot};

}  // namespace

std::string to_string(Level level) {
  switch (level) {
    case Level::Top: return "TOP";
    case Level::Mid: return "MID";
    case Level::Bot: return "BOT";
  }
  return "?";
}

std::string to_string(LadderCoord c) { return to_string(c.level) + ":" + std::to_string(c.index); }

LadderCoord parse_coord(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError("ladder coordinate must look like LEVEL:index, got '" + std::string(text) + "'");
  }
  const std::string level = upper(text.substr(0, colon));
  LadderCoord c;
  if (level == "TOP") {
    c.level = Level::Top;
  } else if (level == "MID") {
    c.level = Level::Mid;
  } else if (level == "BOT") {
    c.level = Level::Bot;
  } else {
    throw UsageError("unknown ladder level '" + level + "' (expected TOP, MID or BOT)");
  }
  std::string_view num = text.substr(colon + 1);
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), c.index);
  if (num.empty() || ec != std::errc{} || ptr != num.data() + num.size()) {
    throw UsageError("bad ladder index in '" + std::string(text) + "'");
  }
  return c;
}

LadderEnd parse_end(std::string_view text) {
  if (text == "+" || text == "+inf" || text == "plus") return LadderEnd::Plus;
  if (text == "-" || text == "-inf" || text == "minus") return LadderEnd::Minus;
  throw UsageError("end must be '+' or '-', got '" + std::string(text) + "'");
}

std::string to_string(LadderEnd e) { return e == LadderEnd::Plus ? "+inf" : "-inf"; }

int ladder_distance(const LadderGraph& g, LadderCoord u, LadderCoord v) {
  if (!g.contains(u) || !g.contains(v)) {
    throw UsageError("ladder coordinate outside truncation [-" + std::to_string(g.truncation) +
                     ", " + std::to_string(g.truncation) + "]");
  }
  const int k = std::abs(u.index - v.index);
  if (u.level == v.level) {
    if (is_side(u.level) || g.cubulated) return k;
    return k == 0 ? 0 : k + 2;
  }
  if (is_side(u.level) && is_side(v.level)) return k + 2;
  return k + 1;
}

IndexWindow default_window(const LadderGraph& g, LadderEnd e) {
  const int reach = g.truncation - 2;
  return e == LadderEnd::Plus ? IndexWindow{0, reach} : IndexWindow{-reach, 0};
}

namespace {

std::vector<LadderCoord> bundle_for_targets(const LadderGraph& g, LadderCoord x, int target_index,
                                            IndexWindow window) {
  std::vector<LadderCoord> targets;
  for (Level l : kLevels) {
    if (l == Level::Mid && !g.cubulated) continue;
    targets.push_back({target_index, l});
  }
  std::vector<LadderCoord> out;
  for (int n = window.lo; n <= window.hi; ++n) {
    for (Level l : kLevels) {
      const LadderCoord w{n, l};
      const int dxw = ladder_distance(g, x, w);
      const bool on_geodesic = std::any_of(targets.begin(), targets.end(), [&](LadderCoord t) {
        return dxw + ladder_distance(g, w, t) == ladder_distance(g, x, t);
      });
      if (on_geodesic) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LadderCoord> ray_bundle_exact(const LadderGraph& g, LadderCoord x, LadderEnd e,
                                          IndexWindow window) {
  const int n = g.truncation;
  if (window.lo > window.hi) throw UsageError("empty ladder window");
  if (window.lo < -n + 2 || window.hi > n - 2) {
    throw UsageError("window [" + std::to_string(window.lo) + ", " + std::to_string(window.hi) +
                     "] violates the truncation margin of 2 below N=" + std::to_string(n));
  }
  if (!g.contains(x)) throw UsageError("source " + to_string(x) + " outside truncation");
  if (sign(e) * x.index >= n - 1) {
    throw UsageError("source " + to_string(x) + " does not lie before the targets at " +
                     to_string(e));
  }
  const auto near = bundle_for_targets(g, x, sign(e) * (n - 1), window);
  const auto far = bundle_for_targets(g, x, sign(e) * n, window);
  if (near != far) {
    throw AssertionFailure("ray bundle from " + to_string(x) +
                           " is not stable between target margins " + std::to_string(n - 1) +
                           " and " + std::to_string(n));
  }
  return far;
}

std::vector<LadderCoord> sym_diff_exact(const LadderGraph& g, LadderCoord x, LadderCoord y,
                                        LadderEnd e, IndexWindow window) {
  const auto bx = ray_bundle_exact(g, x, e, window);
  const auto by = ray_bundle_exact(g, y, e, window);
  std::vector<LadderCoord> out;
  std::set_symmetric_difference(bx.begin(), bx.end(), by.begin(), by.end(),
                                std::back_inserter(out));
  return out;
}

std::vector<std::pair<int, std::size_t>> sym_diff_growth(std::span<const LadderCoord> symdiff,
                                                         LadderEnd e, int n_max) {
  std::vector<std::pair<int, std::size_t>> rows;
  for (int n = 0; n <= n_max; ++n) {
    const auto count = std::count_if(symdiff.begin(), symdiff.end(), [&](LadderCoord c) {
      const int i = sign(e) * c.index;
      return 0 <= i && i <= n;
    });
    rows.emplace_back(n, static_cast<std::size_t>(count));
  }
  return rows;
}

VertexId FiniteLadder::vertex(LadderCoord c) const {
  const int n = static_cast<int>(coords.size() / 3 - 1) / 2;
  if (c.index < -n || c.index > n) return kNoVertex;
  return static_cast<VertexId>((c.index + n) * 3 + static_cast<int>(c.level));
}

FiniteLadder make_finite_ladder(const LadderGraph& g) {
  const int n = g.truncation;
  FiniteLadder out;
  for (int i = -n; i <= n; ++i) {
    for (Level l : kLevels) out.coords.push_back({i, l});
  }
  auto id = [&](int i, Level l) { return static_cast<VertexId>((i + n) * 3 + static_cast<int>(l)); };
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = -n; i <= n; ++i) {
    edges.emplace_back(id(i, Level::Top), id(i, Level::Mid));
    edges.emplace_back(id(i, Level::Mid), id(i, Level::Bot));
    if (i < n) {
      edges.emplace_back(id(i, Level::Top), id(i + 1, Level::Top));
      edges.emplace_back(id(i, Level::Bot), id(i + 1, Level::Bot));
      if (g.cubulated) edges.emplace_back(id(i, Level::Mid), id(i + 1, Level::Mid));
    }
  }
  out.graph = SimpleGraph(out.coords.size(), edges);
  return out;
}

}  // namespace badladder
