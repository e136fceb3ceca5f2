#include "badladder/bundle.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <set>

#include "badladder/errors.hpp"

namespace badladder {

std::optional<VertexId> EmbeddedLadder::vertex(LadderCoord c) const {
  auto it = vertices.find(c);
  if (it == vertices.end()) return std::nullopt;
  return it->second;
}

std::optional<LadderCoord> EmbeddedLadder::coord(VertexId v) const {
  auto it = coords.find(v);
  if (it == coords.end()) return std::nullopt;
  return it->second;
}

namespace {

struct LadderLetters {
  Letter p, s;
  GenLetter gp, gq, gs;
};

LadderLetters ladder_letters(const PresentationSpec& spec) {
  const auto bp = spec.basis_index("p");
  const auto bs = spec.basis_index("s");
  const auto gp = spec.generator_index("p");
  const auto gq = spec.generator_index("q");
  const auto gs = spec.generator_index("s");
  if (!bp || !bs || !gp || !gq || !gs) {
    throw StructuralError("pq-ladder needs generators p, q, s over the free basis {p, s}");
  }
  return {Letter{*bp, false}, Letter{*bs, false}, GenLetter{*gp, false}, GenLetter{*gq, false},
          GenLetter{*gs, false}};
}

// Stand-in for the infinite ladder; every ball index fits well inside.
LadderGraph reference_ladder(const CayleyBall& ball) {
  return LadderGraph{8 * ball.radius() + 16, false};
}

}  // namespace

EmbeddedLadder locate_ladder(const CayleyBall& ball) {
  const auto& spec = ball.presentation();
  const LadderLetters L = ladder_letters(spec);

  std::size_t longest_image = 1;
  for (std::uint8_t g = 0; g < spec.generator_count(); ++g) {
    longest_image = std::max(longest_image, spec.image(GenLetter{g, false}).length());
  }
  const int reach = static_cast<int>(longest_image) * ball.radius() + 2;

  EmbeddedLadder ladder;
  for (int n = -reach; n <= reach; ++n) {
    std::vector<Letter> word(static_cast<std::size_t>(std::abs(n)), n < 0 ? L.p.inverted() : L.p);
    for (Level level : {Level::Top, Level::Mid, Level::Bot}) {
      if (auto v = ball.find(free_reduce(word))) {
        ladder.vertices.emplace(LadderCoord{n, level}, *v);
        ladder.coords.emplace(*v, LadderCoord{n, level});
      }
      word.push_back(L.s);
    }
  }
  const auto base = ladder.vertex({0, Level::Top});
  if (!base || *base != 0) throw StructuralError("TOP_0 is not the identity vertex");
  ladder.base = *base;

  auto expect = [&](LadderCoord from, GenLetter label, LadderCoord to) {
    const auto u = ladder.vertex(from);
    if (!u) return;
    const VertexId want = ladder.vertex(to).value_or(kNoVertex);
    const VertexId got = ball.neighbor(*u, label);
    if (got != want) {
      throw StructuralError("ladder edge " + to_string(from) + " --" + spec.letter_name(label) +
                            "--> " + to_string(to) + " is missing from the ball");
    }
  };
  for (const auto& [c, v] : ladder.vertices) {
    const int n = c.index;
    switch (c.level) {
      case Level::Top:
        expect(c, L.gp, {n + 1, Level::Top});
        expect(c, L.gp.inverted(), {n - 1, Level::Top});
        expect(c, L.gs, {n, Level::Mid});
        break;
      case Level::Mid:
        expect(c, L.gs.inverted(), {n, Level::Top});
        expect(c, L.gs, {n, Level::Bot});
        break;
      case Level::Bot:
        expect(c, L.gq.inverted(), {n + 1, Level::Bot});
        expect(c, L.gq, {n - 1, Level::Bot});
        expect(c, L.gs.inverted(), {n, Level::Mid});
        break;
    }
  }

  // The relator s^-2 p s^2 q read from every TOP_n must close up.
  const GenLetter relator[] = {L.gs.inverted(), L.gs.inverted(), L.gp, L.gs, L.gs, L.gq};
  for (const auto& [c, v] : ladder.vertices) {
    if (c.level != Level::Top) continue;
    VertexId cur = v;
    for (GenLetter a : relator) {
      cur = ball.neighbor(cur, a);
      if (cur == kNoVertex) break;
    }
    if (cur == kNoVertex) {
      ++ladder.skipped_loops;
    } else if (cur != v) {
      throw StructuralError("relator loop at " + to_string(c) + " does not close");
    } else {
      ++ladder.relator_loops;
    }
  }
  return ladder;
}

ConvexityReport check_convexity(const CayleyBall& ball, const EmbeddedLadder& ladder) {
  const LadderGraph reference = reference_ladder(ball);
  std::vector<VertexId> members;
  members.reserve(ladder.size());
  for (const auto& [v, c] : ladder.coords) members.push_back(v);
  std::sort(members.begin(), members.end());

  ConvexityReport report;
  BfsField field;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const VertexId u = members[i];
    int depth = 0;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      depth = std::max(depth, certification_limit(ball, u, members[j]));
    }
    field.run(ball, u, depth);
    const LadderCoord cu = *ladder.coord(u);
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const VertexId v = members[j];
      const auto d = field.at(v);
      if (!d || *d > certification_limit(ball, u, v)) {
        ++report.uncertified_pairs;
        continue;
      }
      ++report.pairs_checked;
      for (VertexId w : backtrack_interval(ball, field, v)) {
        if (!ladder.contains(w)) report.violations.push_back({u, v, w});
      }
      const int expected = ladder_distance(reference, cu, *ladder.coord(v));
      if (*d != expected) report.distance_mismatches.push_back({u, v, *d, expected});
    }
  }
  return report;
}

std::vector<VertexId> RayBundleReport::within(int k) const {
  std::vector<VertexId> out;
  for (const auto& m : members) {
    if (m.distance <= k) out.push_back(m.vertex);
  }
  return out;
}

bool RayBundleReport::contains(VertexId v) const {
  auto it = std::lower_bound(members.begin(), members.end(), v,
                             [](const BundleMember& m, VertexId x) { return m.vertex < x; });
  return it != members.end() && it->vertex == v;
}

namespace {

// Distances from x to both lanes at one margin, if all are certified.
std::optional<std::vector<VertexId>> certified_targets(const CayleyBall& ball,
                                                       const EmbeddedLadder& ladder,
                                                       const BfsField& field, VertexId x,
                                                       int index) {
  std::vector<VertexId> targets;
  for (Level level : {Level::Top, Level::Bot}) {
    const auto t = ladder.vertex({index, level});
    if (!t) return std::nullopt;
    const auto d = field.at(*t);
    if (!d || *d > certification_limit(ball, x, *t)) return std::nullopt;
    targets.push_back(*t);
  }
  return targets;
}

std::set<VertexId> interval_union(const CayleyBall& ball, const BfsField& field,
                                  const std::vector<VertexId>& targets, int k_max) {
  std::set<VertexId> out;
  for (VertexId t : targets) {
    for (VertexId w : backtrack_interval(ball, field, t)) {
      if (*field.at(w) <= k_max) out.insert(w);
    }
  }
  return out;
}

}  // namespace

RayBundleReport truncated_ray_bundle(const CayleyBall& ball, const EmbeddedLadder& ladder,
                                     VertexId x, LadderEnd e) {
  const auto cx = ladder.coord(x);
  if (!cx) {
    throw PreconditionError("ray bundle source " + std::to_string(x) + " is not a ladder vertex");
  }
  const int sgn = sign(e);

  BfsField field;
  field.run(ball, x, 2 * ball.radius() + 1 - ball.base_dist(x));

  int highest = 0;
  for (const auto& [c, v] : ladder.vertices) highest = std::max(highest, sgn * c.index);

  // Margins are measured as sgn * index; both must lie strictly past x.
  for (int m = highest; m - 1 > sgn * cx->index; --m) {
    const auto far = certified_targets(ball, ladder, field, x, sgn * m);
    if (!far) continue;
    const auto near = certified_targets(ball, ladder, field, x, sgn * (m - 1));
    if (!near) continue;

    int k_max = std::numeric_limits<int>::max();
    for (VertexId t : *near) k_max = std::min(k_max, *field.at(t));

    const auto far_set = interval_union(ball, field, *far, k_max);
    const auto near_set = interval_union(ball, field, *near, k_max);
    if (far_set != near_set) {
      throw AssertionFailure("ray bundle from " + to_string(*cx) + " towards " + to_string(e) +
                             " differs between target margins " + std::to_string(m) + " and " +
                             std::to_string(m - 1) + " within radius " + std::to_string(k_max));
    }

    RayBundleReport report;
    report.source = x;
    report.end = e;
    report.margin = m;
    report.certified_radius = k_max;
    for (VertexId w : far_set) {
      report.members.push_back({w, *field.at(w)});
      if (!ladder.contains(w)) report.off_ladder.push_back(w);
    }
    return report;
  }
  throw PreconditionError("no two consecutive certified target margins from " + to_string(*cx) +
                          " towards " + to_string(e) + " in the radius-" +
                          std::to_string(ball.radius()) + " ball; increase the radius");
}

std::vector<GrowthRow> symdiff_growth(const CayleyBall& ball, const RayBundleReport& rx,
                                      const RayBundleReport& ry) {
  const int top = std::min(rx.certified_radius - ball.base_dist(rx.source),
                           ry.certified_radius - ball.base_dist(ry.source));
  std::vector<VertexId> bx, by, diff;
  for (const auto& m : rx.members) bx.push_back(m.vertex);
  for (const auto& m : ry.members) by.push_back(m.vertex);
  std::set_symmetric_difference(bx.begin(), bx.end(), by.begin(), by.end(),
                                std::back_inserter(diff));
  std::vector<GrowthRow> rows;
  for (int k = 0; k <= top; ++k) {
    const auto count = std::count_if(diff.begin(), diff.end(),
                                     [&](VertexId w) { return ball.base_dist(w) <= k; });
    rows.push_back({k, static_cast<std::size_t>(count)});
  }
  return rows;
}

std::vector<GrowthRow> symdiff_growth(const CayleyBall& ball, const EmbeddedLadder& ladder,
                                      VertexId x, VertexId y, LadderEnd e) {
  return symdiff_growth(ball, truncated_ray_bundle(ball, ladder, x, e),
                        truncated_ray_bundle(ball, ladder, y, e));
}

CrossModelReport compare_with_ladder_model(const CayleyBall& ball, const EmbeddedLadder& ladder,
                                           const RayBundleReport& rx, const RayBundleReport& ry,
                                           const std::vector<GrowthRow>& growth) {
  CrossModelReport report;
  if (rx.end != ry.end) {
    report.mismatches.push_back("reports point at different ends");
    return report;
  }
  const LadderGraph model{ball.radius() + 4, false};
  const LadderCoord cx = ladder.coord(rx.source).value();
  const LadderCoord cy = ladder.coord(ry.source).value();
  const IndexWindow window = {-(model.truncation - 2), model.truncation - 2};
  const auto exact_x = ray_bundle_exact(model, cx, rx.end, window);
  const auto exact_y = ray_bundle_exact(model, cy, ry.end, window);
  const auto exact_diff = sym_diff_exact(model, cx, cy, rx.end, window);
  auto in = [](const std::vector<LadderCoord>& set, LadderCoord c) {
    return std::binary_search(set.begin(), set.end(), c);
  };

  for (VertexId v : rx.off_ladder) {
    report.mismatches.push_back("bundle member " + std::to_string(v) + " is off the ladder");
  }
  for (VertexId v : ry.off_ladder) {
    report.mismatches.push_back("bundle member " + std::to_string(v) + " is off the ladder");
  }

  const int top = growth.empty() ? -1 : growth.back().radius;
  for (const auto& [c, v] : ladder.vertices) {
    if (ball.base_dist(v) > top) continue;
    ++report.coords_compared;
    if (rx.contains(v) != in(exact_x, c)) {
      report.mismatches.push_back(to_string(c) + " membership in R(" + to_string(cx) +
                                  ") differs from the ladder model");
    }
    if (ry.contains(v) != in(exact_y, c)) {
      report.mismatches.push_back(to_string(c) + " membership in R(" + to_string(cy) +
                                  ") differs from the ladder model");
    }
  }

  const LadderCoord origin{0, Level::Top};
  for (const auto& row : growth) {
    ++report.rows_compared;
    const auto expected = std::count_if(exact_diff.begin(), exact_diff.end(), [&](LadderCoord c) {
      return ladder_distance(model, origin, c) <= row.radius;
    });
    if (row.count != static_cast<std::size_t>(expected)) {
      report.mismatches.push_back("growth row k=" + std::to_string(row.radius) + ": cayley " +
                                  std::to_string(row.count) + ", ladder model " +
                                  std::to_string(expected));
    }
  }
  return report;
}

}  // namespace badladder
