#pragma once

// The pq-ladder through the identity inside a Cayley ball of
// <p,q,s | s^-2 p s^2 q>: TOP_n = p^n, MID_n = p^n s, BOT_n = p^n s^2, with
// TOP edges labelled p, BOT edges labelled q^-1 (towards +inf) and rung
// halves labelled s.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "badladder/cayley.hpp"
#include "badladder/ladder.hpp"

namespace badladder {

struct EmbeddedLadder {
  std::map<LadderCoord, VertexId> vertices;
  std::unordered_map<VertexId, LadderCoord> coords;
  VertexId base = 0;                // TOP_0
  std::size_t relator_loops = 0;    // relator loops walked and closed
  std::size_t skipped_loops = 0;    // loops leaving the ball

  std::optional<VertexId> vertex(LadderCoord c) const;
  std::optional<LadderCoord> coord(VertexId v) const;
  bool contains(VertexId v) const { return coords.contains(v); }
  std::size_t size() const { return vertices.size(); }
};

/// Finds every ladder coordinate whose normal form lies in the ball and
/// checks the labeled adjacencies and the relator loop at every TOP_n.
/// Throws StructuralError on any mismatch, or if the presentation lacks the
/// generators p, q, s over the free basis {p, s}.
EmbeddedLadder locate_ladder(const CayleyBall& ball);

struct ConvexityViolation {
  VertexId u, v, w;  // w lies on a u-v geodesic but off the ladder
  friend bool operator==(const ConvexityViolation&, const ConvexityViolation&) = default;
};

struct DistanceMismatch {
  VertexId u, v;
  int cayley;
  int ladder;
};

struct ConvexityReport {
  std::size_t pairs_checked = 0;
  std::size_t uncertified_pairs = 0;
  std::vector<ConvexityViolation> violations;
  /// Certified pairs whose Cayley distance differs from the ladder metric.
  std::vector<DistanceMismatch> distance_mismatches;

  bool convex() const { return violations.empty(); }
};

/// Exhaustive over unordered pairs of ladder vertices; uncertified pairs are
/// counted and skipped.
ConvexityReport check_convexity(const CayleyBall& ball, const EmbeddedLadder& ladder);

struct BundleMember {
  VertexId vertex;
  int distance;  // from the source
};

struct RayBundleReport {
  VertexId source = 0;
  LadderEnd end = LadderEnd::Plus;
  /// Target lanes {TOP, BOT} were taken at index sign*margin and sign*(margin-1).
  int margin = 0;
  /// Both margins agree on B_k(source) for every k <= certified_radius.
  int certified_radius = 0;
  /// Bundle within B_{certified_radius}(source), sorted by vertex id.
  std::vector<BundleMember> members;
  /// Members outside the embedded ladder; empty when the ladder is convex.
  std::vector<VertexId> off_ladder;

  /// Bundle within B_k(source), sorted.
  std::vector<VertexId> within(int k) const;
  bool contains(VertexId v) const;
};

/// Throws PreconditionError if x is not a ladder vertex or no two consecutive
/// certified target margins exist, AssertionFailure if the two margins
/// disagree.
RayBundleReport truncated_ray_bundle(const CayleyBall& ball, const EmbeddedLadder& ladder,
                                     VertexId x, LadderEnd e);

struct GrowthRow {
  int radius;
  std::size_t count;
  friend bool operator==(const GrowthRow&, const GrowthRow&) = default;
};

/// |(R(x) xor R(y)) n B_k| for k = 0..K, with B_k the radius-k ball around
/// the identity and K the largest radius inside both reports' certified
/// regions. Empty if there is no such k.
std::vector<GrowthRow> symdiff_growth(const CayleyBall& ball, const RayBundleReport& rx,
                                      const RayBundleReport& ry);
std::vector<GrowthRow> symdiff_growth(const CayleyBall& ball, const EmbeddedLadder& ladder,
                                      VertexId x, VertexId y, LadderEnd e);

struct CrossModelReport {
  std::size_t coords_compared = 0;
  std::size_t rows_compared = 0;
  std::vector<std::string> mismatches;
};

/// Compares both reports and the growth table with the closed-form
/// (non-cubulated) ladder model on the common certified region.
CrossModelReport compare_with_ladder_model(const CayleyBall& ball, const EmbeddedLadder& ladder,
                                           const RayBundleReport& rx, const RayBundleReport& ry,
                                           const std::vector<GrowthRow>& growth);

}  // namespace badladder
