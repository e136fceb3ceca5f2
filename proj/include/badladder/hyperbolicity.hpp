#pragma once

// Empirical slim-triangle constant. For a triple (u, v, w) the contribution
// is the largest distance from a point of one side's geodesic interval to
// the union of the other two intervals, maximised over the three sides.
// Using whole intervals covers every choice of geodesics at once.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "badladder/cayley.hpp"
#include "badladder/graph.hpp"

namespace badladder {

struct Triple {
  VertexId u, v, w;
};

enum class SampleMode { Exhaustive, Random };

struct TriangleSample {
  std::vector<Triple> triples;
  SampleMode mode = SampleMode::Exhaustive;
  std::optional<std::uint64_t> seed;
};

/// Every unordered triple (with repetition) drawn from `vertices`.
TriangleSample exhaustive_triples(const std::vector<VertexId>& vertices);

/// Every unordered triple of ball vertices whose three pairwise distances
/// are certified.
TriangleSample exhaustive_certified_triples(const CayleyBall& ball);

/// `count` triples drawn uniformly (mt19937_64, `seed`) from `vertices`.
TriangleSample random_triples(const std::vector<VertexId>& vertices, std::size_t count,
                              std::uint64_t seed);

/// Ball vertices with base distance <= R/2; all their pairwise distances
/// are certified.
std::vector<VertexId> inner_vertices(const CayleyBall& ball);

/// delta-hat over the sample. For a ball every distance used must be
/// certified (PreconditionError otherwise); a SimpleGraph is exact.
int slim_constant(const CayleyBall& ball, const TriangleSample& sample);
int slim_constant(const SimpleGraph& graph, const TriangleSample& sample);

/// `delta_hat=<int> triples=<n> mode=<exhaustive|random> seed=<seed|none>`
std::string report_line(int delta_hat, const TriangleSample& sample);

}  // namespace badladder
