#include "badladder/hyperbolicity.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "badladder/errors.hpp"

namespace badladder {

namespace {

constexpr std::size_t kMaxExhaustiveVertices = 4096;
constexpr std::size_t kMaxTriples = 20'000'000;

// Certification policy for a Cayley ball: see certification_limit.
struct BallPolicy {
  const CayleyBall& ball;
  int pair_limit(VertexId a, VertexId b) const { return certification_limit(ball, a, b); }
  // A set distance D from x is exact if no path leaving the ball could be
  // shorter: such a path has length >= 2R+2-bd(x)-bd(z) for its endpoint z.
  bool set_distance_ok(VertexId x, int max_bd_in_set, int d) const {
    return d <= 2 * ball.radius() + 2 - ball.base_dist(x) - max_bd_in_set;
  }
  int base_dist(VertexId v) const { return ball.base_dist(v); }
};

struct ExactPolicy {
  int pair_limit(VertexId, VertexId) const { return std::numeric_limits<int>::max(); }
  bool set_distance_ok(VertexId, int, int) const { return true; }
  int base_dist(VertexId) const { return 0; }
};

template <NeighborGraph G, class Policy>
int triple_contribution(const G& g, const Policy& policy, const Triple& t, BfsField& field,
                        std::vector<VertexId> (&sides)[3], int (&lengths)[3]) {
  const VertexId ends[3][2] = {{t.u, t.v}, {t.v, t.w}, {t.w, t.u}};
  for (int i = 0; i < 3; ++i) {
    const auto [a, b] = ends[i];
    field.run(g, a, policy.pair_limit(a, b), b);
    const auto d = field.at(b);
    if (!d) {
      throw PreconditionError("triangle side " + std::to_string(a) + "-" + std::to_string(b) +
                              " has no certified distance");
    }
    lengths[i] = *d;
    sides[i] = backtrack_interval(g, field, b);
  }

  int worst = 0;
  std::vector<VertexId> others;
  for (int i = 0; i < 3; ++i) {
    others.clear();
    others.insert(others.end(), sides[(i + 1) % 3].begin(), sides[(i + 1) % 3].end());
    others.insert(others.end(), sides[(i + 2) % 3].begin(), sides[(i + 2) % 3].end());
    int max_bd = 0;
    for (VertexId z : others) max_bd = std::max(max_bd, policy.base_dist(z));
    // Each side's endpoints lie in the other two sides, so half its length suffices.
    field.run(g, others, (lengths[i] + 1) / 2);
    for (VertexId x : sides[i]) {
      const int d = field.at(x).value();
      if (!policy.set_distance_ok(x, max_bd, d)) {
        throw PreconditionError("distance from " + std::to_string(x) +
                                " to the opposite sides is not certified");
      }
      worst = std::max(worst, d);
    }
  }
  return worst;
}

template <NeighborGraph G, class Policy>
int slim_constant_impl(const G& g, const Policy& policy, const TriangleSample& sample) {
  BfsField field;
  std::vector<VertexId> sides[3];
  int lengths[3];
  int delta = 0;
  for (const Triple& t : sample.triples) {
    if (t.u >= g.vertex_count() || t.v >= g.vertex_count() || t.w >= g.vertex_count()) {
      throw PreconditionError("triangle vertex out of range");
    }
    delta = std::max(delta, triple_contribution(g, policy, t, field, sides, lengths));
  }
  return delta;
}

}  // namespace

TriangleSample exhaustive_triples(const std::vector<VertexId>& vertices) {
  const std::size_t n = vertices.size();
  if (n > 0 && n * (n + 1) * (n + 2) / 6 > kMaxTriples) {
    throw ResourceLimitError("exhaustive triangle sample over " + std::to_string(n) +
                             " vertices is too large; use random sampling");
  }
  TriangleSample sample;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = j; k < n; ++k) {
        sample.triples.push_back({vertices[i], vertices[j], vertices[k]});
      }
    }
  }
  return sample;
}

TriangleSample exhaustive_certified_triples(const CayleyBall& ball) {
  const std::size_t n = ball.vertex_count();
  if (n > kMaxExhaustiveVertices) {
    throw ResourceLimitError("exhaustive triangle sample needs a ball of at most " +
                             std::to_string(kMaxExhaustiveVertices) + " vertices, got " +
                             std::to_string(n) + "; use random sampling");
  }
  std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
  BfsField field;
  for (VertexId u = 0; u < n; ++u) {
    field.run(ball, u, 2 * ball.radius() + 1);
    for (VertexId v : field.reached()) {
      ok[u][v] = *field.at(v) <= certification_limit(ball, u, v);
    }
  }
  TriangleSample sample;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u; v < n; ++v) {
      if (!ok[u][v]) continue;
      for (VertexId w = v; w < n; ++w) {
        if (ok[v][w] && ok[u][w]) sample.triples.push_back({u, v, w});
        if (sample.triples.size() > kMaxTriples) {
          throw ResourceLimitError("exhaustive triangle sample is too large; use random sampling");
        }
      }
    }
  }
  return sample;
}

TriangleSample random_triples(const std::vector<VertexId>& vertices, std::size_t count,
                              std::uint64_t seed) {
  if (vertices.empty()) throw PreconditionError("no vertices to sample triangles from");
  TriangleSample sample;
  sample.mode = SampleMode::Random;
  sample.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const VertexId u = vertices[pick(rng)];
    const VertexId v = vertices[pick(rng)];
    const VertexId w = vertices[pick(rng)];
    sample.triples.push_back({u, v, w});
  }
  return sample;
}

std::vector<VertexId> inner_vertices(const CayleyBall& ball) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < ball.vertex_count(); ++v) {
    if (2 * ball.base_dist(v) <= ball.radius()) out.push_back(v);
  }
  return out;
}

int slim_constant(const CayleyBall& ball, const TriangleSample& sample) {
  return slim_constant_impl(ball, BallPolicy{ball}, sample);
}

int slim_constant(const SimpleGraph& graph, const TriangleSample& sample) {
  return slim_constant_impl(graph, ExactPolicy{}, sample);
}

std::string report_line(int delta_hat, const TriangleSample& sample) {
  return "delta_hat=" + std::to_string(delta_hat) +
         " triples=" + std::to_string(sample.triples.size()) +
         " mode=" + (sample.mode == SampleMode::Exhaustive ? "exhaustive" : "random") +
         " seed=" + (sample.seed ? std::to_string(*sample.seed) : "none");
}

}  // namespace badladder
