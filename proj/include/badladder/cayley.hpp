#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "badladder/graph.hpp"
#include "badladder/word.hpp"
#include "badladder/word_trie.hpp"

namespace badladder {

struct BallOptions {
  std::size_t vertex_cap = 50'000'000;
};

/// The radius-R ball around the identity in a Cayley graph. Vertex ids are
/// BFS discovery order (identity = 0) with generator order
/// a1, a1^-1, a2, a2^-1, ...; every vertex stores all 2k neighbour slots,
/// slot GenLetter::code(), holding kNoVertex where the neighbour lies
/// outside the ball.
class CayleyBall {
 public:
  int radius() const { return radius_; }
  std::size_t vertex_count() const { return element_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree() const { return degree_; }
  const PresentationSpec& presentation() const { return spec_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + std::size_t{v} * degree_, degree_};
  }
  VertexId neighbor(VertexId v, GenLetter a) const {
    return adjacency_[std::size_t{v} * degree_ + a.code()];
  }
  int base_dist(VertexId v) const { return base_dist_[v]; }

  NormalForm normal_form(VertexId v) const { return trie_.word(element_[v]); }
  std::optional<VertexId> find(const NormalForm& g) const;

  /// Left multiplication h*v, if the product lies in the ball.
  std::optional<VertexId> left_multiply(const NormalForm& h, VertexId v) const;

 private:
  friend CayleyBall build_ball(const PresentationSpec&, int, BallOptions);
  CayleyBall(PresentationSpec spec, int radius);

  PresentationSpec spec_;
  int radius_ = 0;
  std::size_t degree_ = 0;
  std::size_t edge_count_ = 0;
  WordTrie trie_;
  std::vector<ElementId> element_;     // vertex -> trie node
  std::vector<VertexId> vertex_of_;    // trie node -> vertex (or kNoVertex)
  std::vector<VertexId> adjacency_;
  std::vector<std::uint8_t> base_dist_;
};

/// Throws ResourceLimitError once the vertex count would exceed the cap,
/// UsageError for a negative radius or one above 120.
CayleyBall build_ball(const PresentationSpec& spec, int radius, BallOptions options = {});

/// A distance that is either provably the distance in the infinite graph or
/// explicitly NOT_CERTIFIED.
class DistanceCert {
 public:
  static DistanceCert certified(int d) { return DistanceCert(d); }
  static DistanceCert not_certified() { return DistanceCert(); }

  bool is_certified() const { return value_.has_value(); }
  /// Throws PreconditionError when not certified.
  int value() const;

  friend bool operator==(const DistanceCert&, const DistanceCert&) = default;

 private:
  DistanceCert() = default;
  explicit DistanceCert(int d) : value_(d) {}
  std::optional<int> value_;
};

/// Largest in-ball distance between u and v that is certified. A path that
/// leaves the ball passes base distance R+1, so it is at least
/// 2R+2-bd(u)-bd(v) long; anything shorter found inside is the true
/// distance and every true geodesic between u and v lies in the ball.
int certification_limit(const CayleyBall& ball, VertexId u, VertexId v);

DistanceCert distance(const CayleyBall& ball, VertexId u, VertexId v);
/// Variant reusing caller-owned BFS scratch.
DistanceCert distance(const CayleyBall& ball, VertexId u, VertexId v, BfsField& scratch);

/// {w : d(u,w) + d(w,v) = d(u,v)}, sorted. Throws PreconditionError unless
/// d(u,v) is certified.
std::vector<VertexId> interval(const CayleyBall& ball, VertexId u, VertexId v);
std::vector<VertexId> interval(const CayleyBall& ball, VertexId u, VertexId v, BfsField& scratch);

struct GeodesicEnumeration {
  /// Vertex sequences u = x0, x1, ..., xd = v; the path from u to u is {u}.
  std::vector<std::vector<VertexId>> paths;
  bool truncated = false;
};

/// All geodesic vertex paths from u to v in lexicographic order of vertex
/// ids. At most `cap` paths are returned; `truncated` is set when more
/// exist. Throws PreconditionError unless d(u,v) is certified, UsageError
/// for cap == 0.
GeodesicEnumeration enumerate_geodesics(const CayleyBall& ball, VertexId u, VertexId v,
                                        std::size_t cap);

/// `radius=R vertices=N` followed by one `src dst label` line per edge, each
/// edge listed once in its positive-label direction.
void write_ball(std::ostream& out, const CayleyBall& ball);

}  // namespace badladder
