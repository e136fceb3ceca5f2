#pragma once

// Small graph toolkit shared by the Cayley ball, the finite ladder and the
// hyperbolicity estimator: a CSR graph and a reusable breadth-first field.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace badladder {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// Anything with vertex_count() and neighbors(v) -> span<const VertexId>;
/// neighbour lists may contain kNoVertex placeholders, which are skipped.
template <class G>
concept NeighborGraph = requires(const G& g, VertexId v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.neighbors(v) } -> std::convertible_to<std::span<const VertexId>>;
};

/// Undirected graph in compressed adjacency form.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Builds from an undirected edge list; each pair is stored in both directions.
  SimpleGraph(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

/// Breadth-first distances from one or more sources, truncated at a depth.
/// The scratch arrays are reused between runs, so one instance per thread.
class BfsField {
 public:
  static constexpr std::uint16_t kUnreached = std::numeric_limits<std::uint16_t>::max();

  /// Runs BFS from `sources` up to `max_depth`. If `stop_at` is discovered the
  /// search stops early; every vertex closer than it has been labelled by then.
  template <NeighborGraph G>
  void run(const G& g, std::span<const VertexId> sources, int max_depth,
           VertexId stop_at = kNoVertex);

  template <NeighborGraph G>
  void run(const G& g, VertexId source, int max_depth, VertexId stop_at = kNoVertex) {
    run(g, std::span<const VertexId>(&source, 1), max_depth, stop_at);
  }

  std::optional<int> at(VertexId v) const {
    if (v >= dist_.size() || dist_[v] == kUnreached) return std::nullopt;
    return dist_[v];
  }
  /// Vertices reached by the last run, in nondecreasing distance.
  std::span<const VertexId> reached() const { return order_; }

 private:
  std::vector<std::uint16_t> dist_;
  std::vector<VertexId> order_;
};

/// All vertices on geodesics from the source of `from_source` to `target`,
/// sorted by id. `target` must have been reached by the field.
template <NeighborGraph G>
std::vector<VertexId> backtrack_interval(const G& g, const BfsField& from_source, VertexId target);

// ---------------------------------------------------------------------------

template <NeighborGraph G>
void BfsField::run(const G& g, std::span<const VertexId> sources, int max_depth,
                   VertexId stop_at) {
  if (dist_.size() != g.vertex_count()) {
    dist_.assign(g.vertex_count(), kUnreached);
  } else {
    for (VertexId v : order_) dist_[v] = kUnreached;
  }
  order_.clear();
  max_depth = std::min(max_depth, static_cast<int>(kUnreached) - 1);
  for (VertexId s : sources) {
    if (dist_[s] == kUnreached) {
      dist_[s] = 0;
      order_.push_back(s);
    }
    if (s == stop_at) return;
  }
  for (std::size_t head = 0; head < order_.size(); ++head) {
    const VertexId v = order_[head];
    const std::uint16_t dv = dist_[v];
    if (dv >= max_depth) break;
    for (VertexId w : g.neighbors(v)) {
      if (w == kNoVertex || dist_[w] != kUnreached) continue;
      dist_[w] = static_cast<std::uint16_t>(dv + 1);
      order_.push_back(w);
      if (w == stop_at) return;
    }
  }
}

template <NeighborGraph G>
std::vector<VertexId> backtrack_interval(const G& g, const BfsField& from_source, VertexId target) {
  const auto d = from_source.at(target);
  std::vector<VertexId> out{target};
  std::vector<VertexId> layer{target};
  std::vector<VertexId> next;
  for (int k = d.value(); k > 0; --k) {
    next.clear();
    for (VertexId w : layer) {
      for (VertexId n : g.neighbors(w)) {
        if (n != kNoVertex && from_source.at(n) == k - 1) next.push_back(n);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace badladder
