#include "badladder/graph.hpp"

namespace badladder {

SimpleGraph::SimpleGraph(std::size_t vertex_count,
                         std::span<const std::pair<VertexId, VertexId>> edges)
    : offsets_(vertex_count + 1, 0) {
  for (auto [a, b] : edges) {
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  for (std::size_t i = 0; i < vertex_count; ++i) offsets_[i + 1] += offsets_[i];
  targets_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [a, b] : edges) {
    targets_[fill[a]++] = b;
    targets_[fill[b]++] = a;
  }
}

}  // namespace badladder
