#include "badladder/cayley.hpp"

#include <algorithm>
#include <string>

#include "badladder/errors.hpp"

namespace badladder {

CayleyBall::CayleyBall(PresentationSpec spec, int radius)
    : spec_(std::move(spec)),
      radius_(radius),
      degree_(2 * spec_.generator_count()),
      trie_(spec_.free_basis().size()) {}

std::optional<VertexId> CayleyBall::find(const NormalForm& g) const {
  const ElementId e = trie_.find(g);
  if (e == WordTrie::kAbsent || vertex_of_[e] == kNoVertex) return std::nullopt;
  return vertex_of_[e];
}

std::optional<VertexId> CayleyBall::left_multiply(const NormalForm& h, VertexId v) const {
  return find(multiply(h, normal_form(v)));
}

CayleyBall build_ball(const PresentationSpec& spec, int radius, BallOptions options) {
  if (radius < 0 || radius > 120) {
    throw UsageError("ball radius must lie in [0, 120], got " + std::to_string(radius));
  }
  CayleyBall ball(spec, radius);
  const std::size_t degree = ball.degree_;

  ball.element_.push_back(WordTrie::kIdentity);
  ball.base_dist_.push_back(0);
  ball.vertex_of_.assign(1, 0);

  for (VertexId v = 0; v < ball.element_.size(); ++v) {
    const int d = ball.base_dist_[v];
    for (std::size_t c = 0; c < degree; ++c) {
      const auto image = spec.image(GenLetter::from_code(static_cast<std::uint8_t>(c))).letters();
      VertexId w = kNoVertex;
      if (d < radius) {
        const ElementId e = ball.trie_.multiply(ball.element_[v], image);
        if (ball.vertex_of_.size() < ball.trie_.size()) {
          ball.vertex_of_.resize(ball.trie_.size(), kNoVertex);
        }
        w = ball.vertex_of_[e];
        if (w == kNoVertex) {
          if (ball.element_.size() >= options.vertex_cap) {
            throw ResourceLimitError("Cayley ball of radius " + std::to_string(radius) +
                                     " exceeds the vertex cap of " +
                                     std::to_string(options.vertex_cap) +
                                     "; lower the radius or raise the cap");
          }
          w = static_cast<VertexId>(ball.element_.size());
          ball.element_.push_back(e);
          ball.base_dist_.push_back(static_cast<std::uint8_t>(d + 1));
          ball.vertex_of_[e] = w;
        }
      } else {
        // The outer sphere: neighbours are either known vertices or outside.
        const ElementId e = ball.trie_.find_multiply(ball.element_[v], image);
        if (e != WordTrie::kAbsent) w = ball.vertex_of_[e];
      }
      ball.adjacency_.push_back(w);
      if (w != kNoVertex && c % 2 == 0) ++ball.edge_count_;
    }
  }
  return ball;
}

int DistanceCert::value() const {
  if (!value_) throw PreconditionError("distance is NOT_CERTIFIED");
  return *value_;
}

int certification_limit(const CayleyBall& ball, VertexId u, VertexId v) {
  return 2 * ball.radius() + 1 - ball.base_dist(u) - ball.base_dist(v);
}

DistanceCert distance(const CayleyBall& ball, VertexId u, VertexId v, BfsField& scratch) {
  scratch.run(ball, u, certification_limit(ball, u, v), v);
  const auto d = scratch.at(v);
  return d ? DistanceCert::certified(*d) : DistanceCert::not_certified();
}

DistanceCert distance(const CayleyBall& ball, VertexId u, VertexId v) {
  BfsField scratch;
  return distance(ball, u, v, scratch);
}

std::vector<VertexId> interval(const CayleyBall& ball, VertexId u, VertexId v,
                               BfsField& scratch) {
  if (!distance(ball, u, v, scratch).is_certified()) {
    throw PreconditionError("interval(" + std::to_string(u) + ", " + std::to_string(v) +
                            "): distance is not certified in the radius-" +
                            std::to_string(ball.radius()) + " ball");
  }
  return backtrack_interval(ball, scratch, v);
}

std::vector<VertexId> interval(const CayleyBall& ball, VertexId u, VertexId v) {
  BfsField scratch;
  return interval(ball, u, v, scratch);
}

namespace {

struct GeodesicWalker {
  const CayleyBall& ball;
  const BfsField& from_u;
  const BfsField& from_v;
  int total;
  std::size_t cap;
  GeodesicEnumeration& out;
  std::vector<VertexId> path;

  // Returns false once the cap has been exceeded.
  bool walk(VertexId cur) {
    path.push_back(cur);
    const int k = static_cast<int>(path.size()) - 1;
    bool keep_going = true;
    if (k == total) {
      if (out.paths.size() == cap) {
        out.truncated = true;
        keep_going = false;
      } else {
        out.paths.push_back(path);
      }
    } else {
      std::vector<VertexId> next;
      for (VertexId n : ball.neighbors(cur)) {
        if (n != kNoVertex && from_u.at(n) == k + 1 && from_v.at(n) == total - k - 1) {
          next.push_back(n);
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      for (VertexId n : next) {
        if (!walk(n)) {
          keep_going = false;
          break;
        }
      }
    }
    path.pop_back();
    return keep_going;
  }
};

}  // namespace

GeodesicEnumeration enumerate_geodesics(const CayleyBall& ball, VertexId u, VertexId v,
                                        std::size_t cap) {
  if (cap == 0) throw UsageError("geodesic enumeration cap must be positive");
  BfsField from_u;
  const DistanceCert d = distance(ball, u, v, from_u);
  if (!d.is_certified()) {
    throw PreconditionError("enumerate_geodesics: distance is not certified");
  }
  BfsField from_v;
  from_v.run(ball, v, d.value());

  GeodesicEnumeration out;
  GeodesicWalker walker{ball, from_u, from_v, d.value(), cap, out, {}};
  walker.walk(u);
  return out;
}

void write_ball(std::ostream& out, const CayleyBall& ball) {
  out << "radius=" << ball.radius() << " vertices=" << ball.vertex_count() << '\n';
  const auto& spec = ball.presentation();
  for (VertexId v = 0; v < ball.vertex_count(); ++v) {
    for (std::uint8_t g = 0; g < spec.generator_count(); ++g) {
      const VertexId w = ball.neighbor(v, GenLetter{g, false});
      if (w != kNoVertex) out << v << ' ' << w << ' ' << spec.cayley_generators()[g] << '\n';
    }
  }
}

}  // namespace badladder
