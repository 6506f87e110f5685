#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logtorsor/fiber.hpp"

namespace logtorsor {

/// Dual graph of a nodal special fiber: one vertex per component, one edge
/// per node. Loops and parallel edges are allowed.
class DualGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  DualGraph() = default;
  /// Throws Error(InvalidGraph) on duplicate labels or out-of-range endpoints.
  DualGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  static DualGraph from_labels(std::vector<std::string> vertices,
                               const std::vector<std::pair<std::string, std::string>>& edges);
  /// Cycle graph with d vertices "V0".."V{d-1}" and d edges.
  static DualGraph polygon(std::size_t d);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::size_t connected_components() const;
  bool is_connected() const { return connected_components() == 1; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// Sorted edge indices of a simple cycle.
using Cycle = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

std::size_t betti1(const DualGraph& g);

/// All simple cycles, each once, ordered lexicographically by edge indices.
/// Throws Error(CapExceeded) when more than `cap` cycles exist.
std::vector<Cycle> enumerate_cycles(const DualGraph& g, std::size_t cap = kDefaultCycleCap);

/// gcd of |C ∩ C'| over all pairs of cycles (C = C' included); 0 without cycles.
std::size_t c2(const DualGraph& g, std::size_t cap = kDefaultCycleCap);

struct ChiodoResult {
  bool holds = false;
  std::size_t b1 = 0;
  std::size_t c2 = 0;
  std::optional<FiniteAbelianGroup> predicted;  ///< (Z/r)^b1 when holds
};

/// Phi[r] ~ (Z/r)^b1 is predicted exactly when r | c2.
ChiodoResult chiodo_check(const DualGraph& g, long r, std::size_t cap = kDefaultCycleCap);

/// Intersection data of the semistable fiber with dual graph g: unit
/// multiplicities, off-diagonal entries count edges, loops contribute nothing.
/// Throws Error(DisconnectedGraph) unless g is connected.
IntersectionData graph_to_fiber(const DualGraph& g);

}  // namespace logtorsor
