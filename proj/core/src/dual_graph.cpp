#include "logtorsor/dual_graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_map>

#include "logtorsor/error.hpp"

namespace logtorsor {

DualGraph::DualGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (std::set<std::string>(vertices_.begin(), vertices_.end()).size() != vertices_.size())
    throw Error(ErrorCode::InvalidGraph, "vertex labels are not distinct");
  for (auto& [a, b] : edges_) {
    if (a >= vertices_.size() || b >= vertices_.size())
      throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
}

DualGraph DualGraph::from_labels(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], i);
  std::vector<Edge> idx;
  idx.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw Error(ErrorCode::InvalidGraph,
                  "edge (" + a + ", " + b + ") names an unknown vertex");
    idx.emplace_back(ia->second, ib->second);
  }
  return DualGraph(std::move(vertices), std::move(idx));
}

DualGraph DualGraph::polygon(std::size_t d) {
  std::vector<std::string> v;
  std::vector<Edge> e;
  for (std::size_t i = 0; i < d; ++i) {
    v.push_back("V" + std::to_string(i));
    e.emplace_back(i, (i + 1) % d);
  }
  return DualGraph(std::move(v), std::move(e));
}

std::size_t DualGraph::connected_components() const {
  std::vector<std::size_t> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = vertices_.size();
  for (const auto& [a, b] : edges_) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --comps;
    }
  }
  return comps;
}

std::size_t betti1(const DualGraph& g) {
  return g.edge_count() + g.connected_components() - g.vertex_count();
}

namespace {

class CycleSearch {
 public:
  CycleSearch(const DualGraph& g, std::size_t cap)
      : cap_(cap), adj_(g.vertex_count()), visited_(g.vertex_count(), false) {
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [a, b] = edges[e];
      if (a == b) {
        emit({e});
        continue;
      }
      adj_[a].emplace_back(b, e);
      adj_[b].emplace_back(a, e);
    }
    for (start_ = 0; start_ < g.vertex_count(); ++start_) {
      visited_[start_] = true;
      extend(start_);
      visited_[start_] = false;
    }
  }

  std::vector<Cycle> take() && {
    for (auto& c : cycles_) std::sort(c.begin(), c.end());
    std::sort(cycles_.begin(), cycles_.end());
    return std::move(cycles_);
  }

 private:
  // Cycles are rooted at their smallest vertex; of the two traversal
  // directions only the one whose first edge index is below the closing
  // edge index is kept.
  void extend(std::size_t v) {
    for (const auto& [w, e] : adj_[v]) {
      if (w == start_) {
        if (!path_.empty() && path_.front() < e) {
          Cycle c = path_;
          c.push_back(e);
          emit(std::move(c));
        }
      } else if (w > start_ && !visited_[w]) {
        visited_[w] = true;
        path_.push_back(e);
        extend(w);
        path_.pop_back();
        visited_[w] = false;
      }
    }
  }

  void emit(Cycle c) {
    if (cycles_.size() >= cap_)
      throw Error(ErrorCode::CapExceeded,
                  "cycle enumeration exceeded cap of " + std::to_string(cap_));
    cycles_.push_back(std::move(c));
  }

  std::size_t cap_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
  std::vector<bool> visited_;
  std::vector<std::size_t> path_;
  std::size_t start_ = 0;
  std::vector<Cycle> cycles_;
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const DualGraph& g, std::size_t cap) {
  return CycleSearch(g, cap).take();
}

std::size_t c2(const DualGraph& g, std::size_t cap) {
  const auto cycles = enumerate_cycles(g, cap);
  if (cycles.empty()) return 0;

  const std::size_t words = (g.edge_count() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(cycles.size(),
                                               std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t e : cycles[i]) bits[i][e / 64] |= std::uint64_t{1} << (e % 64);

  std::size_t acc = 0;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i; j < cycles.size(); ++j) {
      std::size_t common = 0;
      for (std::size_t w = 0; w < words; ++w)
        common += static_cast<std::size_t>(std::popcount(bits[i][w] & bits[j][w]));
      acc = std::gcd(acc, common);
      if (acc == 1) return 1;
    }
  }
  return acc;
}

ChiodoResult chiodo_check(const DualGraph& g, long r, std::size_t cap) {
  if (r < 2) throw Error(ErrorCode::InvalidInput, "r must be >= 2");
  ChiodoResult res;
  res.b1 = betti1(g);
  res.c2 = c2(g, cap);
  const auto ur = static_cast<std::size_t>(r);
  res.holds = res.c2 == 0 ? res.b1 == 0 : res.c2 % ur == 0;
  if (res.holds) res.predicted = FiniteAbelianGroup::elementary(Integer(r), res.b1);
  return res;
}

IntersectionData graph_to_fiber(const DualGraph& g) {
  if (g.vertex_count() == 0 || !g.is_connected())
    throw Error(ErrorCode::DisconnectedGraph, "dual graph is not connected");
  const std::size_t r = g.vertex_count();
  IntersectionData f;
  f.labels = g.vertices();
  f.multiplicities.assign(r, Integer(1));
  f.matrix = IntMatrix(r, r);
  for (const auto& [a, b] : g.edges()) {
    if (a == b) continue;
    f.matrix(a, b) += 1;
    f.matrix(b, a) += 1;
    f.matrix(a, a) -= 1;
    f.matrix(b, b) -= 1;
  }
  return f;
}

}  // namespace logtorsor
