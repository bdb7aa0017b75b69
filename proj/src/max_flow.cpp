#include "dyadic/max_flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "dyadic/error.hpp"

namespace dyadic {

MaxFlow::MaxFlow(int nodes) : adjacency_(static_cast<std::size_t>(nodes)) {
  if (nodes < 2) throw ValidationError("flow network needs at least two nodes");
}

int MaxFlow::add_edge(int from, int to, double capacity) {
  if (!(capacity >= 0.0) || !std::isfinite(capacity)) {
    throw ValidationError("edge capacity must be finite and non-negative");
  }
  auto& out = adjacency_[static_cast<std::size_t>(from)];
  auto& in = adjacency_[static_cast<std::size_t>(to)];
  out.push_back({to, static_cast<int>(in.size()), capacity});
  in.push_back({from, static_cast<int>(out.size()) - 1, 0.0});
  return static_cast<int>(out.size()) - 1;
}

bool MaxFlow::build_levels(int source, int sink, double threshold) {
  level_.assign(adjacency_.size(), -1);
  std::queue<int> frontier;
  level_[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (const Edge& e : adjacency_[static_cast<std::size_t>(u)]) {
      if (e.cap > threshold && level_[static_cast<std::size_t>(e.to)] < 0) {
        level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(u)] + 1;
        frontier.push(e.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

double MaxFlow::push(int node, int sink, double limit, double threshold) {
  if (node == sink) return limit;
  auto& edges = adjacency_[static_cast<std::size_t>(node)];
  for (std::size_t& i = cursor_[static_cast<std::size_t>(node)]; i < edges.size(); ++i) {
    Edge& e = edges[i];
    if (e.cap <= threshold ||
        level_[static_cast<std::size_t>(e.to)] != level_[static_cast<std::size_t>(node)] + 1) {
      continue;
    }
    const double pushed = push(e.to, sink, std::min(limit, e.cap), threshold);
    if (pushed > 0.0) {
      e.cap -= pushed;
      adjacency_[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.rev)].cap += pushed;
      return pushed;
    }
  }
  return 0.0;
}

double MaxFlow::solve(int source, int sink) {
  double max_cap = 0.0;
  for (const auto& edges : adjacency_) {
    for (const Edge& e : edges) max_cap = std::max(max_cap, e.cap);
  }
  epsilon_ = max_cap * 1e-15;
  double total = 0.0;
  // Scaling phases route large augmenting paths first; the last phase runs
  // at the numerical floor.
  for (double threshold = max_cap / 16.0;; threshold /= 16.0) {
    const double floor = std::max(threshold, epsilon_);
    while (build_levels(source, sink, floor)) {
      cursor_.assign(adjacency_.size(), 0);
      while (true) {
        const double pushed = push(source, sink, std::numeric_limits<double>::infinity(), floor);
        if (pushed <= 0.0) break;
        total += pushed;
      }
    }
    if (floor <= epsilon_) break;
  }
  return total;
}

std::vector<char> MaxFlow::source_side(int source) const {
  std::vector<char> seen(adjacency_.size(), 0);
  std::queue<int> frontier;
  seen[static_cast<std::size_t>(source)] = 1;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (const Edge& e : adjacency_[static_cast<std::size_t>(u)]) {
      if (e.cap > epsilon_ && !seen[static_cast<std::size_t>(e.to)]) {
        seen[static_cast<std::size_t>(e.to)] = 1;
        frontier.push(e.to);
      }
    }
  }
  return seen;
}

}  // namespace dyadic
