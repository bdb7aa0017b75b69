#pragma once

#include <vector>

namespace dyadic {

/// Dinic max-flow on real capacities with capacity-scaling phases.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes);

  int add_edge(int from, int to, double capacity);
  double solve(int source, int sink);

  /// Nodes reachable from the source in the final residual graph (the
  /// source side of a minimum cut). Valid after solve().
  std::vector<char> source_side(int source) const;

  int nodes() const noexcept { return static_cast<int>(adjacency_.size()); }

 private:
  struct Edge {
    int to;
    int rev;
    double cap;
  };

  bool build_levels(int source, int sink, double threshold);
  double push(int node, int sink, double limit, double threshold);

  std::vector<std::vector<Edge>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  double epsilon_ = 0.0;
};

}  // namespace dyadic
