#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <limits>
#include <utility>
#include <vector>

namespace shapeavoid {

// Successive-shortest-path min-cost flow with Bellman-Ford (queue based)
// path search, so negative arc costs are allowed as long as the initial
// network has no negative cycle. Sized for the small DAGs built by the
// chain extractor.
class MinCostFlow {
 public:
  struct Arc {
    int to;
    int cap;
    long long cost;
    std::size_t rev;
  };

  explicit MinCostFlow(int nodes) : graph_(static_cast<std::size_t>(nodes)) {}

  // Returns a handle usable with flow_on().
  std::pair<int, std::size_t> add_arc(int from, int to, int cap, long long cost) {
    auto& out = graph_[static_cast<std::size_t>(from)];
    auto& in = graph_[static_cast<std::size_t>(to)];
    out.push_back({to, cap, cost, in.size()});
    in.push_back({from, 0, -cost, out.size() - 1});
    return {from, out.size() - 1};
  }

  struct Result {
    int flow = 0;
    long long cost = 0;
  };

  // Pushes up to max_flow units from source to sink. With
  // only_improving set, stops as soon as the cheapest augmenting path has
  // non-negative cost, which yields a min-cost flow over all flow values
  // up to max_flow.
  Result solve(int source, int sink, int max_flow, bool only_improving) {
    Result result;
    const std::size_t n = graph_.size();
    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    while (result.flow < max_flow) {
      std::vector<long long> dist(n, kInf);
      std::vector<int> prev_node(n, -1);
      std::vector<std::size_t> prev_arc(n, 0);
      std::vector<bool> queued(n, false);
      std::deque<int> queue;
      dist[static_cast<std::size_t>(source)] = 0;
      queue.push_back(source);
      queued[static_cast<std::size_t>(source)] = true;
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        queued[static_cast<std::size_t>(u)] = false;
        const auto& arcs = graph_[static_cast<std::size_t>(u)];
        for (std::size_t a = 0; a < arcs.size(); ++a) {
          const Arc& arc = arcs[a];
          if (arc.cap <= 0) continue;
          const long long nd = dist[static_cast<std::size_t>(u)] + arc.cost;
          const auto v = static_cast<std::size_t>(arc.to);
          if (nd < dist[v]) {
            dist[v] = nd;
            prev_node[v] = u;
            prev_arc[v] = a;
            if (!queued[v]) {
              queued[v] = true;
              queue.push_back(arc.to);
            }
          }
        }
      }
      const auto t = static_cast<std::size_t>(sink);
      if (dist[t] == kInf) break;
      if (only_improving && dist[t] >= 0) break;
      int push = max_flow - result.flow;
      for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
        const auto& arc = graph_[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])]
                                [prev_arc[static_cast<std::size_t>(v)]];
        push = std::min(push, arc.cap);
      }
      for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
        auto& arc = graph_[static_cast<std::size_t>(prev_node[static_cast<std::size_t>(v)])]
                          [prev_arc[static_cast<std::size_t>(v)]];
        arc.cap -= push;
        graph_[static_cast<std::size_t>(arc.to)][arc.rev].cap += push;
      }
      result.flow += push;
      result.cost += push * dist[t];
    }
    return result;
  }

  // Flow currently carried by an arc added with add_arc().
  int flow_on(std::pair<int, std::size_t> handle) const {
    const Arc& arc = graph_[static_cast<std::size_t>(handle.first)][handle.second];
    return graph_[static_cast<std::size_t>(arc.to)][arc.rev].cap;
  }

  const std::vector<Arc>& arcs(int node) const { return graph_[static_cast<std::size_t>(node)]; }

 private:
  std::vector<std::vector<Arc>> graph_;
};

}  // namespace shapeavoid
