#include "npgadget/max_flow.h"

#include <algorithm>
#include <deque>
#include <limits>

namespace npgadget {

MaxFlowGraph::MaxFlowGraph(int num_nodes) : adjacency_(num_nodes) {}

int MaxFlowGraph::AddArc(int from, int to, int64_t capacity) {
  const int handle = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, 0, false});
  arcs_.push_back({from, 0, 0, false});
  adjacency_[from].push_back(handle);
  adjacency_[to].push_back(handle ^ 1);
  return handle;
}

void MaxFlowGraph::Freeze(int arc) {
  arcs_[arc].frozen = true;
  arcs_[arc ^ 1].frozen = true;
}

int64_t MaxFlowGraph::Augment(int s, int t) {
  if (s == t) return 0;
  int64_t total = 0;
  std::vector<int> via(num_nodes());
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    via[s] = -2;
    std::deque<int> queue{s};
    while (!queue.empty() && via[t] == -1) {
      const int x = queue.front();
      queue.pop_front();
      for (int arc : adjacency_[x]) {
        const int y = arcs_[arc].to;
        if (via[y] == -1 && Residual(arc) > 0) {
          via[y] = arc;
          queue.push_back(y);
        }
      }
    }
    if (via[t] == -1) return total;

    int64_t bottleneck = std::numeric_limits<int64_t>::max();
    for (int y = t; y != s; y = arcs_[via[y] ^ 1].to) {
      bottleneck = std::min(bottleneck, Residual(via[y]));
    }
    for (int y = t; y != s; y = arcs_[via[y] ^ 1].to) {
      arcs_[via[y]].flow += bottleneck;
      arcs_[via[y] ^ 1].flow -= bottleneck;
    }
    total += bottleneck;
  }
}

}  // namespace npgadget
