#ifndef NPGADGET_MAX_FLOW_H_
#define NPGADGET_MAX_FLOW_H_

#include <cstdint>
#include <vector>

namespace npgadget {

// Residual network driven by shortest (BFS) augmenting paths. Arc handles
// returned by AddArc are stable; the paired reverse arc is handle ^ 1.
class MaxFlowGraph {
 public:
  explicit MaxFlowGraph(int num_nodes);

  int num_nodes() const { return static_cast<int>(adjacency_.size()); }
  int AddArc(int from, int to, int64_t capacity);

  // Pushes as much additional flow from s to t as the residual network
  // admits and returns the amount pushed.
  int64_t Augment(int s, int t);

  int64_t Flow(int arc) const { return arcs_[arc].flow; }
  int64_t Capacity(int arc) const { return arcs_[arc].capacity; }
  int From(int arc) const { return arcs_[arc ^ 1].to; }
  int To(int arc) const { return arcs_[arc].to; }

  // Removes the arc (and its reverse) from the residual network while
  // keeping the flow it currently carries.
  void Freeze(int arc);

 private:
  struct ResidualArc {
    int to;
    int64_t capacity;
    int64_t flow;
    bool frozen;
  };

  int64_t Residual(int arc) const {
    return arcs_[arc].frozen ? 0 : arcs_[arc].capacity - arcs_[arc].flow;
  }

  std::vector<ResidualArc> arcs_;
  std::vector<std::vector<int>> adjacency_;
};

}  // namespace npgadget

#endif  // NPGADGET_MAX_FLOW_H_
