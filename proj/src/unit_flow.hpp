#pragma once

#include <deque>
#include <vector>

namespace conncert::detail {

// Small-capacity max-flow by BFS augmenting paths. Capacities are integers
// and every augmentation pushes one unit, which is fine while the answer is
// bounded by a vertex degree.
class UnitFlowNetwork {
 public:
  explicit UnitFlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  int nodes() const { return static_cast<int>(head_.size()); }

  void add_arc(int from, int to, int capacity, int reverse_capacity = 0) {
    push(from, to, capacity);
    push(to, from, reverse_capacity);
  }

  void reset() { residual_ = capacity_; }

  /// Max flow from s to t, stopping early once `limit` units are routed.
  int max_flow(int s, int t, int limit) {
    reset();
    int flow = 0;
    std::vector<int> via(head_.size());
    std::deque<int> queue;
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      via[static_cast<std::size_t>(s)] = -2;
      queue.assign(1, s);
      while (!queue.empty() && via[static_cast<std::size_t>(t)] == -1) {
        const int u = queue.front();
        queue.pop_front();
        for (int e = head_[static_cast<std::size_t>(u)]; e >= 0; e = next_[static_cast<std::size_t>(e)]) {
          const int w = to_[static_cast<std::size_t>(e)];
          if (residual_[static_cast<std::size_t>(e)] > 0 && via[static_cast<std::size_t>(w)] == -1) {
            via[static_cast<std::size_t>(w)] = e;
            queue.push_back(w);
          }
        }
      }
      if (via[static_cast<std::size_t>(t)] == -1) break;
      for (int v = t; v != s;) {
        const int e = via[static_cast<std::size_t>(v)];
        --residual_[static_cast<std::size_t>(e)];
        ++residual_[static_cast<std::size_t>(e ^ 1)];
        v = to_[static_cast<std::size_t>(e ^ 1)];
      }
      ++flow;
    }
    return flow;
  }

  /// Nodes reachable from s in the residual network of the last max_flow call.
  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int e = head_[static_cast<std::size_t>(u)]; e >= 0; e = next_[static_cast<std::size_t>(e)]) {
        const int w = to_[static_cast<std::size_t>(e)];
        if (residual_[static_cast<std::size_t>(e)] > 0 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  void push(int from, int to, int capacity) {
    to_.push_back(to);
    capacity_.push_back(capacity);
    residual_.push_back(capacity);
    next_.push_back(head_[static_cast<std::size_t>(from)]);
    head_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<int> capacity_;
  std::vector<int> residual_;
};

}  // namespace conncert::detail
