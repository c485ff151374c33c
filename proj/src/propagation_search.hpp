#pragma once

// Shared backtracking enumerator for tables defined by a pointwise law that
// forces one further entry from any two decided entries. Branches run over
// ascending candidate values and complete leaves are re-verified from
// scratch. The node counter is the number of attempted branch assignments,
// which depends only on the law, so the budget verdict is deterministic and
// independent of the thread schedule.

#include <algorithm>
#include <atomic>
#include <iterator>
#include <thread>
#include <utility>
#include <vector>

#include "rbcat/errors.hpp"
#include "rbcat/parallel.hpp"

namespace rbcat::detail {

// Law requirements:
//   int domain() const;                // table length
//   int branch_values() const;         // candidate count per undecided entry
//   std::pair<int,int> seed() const;   // forced root entry (index, value)
//   std::pair<int,int> step(const std::vector<int>& b, int x, int y) const;
//     // for decided entries x, y: the forced entry (target index, value)
//   bool admits(const std::vector<int>& b) const;  // full re-check at a leaf
template <typename Law>
class PropagationSearch {
 public:
  PropagationSearch(const Law& law, long long budget)
      : law_(law), budget_(budget) {}

  std::vector<std::vector<int>> run() {
    State root;
    root.b.assign(law_.domain(), -1);
    const auto [sx, sv] = law_.seed();
    if (!assign(root, sx, sv)) return {};
    std::vector<std::vector<int>> out;
    const int at = first_undecided(root);
    if (at < 0) {
      finish(root, out);
      return out;
    }
    const int nv = law_.branch_values();
    std::vector<std::vector<std::vector<int>>> per(nv);
    const int workers = std::min(jobs(), nv);
    if (workers <= 1) {
      for (int v = 0; v < nv; ++v) dfs(root, at, v, per[v]);
    } else {
      std::atomic<int> next{0};
      std::atomic<bool> budget_hit{false};
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (;;) {
            const int v = next.fetch_add(1);
            if (v >= nv || budget_hit.load()) return;
            try {
              dfs(root, at, v, per[v]);
            } catch (const BudgetExceeded&) {
              budget_hit.store(true);
              return;
            }
          }
        });
      for (auto& t : pool) t.join();
      if (budget_hit.load()) throw BudgetExceeded(budget_);
    }
    for (auto& chunk : per)
      out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                 std::make_move_iterator(chunk.end()));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  struct State {
    std::vector<int> b;
    std::vector<int> decided;  // indices in decision order
  };

  void dfs(const State& base, int at, int value,
           std::vector<std::vector<int>>& out) const {
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_)
      throw BudgetExceeded(budget_);
    State st = base;
    if (!assign(st, at, value)) return;
    const int next = first_undecided(st);
    if (next < 0) {
      finish(st, out);
      return;
    }
    for (int v = 0; v < law_.branch_values(); ++v) dfs(st, next, v, out);
  }

  bool assign(State& st, int x, int v) const {
    if (st.b[x] >= 0) return st.b[x] == v;
    st.b[x] = v;
    st.decided.push_back(x);
    std::size_t head = st.decided.size() - 1;
    while (head < st.decided.size()) {
      const int f = st.decided[head++];
      for (std::size_t k = 0; k < st.decided.size(); ++k) {
        const int d = st.decided[k];
        if (!force(st, f, d) || !force(st, d, f)) return false;
      }
    }
    return true;
  }

  bool force(State& st, int x, int y) const {
    const auto [t, v] = law_.step(st.b, x, y);
    if (st.b[t] < 0) {
      st.b[t] = v;
      st.decided.push_back(t);
      return true;
    }
    return st.b[t] == v;
  }

  int first_undecided(const State& st) const {
    for (int i = 0; i < (int)st.b.size(); ++i)
      if (st.b[i] < 0) return i;
    return -1;
  }

  void finish(const State& st, std::vector<std::vector<int>>& out) const {
    if (!law_.admits(st.b))
      throw CheckError(Code::InvariantViolation,
                       "propagation admitted a non-solution leaf");
    out.push_back(st.b);
  }

  const Law& law_;
  long long budget_;
  mutable std::atomic<long long> nodes_{0};
};

template <typename Law>
std::vector<std::vector<int>> propagation_enumerate(const Law& law,
                                                    long long budget) {
  return PropagationSearch<Law>(law, budget).run();
}

}  // namespace rbcat::detail
