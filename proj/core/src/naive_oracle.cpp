// Partition-enumeration minor oracle. Deliberately shares nothing with the
// backtracking engine: it walks every map V(g) -> {unused} + V(h) and checks
// the definition of an expansion on the Graph interface directly.

#include <vector>

#include "epw/minor.hpp"

namespace epw {
namespace {

bool class_connected(const Graph& g, const std::vector<int>& assign, int cls) {
  int start = -1;
  int size = 0;
  for (int v = 0; v < static_cast<int>(g.order()); ++v) {
    if (assign[static_cast<std::size_t>(v)] == cls) {
      ++size;
      if (start == -1) start = v;
    }
  }
  if (start == -1) return false;
  std::vector<bool> seen(g.order(), false);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)] && assign[static_cast<std::size_t>(w)] == cls) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == size;
}

bool is_expansion(const Graph& h, const Graph& g, const std::vector<int>& assign) {
  const int k = static_cast<int>(h.order());
  for (int x = 0; x < k; ++x) {
    if (!class_connected(g, assign, x)) return false;
  }
  for (const auto& he : h.edges()) {
    bool joined = false;
    for (const auto& ge : g.edges()) {
      const int a = assign[static_cast<std::size_t>(ge.u)];
      const int b = assign[static_cast<std::size_t>(ge.v)];
      if ((a == he.u && b == he.v) || (a == he.v && b == he.u)) {
        joined = true;
        break;
      }
    }
    if (!joined) return false;
  }
  return true;
}

}  // namespace

bool naive_is_minor_oracle(const Graph& h, const Graph& g) {
  if (g.order() > kNaiveOracleLimit) {
    throw GraphError("naive oracle is limited to hosts with at most " + std::to_string(kNaiveOracleLimit) + " vertices");
  }
  const int k = static_cast<int>(h.order());
  const int n = static_cast<int>(g.order());
  if (k == 0) return true;
  if (k > n) return false;

  // assign[v] in {-1, 0, ..., k-1}, enumerated as an odometer
  std::vector<int> assign(static_cast<std::size_t>(n), -1);
  while (true) {
    if (is_expansion(h, g, assign)) return true;
    int i = 0;
    while (i < n && assign[static_cast<std::size_t>(i)] == k - 1) {
      assign[static_cast<std::size_t>(i)] = -1;
      ++i;
    }
    if (i == n) return false;
    ++assign[static_cast<std::size_t>(i)];
  }
}

}  // namespace epw
