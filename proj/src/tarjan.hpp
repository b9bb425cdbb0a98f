#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace epset::detail {

// Output of an iterative Tarjan pass over an implicit graph.
//
// Components are numbered in completion order, which is a reverse
// topological order of the condensation. `order` lists vertices grouped by
// component in that same order.
struct SccResult {
  std::vector<std::uint32_t> component;
  std::vector<std::uint8_t> nontrivial;
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> first;  // component c occupies order[first[c], first[c+1])
  std::uint32_t count = 0;
};

inline constexpr std::uint32_t kNoVertex = std::numeric_limits<std::uint32_t>::max();

// Graph must provide num_vertices(), degree(v) and successor(v, i); a
// successor equal to kNoVertex is skipped.
template <class Graph>
SccResult tarjan(const Graph& g) {
  const std::uint32_t n = g.num_vertices();
  constexpr std::uint32_t kUnvisited = kNoVertex;
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<std::uint8_t> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  struct Frame {
    std::uint32_t v, next;
  };
  std::vector<Frame> frames;

  SccResult out;
  out.component.assign(n, 0);
  out.order.reserve(n);
  std::uint32_t counter = 0;

  auto visit = [&](std::uint32_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    frames.push_back({v, 0});
  };

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    visit(root);
    while (!frames.empty()) {
      const std::uint32_t v = frames.back().v;
      if (frames.back().next < g.degree(v)) {
        const std::uint32_t w = g.successor(v, frames.back().next++);
        if (w == kNoVertex) continue;
        if (index[w] == kUnvisited) {
          visit(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      frames.pop_back();
      if (!frames.empty()) {
        std::uint32_t parent = frames.back().v;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] != index[v]) continue;

      out.first.push_back(static_cast<std::uint32_t>(out.order.size()));
      bool cyclic = false;
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        out.component[w] = out.count;
        out.order.push_back(w);
      } while (w != v);
      std::uint32_t size = static_cast<std::uint32_t>(out.order.size()) - out.first.back();
      if (size > 1) {
        cyclic = true;
      } else {
        for (std::uint32_t i = 0; i < g.degree(v) && !cyclic; ++i) cyclic = g.successor(v, i) == v;
      }
      out.nontrivial.push_back(cyclic ? 1 : 0);
      ++out.count;
    }
  }
  out.first.push_back(static_cast<std::uint32_t>(out.order.size()));
  return out;
}

}  // namespace epset::detail
