#pragma once

#include <vector>

namespace ctk {

/// Maximum bipartite matching by augmenting paths (Kuhn).
struct BipartiteMatching {
  std::vector<int> left_mate;   ///< right vertex matched to each left vertex, or -1
  std::vector<int> right_mate;  ///< left vertex matched to each right vertex, or -1
  int size = 0;
};

/// `adjacency[l]` lists the right vertices adjacent to left vertex l. Left
/// vertices are processed in index order and neighbours in the listed order,
/// so the result is deterministic.
inline BipartiteMatching max_bipartite_matching(const std::vector<std::vector<int>>& adjacency,
                                                int right_count) {
  const int left_count = static_cast<int>(adjacency.size());
  BipartiteMatching m;
  m.left_mate.assign(left_count, -1);
  m.right_mate.assign(right_count, -1);
  std::vector<int> visited(right_count, -1);

  auto augment = [&](auto&& self, int l, int stamp) -> bool {
    for (int r : adjacency[l]) {
      if (visited[r] == stamp) continue;
      visited[r] = stamp;
      if (m.right_mate[r] < 0 || self(self, m.right_mate[r], stamp)) {
        m.left_mate[l] = r;
        m.right_mate[r] = l;
        return true;
      }
    }
    return false;
  };

  for (int l = 0; l < left_count; ++l)
    if (augment(augment, l, l)) ++m.size;
  return m;
}

}  // namespace ctk
