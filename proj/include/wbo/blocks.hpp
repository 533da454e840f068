#ifndef WBO_BLOCKS_HPP
#define WBO_BLOCKS_HPP

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "wbo/graph.hpp"

namespace wbo {

/// Tree-decomposition of adhesion <= 1: parts are the blocks of the graph
/// arranged in a block-cut tree; the parts' induced subgraphs partition the
/// edge multiplicity.
struct BlockTree {
  std::vector<std::set<Vertex>> parts;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
};

BlockTree block_tree(const ExtMultigraph& g);

}  // namespace wbo

#endif
