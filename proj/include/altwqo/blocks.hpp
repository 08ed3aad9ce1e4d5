#pragma once

#include <vector>

#include "altwqo/digraph.hpp"

namespace altwqo {

/// Biconnected components of the underlying multigraph as sorted edge-id
/// lists, deterministic order. A single vertex has no edge block; a bridge
/// is a one-edge block; a parallel pair is one block.
std::vector<std::vector<int>> biconnected_edge_blocks(const MultiDigraph& d);

/// Rooted block-structure: a tree on C-nodes (the root r plus every
/// cut-vertex) and L-nodes (blocks), adjacent iff the vertex lies in the
/// block, rooted at r's node.
struct BlockCutTree {
    struct Node {
        bool is_block;
        int vertex = -1; // C-node: host vertex
        int block = -1;  // L-node: block index
        int parent = -1; // tree parent node, -1 at the root
        std::vector<int> children;
    };

    std::vector<Node> nodes;
    int root_node = -1;
    int root_vertex = -1;

    std::vector<std::vector<int>> block_edges;    // per block, sorted host edge ids
    std::vector<std::vector<int>> block_vertices; // per block, sorted host vertex ids

    /// Entry vertex of a block: r for blocks containing r, otherwise the
    /// cut-vertex shared with the parent block.
    std::vector<int> attach_vertex;
    std::vector<int> parent_block;               // -1 when none
    std::vector<std::vector<int>> child_blocks;  // per block
    /// Cut-vertices inside a block other than its entry vertex.
    std::vector<std::vector<int>> exit_vertices;

    std::vector<int> node_of_block;  // block index -> tree node
    std::vector<int> node_of_vertex; // host vertex -> C-node or -1

    int block_count() const { return static_cast<int>(block_edges.size()); }
};

/// Block-structure of (D, r). Requires the underlying graph connected and
/// loopless; throws StructuralError otherwise.
BlockCutTree block_cut_tree(const MultiDigraph& d, int r);

} // namespace altwqo
