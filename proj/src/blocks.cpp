#include "altwqo/blocks.hpp"

#include <algorithm>
#include <queue>

namespace altwqo {

BlockCutTree block_cut_tree(const MultiDigraph& d, int r) {
    if (r < 0 || r >= d.vertex_count()) throw StructuralError("root vertex out of range");
    if (!d.connected()) throw StructuralError("block-structure requires a connected digraph");
    if (d.has_any_loop()) throw StructuralError("block-structure requires a loopless digraph");

    BlockCutTree t;
    t.block_edges = biconnected_edge_blocks(d);
    if (t.block_edges.empty()) {
        // single vertex: the graph itself is its one block
        t.block_edges.push_back({});
        t.block_vertices.push_back({r});
    } else {
        for (auto& blk : t.block_edges) {
            std::vector<int> vs;
            for (int e : blk) {
                vs.push_back(d.tail(e));
                vs.push_back(d.head(e));
            }
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            t.block_vertices.push_back(std::move(vs));
        }
    }

    const int nb = t.block_count();
    std::vector<int> cuts = cut_vertices(d);
    std::vector<int> cnode_vertices = cuts;
    if (std::find(cnode_vertices.begin(), cnode_vertices.end(), r) == cnode_vertices.end())
        cnode_vertices.push_back(r);
    std::sort(cnode_vertices.begin(), cnode_vertices.end());

    t.node_of_vertex.assign(d.vertex_count(), -1);
    for (int v : cnode_vertices) {
        BlockCutTree::Node n;
        n.is_block = false;
        n.vertex = v;
        t.node_of_vertex[v] = static_cast<int>(t.nodes.size());
        t.nodes.push_back(n);
    }
    t.node_of_block.assign(nb, -1);
    for (int b = 0; b < nb; ++b) {
        BlockCutTree::Node n;
        n.is_block = true;
        n.block = b;
        t.node_of_block[b] = static_cast<int>(t.nodes.size());
        t.nodes.push_back(n);
    }

    // incidence: C-node adjacent to every block containing its vertex
    std::vector<std::vector<int>> adj(t.nodes.size());
    for (int b = 0; b < nb; ++b)
        for (int v : t.block_vertices[b])
            if (t.node_of_vertex[v] >= 0) {
                adj[t.node_of_vertex[v]].push_back(t.node_of_block[b]);
                adj[t.node_of_block[b]].push_back(t.node_of_vertex[v]);
            }

    t.root_node = t.node_of_vertex[r];
    t.root_vertex = r;
    std::vector<char> seen(t.nodes.size(), 0);
    std::queue<int> q;
    q.push(t.root_node);
    seen[t.root_node] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        std::vector<int> nb_sorted = adj[x];
        std::sort(nb_sorted.begin(), nb_sorted.end());
        for (int y : nb_sorted) {
            if (seen[y]) continue;
            seen[y] = 1;
            t.nodes[y].parent = x;
            t.nodes[x].children.push_back(y);
            q.push(y);
        }
    }

    t.attach_vertex.assign(nb, -1);
    t.parent_block.assign(nb, -1);
    t.child_blocks.assign(nb, {});
    t.exit_vertices.assign(nb, {});
    for (int b = 0; b < nb; ++b) {
        int node = t.node_of_block[b];
        int pc = t.nodes[node].parent; // parent C-node
        t.attach_vertex[b] = t.nodes[pc].vertex;
        int gp = t.nodes[pc].parent;
        if (gp >= 0) t.parent_block[b] = t.nodes[gp].block;
        for (int cn : t.nodes[node].children) {
            t.exit_vertices[b].push_back(t.nodes[cn].vertex);
            for (int gc : t.nodes[cn].children) t.child_blocks[b].push_back(t.nodes[gc].block);
        }
    }
    return t;
}

} // namespace altwqo
