#include "altwqo/digraph.hpp"

#include <algorithm>

namespace altwqo {

int MultiDigraph::degree(int v) const {
    int d = 0;
    for (int e : out_[v]) d += is_loop(e) ? 2 : 1;
    d += in_degree(v);
    return d;
}

int MultiDigraph::loop_count(int v) const {
    int c = 0;
    for (int e : out_[v])
        if (is_loop(e)) ++c;
    return c;
}

bool MultiDigraph::has_any_loop() const {
    for (int e = 0; e < edge_count(); ++e)
        if (is_loop(e)) return true;
    return false;
}

std::vector<int> MultiDigraph::incident_edges(int v) const {
    std::vector<int> r;
    r.reserve(out_[v].size() + in_[v].size());
    for (int e : out_[v])
        if (!is_loop(e)) r.push_back(e);
    for (int e : in_[v]) r.push_back(e);
    std::sort(r.begin(), r.end());
    return r;
}

bool MultiDigraph::connected() const {
    const int n = vertex_count();
    if (n == 0) return true;
    auto comp = underlying_components(*this);
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

bool MultiDigraph::biconnected() const {
    const int n = vertex_count();
    if (n < 2 || !connected()) return false;
    if (!cut_vertices(*this).empty()) return false;
    if (n == 2) {
        int nonloop = 0;
        for (int e = 0; e < edge_count(); ++e)
            if (!is_loop(e)) ++nonloop;
        return nonloop >= 2;
    }
    return true;
}

MultiDigraph::Subgraph MultiDigraph::edge_subgraph(const std::vector<int>& edges,
                                                   const std::vector<int>& extra_vertices) const {
    Subgraph s;
    s.host_to_vertex.assign(vertex_count(), -1);
    auto touch = [&](int v) {
        if (s.host_to_vertex[v] < 0) {
            s.host_to_vertex[v] = static_cast<int>(s.vertex_to_host.size());
            s.vertex_to_host.push_back(v);
        }
    };
    for (int e : edges) {
        touch(tail(e));
        touch(head(e));
    }
    for (int v : extra_vertices) touch(v);
    s.d = MultiDigraph(static_cast<int>(s.vertex_to_host.size()), loops_allowed_);
    for (int e : edges) {
        s.d.add_edge(s.host_to_vertex[tail(e)], s.host_to_vertex[head(e)]);
        s.edge_to_host.push_back(e);
    }
    if (!vertex_names.empty()) {
        for (int v : s.vertex_to_host) s.d.vertex_names.push_back(vertex_names[v]);
    }
    if (!edge_names.empty()) {
        for (int e : s.edge_to_host) s.d.edge_names.push_back(edge_names[e]);
    }
    return s;
}

std::optional<int> MultiDigraph::find_vertex(const std::string& name) const {
    if (vertex_names.empty()) {
        for (int v = 0; v < vertex_count(); ++v)
            if (vertex_name(v) == name) return v;
        return std::nullopt;
    }
    for (int v = 0; v < vertex_count(); ++v)
        if (vertex_names[v] == name) return v;
    return std::nullopt;
}

MultiDigraph make_digraph(int n, const std::vector<std::pair<int, int>>& arcs) {
    bool loops = false;
    for (auto& [a, b] : arcs) loops |= (a == b);
    MultiDigraph d(n, loops);
    for (auto& [a, b] : arcs) d.add_edge(a, b);
    return d;
}

std::vector<int> underlying_components(const MultiDigraph& d, const std::vector<int>& removed) {
    const int n = d.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<char> gone(n, 0);
    for (int v : removed) gone[v] = 1;
    int c = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (gone[s] || comp[s] >= 0) continue;
        comp[s] = c;
        stack.assign(1, s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            auto visit = [&](int u) {
                if (!gone[u] && comp[u] < 0) {
                    comp[u] = c;
                    stack.push_back(u);
                }
            };
            for (int e : d.out_edges(v)) visit(d.head(e));
            for (int e : d.in_edges(v)) visit(d.tail(e));
        }
        ++c;
    }
    return comp;
}

namespace {

// Iterative Hopcroft-Tarjan lowpoint walk, parallel-edge aware: only the
// entering edge instance is skipped, so a parallel pair forms a cycle.
struct LowpointWalk {
    const MultiDigraph& d;
    std::vector<int> num, low, parent_edge;
    std::vector<char> is_cut;
    int counter = 0;

    explicit LowpointWalk(const MultiDigraph& g)
        : d(g), num(g.vertex_count(), -1), low(g.vertex_count(), 0),
          parent_edge(g.vertex_count(), -1), is_cut(g.vertex_count(), 0) {}

    void run(int root, std::vector<std::vector<int>>* block_edges) {
        struct Frame {
            int v;
            size_t idx = 0;
            std::vector<int> inc;
        };
        std::vector<Frame> st;
        std::vector<int> edge_stack;
        int root_children = 0;
        num[root] = low[root] = counter++;
        st.push_back({root, 0, d.incident_edges(root)});
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.idx < f.inc.size()) {
                int e = f.inc[f.idx++];
                if (e == parent_edge[f.v]) continue;
                int u = d.other_end(e, f.v);
                if (num[u] < 0) {
                    if (block_edges) edge_stack.push_back(e);
                    parent_edge[u] = e;
                    num[u] = low[u] = counter++;
                    if (f.v == root) ++root_children;
                    st.push_back({u, 0, d.incident_edges(u)});
                } else if (num[u] < num[f.v]) {
                    if (block_edges) edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], num[u]);
                }
            } else {
                int v = f.v;
                st.pop_back();
                if (st.empty()) break;
                int p = st.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] >= num[p]) {
                    // root cut-vertex status is settled after the walk
                    if (p != root) is_cut[p] = 1;
                    if (block_edges) {
                        std::vector<int> blk;
                        while (!edge_stack.empty()) {
                            int e = edge_stack.back();
                            bool last = (e == parent_edge[v]);
                            edge_stack.pop_back();
                            blk.push_back(e);
                            if (last) break;
                        }
                        std::sort(blk.begin(), blk.end());
                        block_edges->push_back(std::move(blk));
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[root] = 1;
    }
};

} // namespace

std::vector<int> cut_vertices(const MultiDigraph& d) {
    LowpointWalk w(d);
    for (int v = 0; v < d.vertex_count(); ++v)
        if (w.num[v] < 0) w.run(v, nullptr);
    std::vector<int> r;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (w.is_cut[v]) r.push_back(v);
    return r;
}

std::vector<std::vector<int>> biconnected_edge_blocks(const MultiDigraph& d) {
    if (d.has_any_loop()) throw StructuralError("block decomposition requires a loopless digraph");
    LowpointWalk w(d);
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (w.num[v] < 0) w.run(v, &blocks);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

} // namespace altwqo
