#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "altwqo/error.hpp"

namespace altwqo {

/// Finite directed multigraph. Vertices and edges are dense integer ids;
/// optional string names are kept for interchange round-trips. Parallel
/// edges are always permitted; loops only when `loops_allowed` is set.
///
/// Values are immutable after construction by convention: every operation in
/// this library takes digraphs by const reference and returns fresh values,
/// so concurrent reads are safe.
class MultiDigraph {
  public:
    explicit MultiDigraph(int n = 0, bool loops_allowed = false)
        : loops_allowed_(loops_allowed), out_(n), in_(n) {}

    int add_vertex() {
        out_.emplace_back();
        in_.emplace_back();
        return static_cast<int>(out_.size()) - 1;
    }

    int add_edge(int tail, int head) {
        if (tail < 0 || tail >= vertex_count() || head < 0 || head >= vertex_count())
            throw StructuralError("edge endpoint references a missing vertex");
        if (tail == head && !loops_allowed_)
            throw StructuralError("loop on a loopless digraph");
        const int e = static_cast<int>(tails_.size());
        tails_.push_back(tail);
        heads_.push_back(head);
        out_[tail].push_back(e);
        if (head != tail) in_[head].push_back(e);
        return e;
    }

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int edge_count() const { return static_cast<int>(tails_.size()); }

    int tail(int e) const { return tails_[e]; }
    int head(int e) const { return heads_[e]; }
    bool is_loop(int e) const { return tails_[e] == heads_[e]; }
    bool loops_allowed() const { return loops_allowed_; }

    /// Edges with tail v, ascending edge id. Loops appear here only.
    std::span<const int> out_edges(int v) const { return out_[v]; }
    /// Edges with head v (loops excluded), ascending edge id.
    std::span<const int> in_edges(int v) const { return in_[v]; }

    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    /// Total number of incident edge ends (a loop contributes 2).
    int degree(int v) const;

    /// The endpoint of e other than v; for a loop at v returns v.
    int other_end(int e, int v) const {
        return tails_[e] == v ? heads_[e] : tails_[e];
    }
    bool incident(int e, int v) const { return tails_[e] == v || heads_[e] == v; }

    int loop_count(int v) const;
    bool has_any_loop() const;

    /// All non-loop edges incident with v, ascending edge id.
    std::vector<int> incident_edges(int v) const;

    /// Underlying-graph connectivity over all vertices.
    bool connected() const;
    /// Underlying multigraph is 2-connected (digon counts, a single edge
    /// does not). Loops are ignored.
    bool biconnected() const;

    /// Subgraph induced by an edge subset: keeps exactly the endpoints of the
    /// chosen edges plus `extra_vertices`, reindexed densely. Returns the new
    /// digraph plus old-vertex/old-edge maps (new -> old).
    struct Subgraph {
        MultiDigraph d;
        std::vector<int> vertex_to_host; // new vertex -> host vertex
        std::vector<int> edge_to_host;   // new edge -> host edge
        std::vector<int> host_to_vertex; // host vertex -> new vertex or -1
    };
    Subgraph edge_subgraph(const std::vector<int>& edges,
                           const std::vector<int>& extra_vertices = {}) const;

    /// Optional interchange names; empty means "auto v<i> / e<i>".
    std::vector<std::string> vertex_names;
    std::vector<std::string> edge_names;

    std::string vertex_name(int v) const {
        return vertex_names.empty() ? "v" + std::to_string(v) : vertex_names[v];
    }
    std::string edge_name(int e) const {
        return edge_names.empty() ? "e" + std::to_string(e) : edge_names[e];
    }
    std::optional<int> find_vertex(const std::string& name) const;

  private:
    bool loops_allowed_ = false;
    std::vector<int> tails_, heads_;
    std::vector<std::vector<int>> out_, in_;
};

/// Convenience builder: digraph on n vertices with the given (tail, head)
/// arcs, loopless unless a loop is present.
MultiDigraph make_digraph(int n, const std::vector<std::pair<int, int>>& arcs);

/// Connected components of the underlying graph after deleting `removed`
/// vertices; returns component index per vertex (-1 for removed).
std::vector<int> underlying_components(const MultiDigraph& d,
                                       const std::vector<int>& removed = {});

/// Cut vertices of the underlying multigraph (loops ignored).
std::vector<int> cut_vertices(const MultiDigraph& d);

} // namespace altwqo
