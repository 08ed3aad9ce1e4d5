#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "altwqo/digraph.hpp"

namespace altwqo {

/// A thread: a subdigraph whose underlying graph is a simple path. Stored as
/// the edge sequence along the path; a single vertex is the empty thread on
/// `single_vertex`.
struct Thread {
    const MultiDigraph* host = nullptr;
    std::vector<int> edges;
    int single_vertex = -1;

    /// Vertices along the path, walk order. Validates path-ness.
    std::vector<int> vertex_seq() const;
    std::pair<int, int> ends() const;
    bool contains_vertex(int v) const;
    /// +1 if every edge points along the walk, -1 if every edge points
    /// against it, nullopt if mixed or the thread has no edge.
    std::optional<int> direction() const;
    bool is_directed_path() const { return edges.empty() || direction().has_value(); }
};

/// Number of pivots: vertices whose in- or out-degree within the thread is
/// two. Throws StructuralError when the edge sequence is not a path.
int thread_pivot_count(const Thread& t);

/// Constraint bundle for alternating-path queries.
struct AltPathQuery {
    /// Thread must have at least one end in this set.
    std::optional<std::vector<int>> end_in;
    /// Thread must intersect (`true`) or avoid (`false`) this vertex set.
    std::optional<std::pair<std::vector<int>, bool>> hit;
    /// Vertices the thread may not use at all.
    std::vector<int> forbidden;
};

/// Maximum pivot count over all threads satisfying q; -1 when no thread
/// satisfies q (in particular on the empty digraph). Exact branch-and-bound
/// search, deterministic.
int max_pivots(const MultiDigraph& d, const AltPathQuery& q = {});

/// `D has a k-alternating path under q`. For end/forbidden constraints this
/// is equivalent to max_pivots(d, q) >= k because trimming an end edge keeps
/// the constrained end and drops at most one pivot; a must-intersect hit
/// constraint is not trim-stable, so there the equivalence is one-sided.
bool has_k_alternating_path(const MultiDigraph& d, int k, const AltPathQuery& q = {});

/// Every thread satisfying the constraint, exactly once up to reversal, in a
/// deterministic order. Includes single-vertex threads.
std::vector<Thread> enumerate_threads(const MultiDigraph& d,
                                      const std::optional<std::vector<int>>& endpoint_in = {});

/// Threads with exactly k pivots satisfying q, once up to reversal.
std::vector<Thread> enumerate_alternating_paths(const MultiDigraph& d, int k,
                                                const AltPathQuery& q = {});

/// Walks every thread with one end `s` and the other end `t`, restricted to
/// `allowed_edges` when given (bit i = edge i usable). The callback receives
/// the edge sequence ordered from s to t and the direction sign (+1 all
/// edges s->t, -1 all t->s, 0 mixed); return false to abort. Returns true
/// when the walk ran to completion.
bool for_each_st_thread(const MultiDigraph& d, int s, int t,
                        std::optional<uint64_t> allowed_edges,
                        const std::function<bool(const std::vector<int>&, int)>& fn);

} // namespace altwqo
