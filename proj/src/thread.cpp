#include "altwqo/thread.hpp"

#include <algorithm>
#include <set>

namespace altwqo {

namespace {

uint64_t bit(int i) { return uint64_t{1} << i; }

void check_mask_scale(const MultiDigraph& d) {
    if (d.vertex_count() > 64 || d.edge_count() > 64)
        throw ResourceError("thread search supports at most 64 vertices and 64 edges");
}

uint64_t vertex_mask(const std::vector<int>& vs) {
    uint64_t m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

} // namespace

std::vector<int> Thread::vertex_seq() const {
    if (!host) throw StructuralError("thread without host digraph");
    const MultiDigraph& d = *host;
    if (edges.empty()) {
        if (single_vertex < 0 || single_vertex >= d.vertex_count())
            throw StructuralError("trivial thread must name its vertex");
        return {single_vertex};
    }
    for (int e : edges) {
        if (e < 0 || e >= d.edge_count()) throw StructuralError("thread references a missing edge");
        if (d.is_loop(e)) throw StructuralError("thread may not contain a loop");
    }
    std::vector<int> seq;
    int v0;
    if (edges.size() == 1) {
        v0 = d.tail(edges[0]);
    } else {
        int a = edges[0], b = edges[1];
        if (d.incident(b, d.tail(a)) && !d.incident(b, d.head(a)))
            v0 = d.head(a);
        else
            v0 = d.tail(a);
    }
    seq.push_back(v0);
    int cur = v0;
    for (int e : edges) {
        if (!d.incident(e, cur)) throw StructuralError("thread edges are not consecutive");
        cur = d.other_end(e, cur);
        seq.push_back(cur);
    }
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw StructuralError("thread revisits a vertex; underlying graph is not a path");
    return seq;
}

std::pair<int, int> Thread::ends() const {
    auto seq = vertex_seq();
    return {seq.front(), seq.back()};
}

bool Thread::contains_vertex(int v) const {
    auto seq = vertex_seq();
    return std::find(seq.begin(), seq.end(), v) != seq.end();
}

std::optional<int> Thread::direction() const {
    auto seq = vertex_seq();
    if (edges.empty()) return std::nullopt;
    bool all_fwd = true, all_bwd = true;
    for (size_t i = 0; i < edges.size(); ++i) {
        bool fwd = host->tail(edges[i]) == seq[i];
        all_fwd &= fwd;
        all_bwd &= !fwd;
    }
    if (all_fwd) return 1;
    if (all_bwd) return -1;
    return std::nullopt;
}

int thread_pivot_count(const Thread& t) {
    auto seq = t.vertex_seq();
    if (t.edges.size() < 2) return 0;
    int pivots = 0;
    int prev_sign = t.host->tail(t.edges[0]) == seq[0] ? 1 : -1;
    for (size_t i = 1; i < t.edges.size(); ++i) {
        int sign = t.host->tail(t.edges[i]) == seq[i] ? 1 : -1;
        if (sign != prev_sign) ++pivots;
        prev_sign = sign;
    }
    return pivots;
}

namespace {

// Shared DFS over simple paths in the underlying multigraph. Extending a
// path by one edge adds a pivot exactly when the incidence sign at the old
// endpoint flips, so the pivot count is carried incrementally and never
// decreases along an extension.
struct Dfs {
    const MultiDigraph& d;
    uint64_t allowed_edges;
    uint64_t forbidden;
    uint64_t hit_set = 0;
    bool hit_required = false;  // true: must intersect; false with hit_mask: must avoid
    bool has_hit_constraint = false;

    std::vector<int> path_edges;
    std::vector<std::vector<int>> adj; // incident non-loop edges per vertex, sorted

    // visitor returns false to abort the whole search
    std::function<bool(const std::vector<int>&, int start, int end, int pivots, int first_sign, int last_sign)> visit;
    // optional admissible prune: called before extending
    std::function<bool(int pivots, int visited_count)> prune;
    // optional: when true for the new endpoint, emit but do not extend past it
    std::function<bool(int end)> stop_at;

    bool aborted = false;

    explicit Dfs(const MultiDigraph& g) : d(g) {
        adj.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.incident_edges(v);
    }

    bool vertex_ok(int v) const { return !(forbidden & bit(v)); }

    void run_from(int s) {
        if (!vertex_ok(s)) return;
        bool hit0 = (hit_set & bit(s)) != 0;
        if (has_hit_constraint && !hit_required && hit0) {
            // must-avoid behaves as extra forbidden vertices
            return;
        }
        if (emit(s, s, 0, 0, 0, hit0)) return;
        extend(s, s, bit(s), 0, 0, 0, hit0);
    }

    // Returns true when the search is aborted.
    bool emit(int start, int end, int pivots, int first_sign, int last_sign, bool hit) {
        if (has_hit_constraint && hit_required && !hit) return false;
        if (!visit(path_edges, start, end, pivots, first_sign, last_sign)) {
            aborted = true;
            return true;
        }
        return false;
    }

    void extend(int start, int cur, uint64_t visited, int pivots, int first_sign, int last_sign, bool hit) {
        if (aborted) return;
        if (prune) {
            int visited_count = __builtin_popcountll(visited);
            if (prune(pivots, visited_count)) return;
        }
        for (int e : adj[cur]) {
            if (!(allowed_edges & bit(e))) continue;
            int u = d.other_end(e, cur);
            if (visited & bit(u)) continue;
            if (!vertex_ok(u)) continue;
            bool u_hits = (hit_set & bit(u)) != 0;
            if (has_hit_constraint && !hit_required && u_hits) continue;
            int sign = d.tail(e) == cur ? 1 : -1;
            int np = pivots + (path_edges.empty() ? 0 : (sign != last_sign ? 1 : 0));
            int nf = path_edges.empty() ? sign : first_sign;
            path_edges.push_back(e);
            if (!emit(start, u, np, nf, sign, hit || u_hits) && !(stop_at && stop_at(u)))
                extend(start, u, visited | bit(u), np, nf, sign, hit || u_hits);
            path_edges.pop_back();
            if (aborted) return;
        }
    }
};

Dfs make_dfs(const MultiDigraph& d, const AltPathQuery& q) {
    check_mask_scale(d);
    Dfs dfs(d);
    dfs.allowed_edges = ~uint64_t{0};
    dfs.forbidden = vertex_mask(q.forbidden);
    for (int v : q.forbidden)
        if (v < 0 || v >= d.vertex_count()) throw StructuralError("forbidden vertex out of range");
    if (q.hit) {
        for (int v : q.hit->first)
            if (v < 0 || v >= d.vertex_count()) throw StructuralError("hit-set vertex out of range");
        dfs.hit_set = vertex_mask(q.hit->first);
        dfs.hit_required = q.hit->second;
        dfs.has_hit_constraint = true;
    }
    return dfs;
}

std::vector<int> start_vertices(const MultiDigraph& d, const AltPathQuery& q) {
    std::vector<int> starts;
    if (q.end_in) {
        for (int v : *q.end_in) {
            if (v < 0 || v >= d.vertex_count()) throw StructuralError("end-constraint vertex out of range");
            starts.push_back(v);
        }
        std::sort(starts.begin(), starts.end());
        starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    } else {
        for (int v = 0; v < d.vertex_count(); ++v) starts.push_back(v);
    }
    return starts;
}

} // namespace

int max_pivots(const MultiDigraph& d, const AltPathQuery& q) {
    Dfs dfs = make_dfs(d, q);
    int best = -1;
    const int n = d.vertex_count();
    dfs.visit = [&](const std::vector<int>&, int, int, int pivots, int, int) {
        best = std::max(best, pivots);
        return true;
    };
    dfs.prune = [&](int pivots, int visited_count) {
        // every extension consumes a fresh vertex and adds at most one pivot
        return pivots + (n - visited_count) <= best;
    };
    for (int s : start_vertices(d, q)) dfs.run_from(s);
    return best;
}

bool has_k_alternating_path(const MultiDigraph& d, int k, const AltPathQuery& q) {
    return max_pivots(d, q) >= k;
}

namespace {

std::vector<int> normalized_key(const std::vector<int>& edges) {
    std::vector<int> rev(edges.rbegin(), edges.rend());
    return std::min(edges, rev);
}

} // namespace

std::vector<Thread> enumerate_threads(const MultiDigraph& d,
                                      const std::optional<std::vector<int>>& endpoint_in) {
    AltPathQuery q;
    q.end_in = endpoint_in;
    Dfs dfs = make_dfs(d, q);
    std::set<std::vector<int>> seen;
    std::vector<Thread> out;
    dfs.visit = [&](const std::vector<int>& edges, int start, int, int, int, int) {
        std::vector<int> key = edges.empty() ? std::vector<int>{-1 - start} : normalized_key(edges);
        if (seen.insert(key).second) {
            Thread t;
            t.host = &d;
            t.edges = edges;
            if (edges.empty()) t.single_vertex = start;
            out.push_back(std::move(t));
        }
        return true;
    };
    for (int s : start_vertices(d, q)) dfs.run_from(s);
    return out;
}

std::vector<Thread> enumerate_alternating_paths(const MultiDigraph& d, int k,
                                                const AltPathQuery& q) {
    Dfs dfs = make_dfs(d, q);
    std::set<std::vector<int>> seen;
    std::vector<Thread> out;
    dfs.visit = [&](const std::vector<int>& edges, int start, int, int pivots, int, int) {
        if (pivots == k) {
            std::vector<int> key = edges.empty() ? std::vector<int>{-1 - start} : normalized_key(edges);
            if (seen.insert(key).second) {
                Thread t;
                t.host = &d;
                t.edges = edges;
                if (edges.empty()) t.single_vertex = start;
                out.push_back(std::move(t));
            }
        }
        return true;
    };
    dfs.prune = [&](int pivots, int) { return pivots > k; };
    for (int s : start_vertices(d, q)) dfs.run_from(s);
    return out;
}

bool for_each_st_thread(const MultiDigraph& d, int s, int t,
                        std::optional<uint64_t> allowed_edges,
                        const std::function<bool(const std::vector<int>&, int)>& fn) {
    if (s == t) throw DomainError("s and t must be distinct");
    check_mask_scale(d);
    Dfs dfs(d);
    dfs.allowed_edges = allowed_edges.value_or(~uint64_t{0});
    dfs.forbidden = 0;
    bool user_abort = false;
    dfs.visit = [&](const std::vector<int>& edges, int, int end, int pivots, int first_sign, int) {
        if (end != t || edges.empty()) return true;
        // a uniform-sign walk is exactly a pivot-free one
        int dir = pivots == 0 ? first_sign : 0;
        if (!fn(edges, dir)) {
            user_abort = true;
            return false;
        }
        return true;
    };
    dfs.stop_at = [&](int end) { return end == t; };
    dfs.run_from(s);
    return !user_abort;
}

} // namespace altwqo
