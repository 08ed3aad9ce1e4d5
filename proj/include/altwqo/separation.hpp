#pragma once

#include <map>
#include <vector>

#include "altwqo/digraph.hpp"

namespace altwqo {

/// Separation (A, B): a bipartition of the edge set into two edge-disjoint
/// subgraphs covering the digraph. A side's vertex set is the endpoints of
/// its edges plus the isolated vertices assigned to it; the paper never
/// places isolated vertices, so the default assignment is side B.
struct Separation {
    const MultiDigraph* host = nullptr;
    std::vector<int> edges_a, edges_b;        // sorted, disjoint, covering
    std::map<int, char> isolated_assignment;  // isolated vertex -> 'A' or 'B'

    std::vector<int> side_vertices(char side) const;
    std::vector<int> boundary() const; // V(A) ∩ V(B), sorted
    int order() const { return static_cast<int>(boundary().size()); }

    void validate() const;

    static Separation from_a_side(const MultiDigraph& d, std::vector<int> edges_a);
};

} // namespace altwqo
