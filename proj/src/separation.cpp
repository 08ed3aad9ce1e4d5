#include "altwqo/separation.hpp"

#include <algorithm>

namespace altwqo {

std::vector<int> Separation::side_vertices(char side) const {
    const auto& edges = side == 'A' ? edges_a : edges_b;
    std::vector<int> vs;
    for (int e : edges) {
        vs.push_back(host->tail(e));
        vs.push_back(host->head(e));
    }
    for (auto& [v, s] : isolated_assignment)
        if (s == side) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::vector<int> Separation::boundary() const {
    auto va = side_vertices('A');
    auto vb = side_vertices('B');
    std::vector<int> r;
    std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(r));
    return r;
}

void Separation::validate() const {
    if (!host) throw StructuralError("separation without host digraph");
    std::vector<int> all = edges_a;
    all.insert(all.end(), edges_b.begin(), edges_b.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw StructuralError("separation sides share an edge");
    if (static_cast<int>(all.size()) != host->edge_count())
        throw StructuralError("separation sides must cover the edge set");
    for (int e : all)
        if (e < 0 || e >= host->edge_count()) throw StructuralError("separation edge out of range");
    std::vector<char> touched(host->vertex_count(), 0);
    for (int e = 0; e < host->edge_count(); ++e)
        touched[host->tail(e)] = touched[host->head(e)] = 1;
    for (int v = 0; v < host->vertex_count(); ++v)
        if (!touched[v] && !isolated_assignment.count(v))
            throw StructuralError("isolated vertex lacks a side assignment");
}

Separation Separation::from_a_side(const MultiDigraph& d, std::vector<int> edges_a) {
    Separation s;
    s.host = &d;
    std::sort(edges_a.begin(), edges_a.end());
    std::vector<char> in_a(d.edge_count(), 0);
    for (int e : edges_a) in_a[e] = 1;
    s.edges_a = std::move(edges_a);
    for (int e = 0; e < d.edge_count(); ++e)
        if (!in_a[e]) s.edges_b.push_back(e);
    std::vector<char> touched(d.vertex_count(), 0);
    for (int e = 0; e < d.edge_count(); ++e)
        touched[d.tail(e)] = touched[d.head(e)] = 1;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (!touched[v]) s.isolated_assignment[v] = 'B';
    s.validate();
    return s;
}

} // namespace altwqo
