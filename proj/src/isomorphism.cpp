#include "altwqo/isomorphism.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace altwqo {

void LabelledDigraph::validate() const {
    if (static_cast<int>(label.size()) != d.vertex_count())
        throw StructuralError("label map must cover every vertex");
    for (int l : label)
        if (l < 0 || l >= qo.size()) throw StructuralError("vertex label outside ground set");
}

LabelledDigraph LabelledDigraph::unlabelled(MultiDigraph g) {
    LabelledDigraph r;
    r.label.assign(g.vertex_count(), 0);
    r.d = std::move(g);
    return r;
}

namespace {

struct Signature {
    int in, out, loops, label;
    bool operator==(const Signature& o) const {
        return in == o.in && out == o.out && loops == o.loops && label == o.label;
    }
    bool operator<(const Signature& o) const {
        return std::tie(in, out, loops, label) < std::tie(o.in, o.out, o.loops, o.label);
    }
};

Signature sig_of(const MultiDigraph& d, const std::vector<int>* labels, int v) {
    int loops = d.loop_count(v);
    return {d.in_degree(v), d.out_degree(v) - loops, loops, labels ? (*labels)[v] : 0};
}

int multiplicity(const MultiDigraph& d, int u, int v) {
    int c = 0;
    for (int e : d.out_edges(u))
        if (d.head(e) == v && !d.is_loop(e)) ++c;
    return c;
}

struct IsoSearch {
    const MultiDigraph& a;
    const MultiDigraph& b;
    const std::vector<int>* la = nullptr;
    const std::vector<int>* lb = nullptr;
    std::vector<int> map, used;

    bool extend(int v) {
        const int n = a.vertex_count();
        if (v == n) return true;
        if (map[v] >= 0) return check(v) && extend(v + 1);
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            if (!(sig_of(a, la, v) == sig_of(b, lb, w))) continue;
            map[v] = w;
            used[w] = 1;
            if (check(v) && extend(v + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    }

    // multiplicities between v and every earlier mapped vertex must agree
    bool check(int v) {
        for (int u = 0; u <= v; ++u) {
            if (map[u] < 0) continue;
            if (multiplicity(a, u, v) != multiplicity(b, map[u], map[v])) return false;
            if (multiplicity(a, v, u) != multiplicity(b, map[v], map[u])) return false;
        }
        return true;
    }
};

bool iso_impl(const MultiDigraph& a, const MultiDigraph& b, const std::vector<int>* la,
              const std::vector<int>* lb, const std::vector<std::pair<int, int>>& pins) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<Signature> sa, sb;
    for (int v = 0; v < n; ++v) sa.push_back(sig_of(a, la, v));
    for (int v = 0; v < n; ++v) sb.push_back(sig_of(b, lb, v));
    std::vector<Signature> ta = sa, tb = sb;
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    if (ta != tb) return false;
    IsoSearch s{a, b, la, lb, std::vector<int>(n, -1), std::vector<int>(n, 0)};
    for (auto& [p, q] : pins) {
        if (p < 0 || p >= n || q < 0 || q >= n) throw StructuralError("pin out of range");
        if (s.map[p] >= 0 && s.map[p] != q) return false;
        if (s.map[p] < 0 && s.used[q]) return false;
        s.map[p] = q;
        s.used[q] = 1;
    }
    return s.extend(0);
}

} // namespace

bool are_isomorphic(const LabelledDigraph& d1, const LabelledDigraph& d2, bool exact_labels) {
    d1.validate();
    d2.validate();
    if (exact_labels) {
        // label identity is by element name so different ground-set objects compare sanely
        std::vector<int> l1 = d1.label, l2 = d2.label;
        std::vector<std::string> names;
        auto rename = [&](const QuasiOrder& qo, std::vector<int>& l) {
            for (int& x : l) {
                const std::string& nm = qo.element(x);
                auto it = std::find(names.begin(), names.end(), nm);
                if (it == names.end()) {
                    names.push_back(nm);
                    x = static_cast<int>(names.size()) - 1;
                } else {
                    x = static_cast<int>(it - names.begin());
                }
            }
        };
        rename(d1.qo, l1);
        rename(d2.qo, l2);
        return iso_impl(d1.d, d2.d, &l1, &l2, {});
    }
    return iso_impl(d1.d, d2.d, nullptr, nullptr, {});
}

bool are_isomorphic(const MultiDigraph& d1, const MultiDigraph& d2,
                    const std::vector<std::pair<int, int>>& pins) {
    return iso_impl(d1, d2, nullptr, nullptr, pins);
}

std::string canonical_key(const MultiDigraph& d, const std::vector<int>& labels,
                          const std::vector<int>& pinned) {
    const int n = d.vertex_count();
    std::vector<int> pin_pos(n, -1);
    for (size_t i = 0; i < pinned.size(); ++i) pin_pos[pinned[i]] = static_cast<int>(i);
    std::vector<int> free;
    for (int v = 0; v < n; ++v)
        if (pin_pos[v] < 0) free.push_back(v);
    if (free.size() > 9) throw ResourceError("canonical_key guard: more than 9 free vertices");

    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    std::vector<int> loops(n, 0);
    for (int e = 0; e < d.edge_count(); ++e) {
        if (d.is_loop(e))
            ++loops[d.tail(e)];
        else
            ++mult[d.tail(e)][d.head(e)];
    }

    // pos[v] = position of v in the candidate ordering
    std::vector<int> pos(n), inv(n);
    auto encode = [&]() {
        std::string s;
        s.reserve(n * (n + 2) + 1);
        s.push_back(static_cast<char>(n));
        for (int v = 0; v < n; ++v) inv[pos[v]] = v;
        for (int i = 0; i < n; ++i) {
            s.push_back(static_cast<char>(loops[inv[i]]));
            s.push_back(static_cast<char>(labels.empty() ? 0 : labels[inv[i]] + 1));
            for (int j = 0; j < n; ++j) s.push_back(static_cast<char>(mult[inv[i]][inv[j]]));
        }
        return s;
    };

    std::vector<int> order(free);
    std::sort(order.begin(), order.end());
    std::string best;
    do {
        for (size_t i = 0; i < pinned.size(); ++i) pos[pinned[i]] = static_cast<int>(i);
        for (size_t i = 0; i < order.size(); ++i)
            pos[order[i]] = static_cast<int>(pinned.size() + i);
        std::string enc = encode();
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

} // namespace altwqo
