#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altwqo/digraph.hpp"
#include "altwqo/quasi_order.hpp"

namespace altwqo {

/// Digraph with vertex labels drawn from a quasi-order. `label[v]` indexes
/// into `qo.elements()`.
struct LabelledDigraph {
    MultiDigraph d;
    QuasiOrder qo = QuasiOrder::trivial();
    std::vector<int> label;

    void validate() const;
    static LabelledDigraph unlabelled(MultiDigraph g);
};

/// Digraph isomorphism preserving edge multiplicities, loop counts and, when
/// `exact_labels` is set, vertex labels exactly. Backtracking with
/// degree/label signature pruning; fine at desk scale.
bool are_isomorphic(const LabelledDigraph& d1, const LabelledDigraph& d2, bool exact_labels);

/// Unlabelled convenience overload, optionally pinning vertices pairwise
/// (pins[i].first in d1 must map to pins[i].second in d2).
bool are_isomorphic(const MultiDigraph& d1, const MultiDigraph& d2,
                    const std::vector<std::pair<int, int>>& pins = {});

/// Canonical byte string of a digraph under all permutations that fix the
/// `pinned` vertices pointwise and preserve `labels` when given. Equal keys
/// iff isomorphic (respecting pins/labels). Brute force over permutations;
/// guarded to 9 free vertices.
std::string canonical_key(const MultiDigraph& d, const std::vector<int>& labels = {},
                          const std::vector<int>& pinned = {});

} // namespace altwqo
