#pragma once

#include <string>
#include <vector>

#include "altwqo/error.hpp"

namespace altwqo {

/// Finite quasi-order: ordered ground set plus a reflexive, transitive
/// relation matrix. Every finite quasi-order is a well-quasi-order, which is
/// what makes desk-scale label alphabets sound.
class QuasiOrder {
  public:
    QuasiOrder() = default;
    QuasiOrder(std::vector<std::string> elements, std::vector<std::vector<bool>> leq);

    /// The single-element order; the conventional "no labels" alphabet.
    static QuasiOrder trivial();
    /// n pairwise-incomparable elements with the given names.
    static QuasiOrder antichain(std::vector<std::string> elements);
    /// Total order over the given names, ascending.
    static QuasiOrder chain(std::vector<std::string> elements);

    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element(int i) const { return elements_[i]; }
    int index_of(const std::string& name) const;

    bool leq(int a, int b) const { return leq_[a][b]; }

    bool is_reflexive() const;
    bool is_transitive() const;

  private:
    std::vector<std::string> elements_;
    std::vector<std::vector<bool>> leq_;
};

enum class QoCombine { Product, DisjointUnion };

/// Cartesian product (componentwise order) or tagged disjoint union
/// (cross-tag incomparable) of two quasi-orders.
QuasiOrder qo_combine(QoCombine kind, const QuasiOrder& q1, const QuasiOrder& q2);

/// Higman's subsequence order: s1 <= s2 iff a strictly increasing index map
/// iota exists with leq(s1[i], s2[iota(i)]). Sequences hold element indices
/// into qo; foreign indices are a domain error. Greedy decision.
bool higman_leq(const std::vector<int>& s1, const std::vector<int>& s2, const QuasiOrder& qo);

} // namespace altwqo
