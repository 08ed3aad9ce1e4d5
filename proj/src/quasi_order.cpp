#include "altwqo/quasi_order.hpp"

namespace altwqo {

QuasiOrder::QuasiOrder(std::vector<std::string> elements, std::vector<std::vector<bool>> leq)
    : elements_(std::move(elements)), leq_(std::move(leq)) {
    const size_t n = elements_.size();
    if (leq_.size() != n) throw StructuralError("quasi-order matrix has wrong row count");
    for (auto& row : leq_)
        if (row.size() != n) throw StructuralError("quasi-order matrix has wrong column count");
    if (!is_reflexive()) throw StructuralError("quasi-order relation is not reflexive");
    if (!is_transitive()) throw StructuralError("quasi-order relation is not transitive");
}

QuasiOrder QuasiOrder::trivial() { return antichain({"*"}); }

QuasiOrder QuasiOrder::antichain(std::vector<std::string> elements) {
    const size_t n = elements.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) leq[i][i] = true;
    return QuasiOrder(std::move(elements), std::move(leq));
}

QuasiOrder QuasiOrder::chain(std::vector<std::string> elements) {
    const size_t n = elements.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) leq[i][j] = true;
    return QuasiOrder(std::move(elements), std::move(leq));
}

int QuasiOrder::index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (elements_[i] == name) return i;
    throw DomainError("element not in quasi-order ground set: " + name);
}

bool QuasiOrder::is_reflexive() const {
    for (int i = 0; i < size(); ++i)
        if (!leq_[i][i]) return false;
    return true;
}

bool QuasiOrder::is_transitive() const {
    const int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!leq_[a][b]) continue;
            for (int c = 0; c < n; ++c)
                if (leq_[b][c] && !leq_[a][c]) return false;
        }
    return true;
}

QuasiOrder qo_combine(QoCombine kind, const QuasiOrder& q1, const QuasiOrder& q2) {
    if (kind == QoCombine::Product) {
        std::vector<std::string> elems;
        for (int a = 0; a < q1.size(); ++a)
            for (int b = 0; b < q2.size(); ++b)
                elems.push_back("(" + q1.element(a) + "," + q2.element(b) + ")");
        const int n = q1.size() * q2.size();
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (int a = 0; a < q1.size(); ++a)
            for (int b = 0; b < q2.size(); ++b)
                for (int c = 0; c < q1.size(); ++c)
                    for (int d = 0; d < q2.size(); ++d)
                        leq[a * q2.size() + b][c * q2.size() + d] = q1.leq(a, c) && q2.leq(b, d);
        return QuasiOrder(std::move(elems), std::move(leq));
    }
    std::vector<std::string> elems;
    for (int a = 0; a < q1.size(); ++a) elems.push_back("L:" + q1.element(a));
    for (int b = 0; b < q2.size(); ++b) elems.push_back("R:" + q2.element(b));
    const int n = q1.size() + q2.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < q1.size(); ++a)
        for (int c = 0; c < q1.size(); ++c) leq[a][c] = q1.leq(a, c);
    for (int b = 0; b < q2.size(); ++b)
        for (int d = 0; d < q2.size(); ++d) leq[q1.size() + b][q1.size() + d] = q2.leq(b, d);
    return QuasiOrder(std::move(elems), std::move(leq));
}

bool higman_leq(const std::vector<int>& s1, const std::vector<int>& s2, const QuasiOrder& qo) {
    for (int x : s1)
        if (x < 0 || x >= qo.size()) throw DomainError("sequence element outside ground set");
    for (int x : s2)
        if (x < 0 || x >= qo.size()) throw DomainError("sequence element outside ground set");
    size_t j = 0;
    for (int x : s1) {
        while (j < s2.size() && !qo.leq(x, s2[j])) ++j;
        if (j == s2.size()) return false;
        ++j;
    }
    return true;
}

} // namespace altwqo
