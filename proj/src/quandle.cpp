#include "symq/quandle.hpp"

#include <algorithm>

namespace symq {

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images[i] != i) return false;
    return true;
}

bool Permutation::is_bijection() const {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool Permutation::is_involution() const {
    if (!is_bijection()) return false;
    for (int i = 0; i < size(); ++i)
        if (images[images[i]] != i) return false;
    return true;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(n);
    for (int i = 0; i < n; ++i) p.images[i] = i;
    return p;
}

FiniteQuandle FiniteQuandle::check(const std::vector<std::vector<int>>& op_table,
                                   std::vector<std::string> labels) {
    const int n = static_cast<int>(op_table.size());
    std::vector<int> flat(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(op_table[x].size()) != n)
            throw std::invalid_argument("op table is not square");
        for (int y = 0; y < n; ++y) {
            int v = op_table[x][y];
            if (v < 0 || v >= n) throw std::invalid_argument("op table entry out of range");
            flat[static_cast<size_t>(x) * n + y] = v;
        }
    }

    for (int x = 0; x < n; ++x)
        if (flat[static_cast<size_t>(x) * n + x] != x) throw NotIdempotent(x);

    // each column x -> x*y must be a bijection; invert it
    std::vector<int> inv(static_cast<size_t>(n) * n, -1);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            int v = flat[static_cast<size_t>(x) * n + y];
            if (inv[static_cast<size_t>(v) * n + y] != -1) throw NotRightInvertible(y);
            inv[static_cast<size_t>(v) * n + y] = x;
        }
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = flat[static_cast<size_t>(x) * n + y];
            for (int z = 0; z < n; ++z) {
                int lhs = flat[static_cast<size_t>(xy) * n + z];
                int xz = flat[static_cast<size_t>(x) * n + z];
                int yz = flat[static_cast<size_t>(y) * n + z];
                if (lhs != flat[static_cast<size_t>(xz) * n + yz])
                    throw NotSelfDistributive(x, y, z);
            }
        }

    if (labels.empty()) {
        labels.resize(n);
        for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    }

    FiniteQuandle q;
    q.size_ = n;
    q.op_ = std::move(flat);
    q.inv_op_ = std::move(inv);
    q.labels_ = std::move(labels);
    return q;
}

FiniteQuandle FiniteQuandle::from_tables_unchecked(int size, std::vector<int> op,
                                                   std::vector<int> inv_op,
                                                   std::vector<std::string> labels) {
    FiniteQuandle q;
    q.size_ = size;
    q.op_ = std::move(op);
    q.inv_op_ = std::move(inv_op);
    if (labels.empty()) {
        labels.resize(size);
        for (int i = 0; i < size; ++i) labels[i] = std::to_string(i);
    }
    q.labels_ = std::move(labels);
    return q;
}

FiniteQuandle FiniteQuandle::dual() const {
    FiniteQuandle q;
    q.size_ = size_;
    q.op_ = inv_op_;
    q.inv_op_ = op_;
    q.labels_ = labels_;
    return q;
}

bool FiniteQuandle::is_trivial() const {
    for (int x = 0; x < size_; ++x)
        for (int y = 0; y < size_; ++y)
            if (op(x, y) != x) return false;
    return true;
}

std::vector<std::vector<int>> FiniteQuandle::trivial_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = x;
    return t;
}

bool is_automorphism(const FiniteQuandle& q, const Permutation& p) {
    if (p.size() != q.size() || !p.is_bijection()) return false;
    for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
            if (p(q.op(x, y)) != q.op(p(x), p(y))) return false;
    return true;
}

bool is_antiautomorphism(const FiniteQuandle& q, const Permutation& p) {
    if (p.size() != q.size() || !p.is_bijection()) return false;
    for (int x = 0; x < q.size(); ++x)
        for (int y = 0; y < q.size(); ++y)
            if (p(q.op(x, y)) != q.inv_op(p(x), p(y))) return false;
    return true;
}

std::string cycle_notation(const Permutation& p, const std::vector<std::string>& labels) {
    const int n = p.size();
    std::vector<char> seen(n, 0);
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (seen[i] || p(i) == i) continue;
        std::string cyc = "(";
        int j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) cyc += ' ';
            cyc += (j < static_cast<int>(labels.size())) ? labels[j] : std::to_string(j);
            first = false;
            j = p(j);
        }
        cyc += ')';
        out += cyc;
    }
    return out.empty() ? "()" : out;
}

}  // namespace symq
