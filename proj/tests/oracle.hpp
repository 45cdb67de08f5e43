#pragma once

// Test-only oracles, coded independently of the library's search paths.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "symq/freemod.hpp"
#include "symq/quandle.hpp"

namespace symq::testing {

// Filters all N! bijections through the good-involution definition directly.
// Feasible for N <= 8.
inline std::vector<std::vector<int>> naive_good_involutions(const FiniteQuandle& q) {
    const int n = q.size();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (p[p[x]] != x) ok = false;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y) {
                if (p[q.op(x, y)] != q.op(p[x], y)) ok = false;
                if (q.op(x, p[y]) != q.inv_op(x, y)) ok = false;
            }
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Kernel of the form by scanning every pair, no basis shortcut.
inline std::vector<long long> form_kernel_full_scan(const FreeModule& m, const GramForm& f) {
    std::vector<long long> kernel;
    for (long long x = 0; x < m.size(); ++x) {
        bool in_kernel = true;
        for (long long y = 0; y < m.size() && in_kernel; ++y)
            if (form_eval(m, f, m.coords(x), m.coords(y)) != m.ring().zero()) in_kernel = false;
        if (in_kernel) kernel.push_back(x);
    }
    return kernel;
}

// Bijectivity of x -> <x,-> by counting distinct functionals on the basis.
inline bool unimodular_by_image_count(const FreeModule& m, const GramForm& f) {
    std::set<std::vector<RElem>> images;
    for (long long x = 0; x < m.size(); ++x) {
        std::vector<RElem> row(m.rank());
        for (int j = 0; j < m.rank(); ++j)
            row[j] = form_eval(m, f, m.coords(x), m.basis(j));
        images.insert(std::move(row));
    }
    return static_cast<long long>(images.size()) == m.size();
}

// Direct column comparison, quadratic in columns.
inline std::vector<std::vector<int>> candidate_sets_by_column_scan(const FiniteQuandle& q) {
    const int n = q.size();
    std::vector<std::vector<int>> sets(n);
    for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
            bool equal = true;
            for (int x = 0; x < n && equal; ++x)
                if (q.op(x, z) != q.inv_op(x, y)) equal = false;
            if (equal) sets[y].push_back(z);
        }
    return sets;
}

}  // namespace symq::testing
