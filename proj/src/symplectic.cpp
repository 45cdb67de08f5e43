#include "symq/symplectic.hpp"

#include <algorithm>

namespace symq {

SymplecticQuandle build_symplectic_quandle(const Ring& ring, int rank, const GramForm& form,
                                           long long size_cap) {
    if (form.rank() != rank)
        throw DimensionMismatch("form rank " + std::to_string(form.rank()) +
                                " does not match module rank " + std::to_string(rank));
    FreeModule m(ring, rank);
    if (m.size() > size_cap) throw SizeCapExceeded(m.size(), size_cap);

    const int n = static_cast<int>(m.size());
    std::vector<Vec> vecs(n);
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        vecs[i] = m.coords(i);
        labels[i] = m.label(vecs[i]);
    }

    // op(x,y) = x + <x,y>y, inv_op(x,y) = x - <x,y>y
    std::vector<int> op(static_cast<size_t>(n) * n);
    std::vector<int> inv(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            RElem c = form_eval(m, form, vecs[x], vecs[y]);
            Vec cy = m.scale(c, vecs[y]);
            op[static_cast<size_t>(x) * n + y] = static_cast<int>(m.index(m.add(vecs[x], cy)));
            inv[static_cast<size_t>(x) * n + y] = static_cast<int>(m.index(m.sub(vecs[x], cy)));
        }
    }

    if (n <= 1024) {
        std::vector<std::vector<int>> rows(n, std::vector<int>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) rows[x][y] = op[static_cast<size_t>(x) * n + y];
        FiniteQuandle::check(rows);  // throws with a witness on any axiom failure
    } else {
        // the distributivity check is cubic; verify the quadratic axioms only
        for (int x = 0; x < n; ++x)
            if (op[static_cast<size_t>(x) * n + x] != x) throw NotIdempotent(x);
        std::vector<char> seen(n);
        for (int y = 0; y < n; ++y) {
            std::fill(seen.begin(), seen.end(), 0);
            for (int x = 0; x < n; ++x) {
                int v = op[static_cast<size_t>(x) * n + y];
                if (seen[v]) throw NotRightInvertible(y);
                seen[v] = 1;
            }
        }
    }

    FiniteQuandle q =
        FiniteQuandle::from_tables_unchecked(n, std::move(op), std::move(inv), std::move(labels));
    return SymplecticQuandle{std::move(m), form, std::move(q)};
}

bool is_trivial_symplectic(const FreeModule& m, const GramForm& f) {
    const int n = static_cast<int>(m.size());
    for (int x = 0; x < n; ++x) {
        Vec vx = m.coords(x);
        for (int y = 0; y < n; ++y) {
            Vec vy = m.coords(y);
            if (!m.is_zero(m.scale(form_eval(m, f, vx, vy), vy))) return false;
        }
    }
    return true;
}

Permutation right_translation(const FiniteQuandle& q, int y) {
    Permutation p;
    p.images.resize(q.size());
    for (int x = 0; x < q.size(); ++x) p.images[x] = q.op(x, y);
    return p;
}

bool right_translation_is_linear(const SymplecticQuandle& sq, int y) {
    const FreeModule& m = sq.module;
    const FiniteQuandle& q = sq.quandle;
    const int n = q.size();
    auto s = [&](int x) { return q.op(x, y); };
    for (int a = 0; a < n; ++a) {
        Vec va = m.coords(a);
        for (int b = 0; b < n; ++b) {
            int sum = static_cast<int>(m.index(m.add(va, m.coords(b))));
            int image_sum = static_cast<int>(m.index(m.add(m.coords(s(a)), m.coords(s(b)))));
            if (s(sum) != image_sum) return false;
        }
        for (RElem r = 0; r < m.ring().size(); ++r) {
            int rx = static_cast<int>(m.index(m.scale(r, va)));
            int r_image = static_cast<int>(m.index(m.scale(r, m.coords(s(a)))));
            if (s(rx) != r_image) return false;
        }
    }
    return true;
}

}  // namespace symq
