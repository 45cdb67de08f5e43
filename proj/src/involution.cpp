#include "symq/involution.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "symq/symplectic.hpp"

namespace symq {

bool is_good_involution(const FiniteQuandle& q, const Permutation& p) {
    if (p.size() != q.size() || !p.is_involution()) return false;
    const int n = q.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (p(q.op(x, y)) != q.op(p(x), y)) return false;
            if (q.op(x, p(y)) != q.inv_op(x, y)) return false;
        }
    return true;
}

namespace {

// Shared class ids for the columns of both tables: op_class[z] identifies the
// map s_z, inv_class[y] identifies s_y^{-1}. C(y) = members[inv_class[y]].
struct ColumnClasses {
    std::vector<int> op_class;
    std::vector<int> inv_class;
    std::vector<std::vector<int>> members;  // op-column owners per class, ascending
};

ColumnClasses compute_column_classes(const FiniteQuandle& q) {
    const int n = q.size();
    // 2n column handles: [0,n) op columns, [n,2n) inv_op columns
    std::vector<int> order(2 * n);
    std::iota(order.begin(), order.end(), 0);
    auto col_entry = [&](int handle, int row) {
        return handle < n ? q.op(row, handle) : q.inv_op(row, handle - n);
    };
    auto col_less = [&](int a, int b) {
        for (int row = 0; row < n; ++row) {
            int ea = col_entry(a, row), eb = col_entry(b, row);
            if (ea != eb) return ea < eb;
        }
        return false;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (col_less(a, b)) return true;
        if (col_less(b, a)) return false;
        return a < b;
    });

    ColumnClasses cc;
    cc.op_class.assign(n, -1);
    cc.inv_class.assign(n, -1);
    int cls = -1;
    for (size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || col_less(order[i - 1], order[i])) ++cls;
        int h = order[i];
        if (h < n)
            cc.op_class[h] = cls;
        else
            cc.inv_class[h - n] = cls;
    }
    cc.members.resize(cls + 1);
    for (int z = 0; z < n; ++z) cc.members[cc.op_class[z]].push_back(z);
    for (auto& v : cc.members) std::sort(v.begin(), v.end());
    return cc;
}

constexpr int kUnassigned = -1;

// One backtracking search over a fixed candidate structure. Assignments are
// closed under involution symmetry and condition 1 before any branching.
// Completions come out in lexicographic image-array order: every node fills
// the least unassigned element and tries candidates ascending, so a cap of
// `limit + 1` results decides exactness without exhausting the tree.
struct Searcher {
    const FiniteQuandle& q;
    const ColumnClasses& cc;
    std::vector<int> images;
    std::vector<Permutation>* out;
    long long cap;  // stop collecting at this many results; 0 = unlimited

    Searcher(const FiniteQuandle& q_, const ColumnClasses& cc_, std::vector<Permutation>* out_,
             long long cap_)
        : q(q_), cc(cc_), images(q_.size(), kUnassigned), out(out_), cap(cap_) {}

    bool capped() const { return cap > 0 && static_cast<long long>(out->size()) >= cap; }

    bool admissible(int a, int b) const { return cc.op_class[b] == cc.inv_class[a]; }

    // Assign rho(a) = b plus everything it forces. Records touched elements
    // in trail for undo; returns false on contradiction.
    bool assign(int a, int b, std::vector<int>& trail) {
        std::vector<std::pair<int, int>> work{{a, b}};
        while (!work.empty()) {
            auto [x, z] = work.back();
            work.pop_back();
            if (images[x] != kUnassigned) {
                if (images[x] != z) return false;
                continue;
            }
            if (!admissible(x, z)) return false;
            images[x] = z;
            trail.push_back(x);
            work.emplace_back(z, x);
            for (int y = 0; y < q.size(); ++y) work.emplace_back(q.op(x, y), q.op(z, y));
        }
        return true;
    }

    void undo(const std::vector<int>& trail) {
        for (int x : trail) images[x] = kUnassigned;
    }

    void dfs(int from) {
        if (capped()) return;
        int x = from;
        while (x < q.size() && images[x] != kUnassigned) ++x;
        if (x == q.size()) {
            out->push_back(Permutation{images});
            return;
        }
        for (int z : cc.members[cc.inv_class[x]]) {
            if (capped()) return;
            std::vector<int> trail;
            if (assign(x, z, trail)) dfs(x + 1);
            undo(trail);
        }
    }
};

}  // namespace

std::vector<std::vector<int>> candidate_sets(const FiniteQuandle& q) {
    ColumnClasses cc = compute_column_classes(q);
    std::vector<std::vector<int>> sets(q.size());
    for (int y = 0; y < q.size(); ++y) sets[y] = cc.members[cc.inv_class[y]];
    return sets;
}

EnumerationResult enumerate_good_involutions(const FiniteQuandle& q,
                                             const EnumerateOptions& opts) {
    EnumerationResult result;
    const int n = q.size();
    if (n == 0) {
        result.involutions.push_back(Permutation{});
        result.total = 1;
        return result;
    }

    ColumnClasses cc = compute_column_classes(q);
    for (int y = 0; y < n; ++y)
        if (cc.members[cc.inv_class[y]].empty()) {
            result.total = 0;
            return result;
        }

    const std::vector<int>& roots = cc.members[cc.inv_class[0]];
    std::vector<std::vector<Permutation>> slots(roots.size());
    // one extra result decides whether a limited enumeration was complete
    const long long cap = opts.limit > 0 ? opts.limit + 1 : 0;

    auto run_branch = [&](size_t i, long long branch_cap) {
        Searcher s(q, cc, &slots[i], branch_cap);
        std::vector<int> trail;
        if (s.assign(0, roots[i], trail)) s.dfs(1);
    };

    int threads = std::max(1, opts.threads);
    if (threads == 1 || roots.size() <= 1) {
        // branches emit in canonical order, so the cumulative cap is exact
        long long collected = 0;
        for (size_t i = 0; i < roots.size(); ++i) {
            if (cap > 0 && collected >= cap) break;
            run_branch(i, cap > 0 ? cap - collected : 0);
            collected += static_cast<long long>(slots[i].size());
        }
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        int nworkers = std::min<int>(threads, static_cast<int>(roots.size()));
        pool.reserve(nworkers);
        for (int t = 0; t < nworkers; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < roots.size(); i = next.fetch_add(1))
                    run_branch(i, cap);
            });
        for (auto& th : pool) th.join();
    }

    for (auto& slot : slots)
        for (auto& p : slot) result.involutions.push_back(std::move(p));
    std::sort(result.involutions.begin(), result.involutions.end());
    if (cap > 0 && static_cast<long long>(result.involutions.size()) > opts.limit) {
        result.involutions.resize(static_cast<size_t>(opts.limit));
        result.complete = false;
    }
    result.total = static_cast<long long>(result.involutions.size());
    return result;
}

LinearMap LinearMap::identity(const Ring& ring, int rank) {
    LinearMap a;
    a.rank = rank;
    a.entries.assign(static_cast<size_t>(rank) * rank, ring.zero());
    for (int i = 0; i < rank; ++i) a.entries[static_cast<size_t>(i) * rank + i] = ring.one();
    return a;
}

Vec apply(const Ring& ring, const LinearMap& a, const Vec& x) {
    if (static_cast<int>(x.size()) != a.rank)
        throw DimensionMismatch("matrix/vector dimensions differ");
    Vec out(a.rank, ring.zero());
    for (int i = 0; i < a.rank; ++i) {
        RElem acc = ring.zero();
        for (int j = 0; j < a.rank; ++j) acc = ring.add(acc, ring.mul(a.entry(i, j), x[j]));
        out[i] = acc;
    }
    return out;
}

LinearMap compose(const Ring& ring, const LinearMap& a, const LinearMap& b) {
    if (a.rank != b.rank) throw DimensionMismatch("matrix dimensions differ");
    LinearMap c;
    c.rank = a.rank;
    c.entries.assign(static_cast<size_t>(a.rank) * a.rank, ring.zero());
    for (int i = 0; i < a.rank; ++i)
        for (int j = 0; j < a.rank; ++j) {
            RElem acc = ring.zero();
            for (int l = 0; l < a.rank; ++l)
                acc = ring.add(acc, ring.mul(a.entry(i, l), b.entry(l, j)));
            c.entries[static_cast<size_t>(i) * a.rank + j] = acc;
        }
    return c;
}

InvolutionFlags classify_linear_involution(const FreeModule& m, const GramForm& f,
                                           const LinearMap& a) {
    if (a.rank != f.rank() || a.rank != m.rank())
        throw DimensionMismatch("matrix rank does not match form rank");
    const Ring& R = m.ring();
    const int n = static_cast<int>(m.size());

    InvolutionFlags flags;
    flags.involution = compose(R, a, a) == LinearMap::identity(R, a.rank);

    std::vector<Vec> vecs(n), imgs(n);
    for (int i = 0; i < n; ++i) {
        vecs[i] = m.coords(i);
        imgs[i] = apply(R, a, vecs[i]);
    }

    flags.condition1 = flags.condition2 = flags.symplectic = flags.anti_symplectic = true;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            RElem c = form_eval(m, f, vecs[x], vecs[y]);
            RElem c_img = form_eval(m, f, imgs[x], imgs[y]);
            if (c_img != c) flags.symplectic = false;
            if (c_img != R.neg(c)) flags.anti_symplectic = false;

            Vec xy = m.add(vecs[x], m.scale(c, vecs[y]));
            if (flags.condition1 && apply(R, a, xy) !=
                    m.add(imgs[x], m.scale(form_eval(m, f, imgs[x], vecs[y]), vecs[y])))
                flags.condition1 = false;

            RElem cA = form_eval(m, f, vecs[x], imgs[y]);
            Vec lhs = m.add(vecs[x], m.scale(cA, imgs[y]));
            Vec rhs = m.sub(vecs[x], m.scale(c, vecs[y]));
            if (lhs != rhs) flags.condition2 = false;
        }
    }
    flags.good = flags.involution && flags.condition1 && flags.condition2;
    return flags;
}

std::vector<LinearMap> enumerate_linear_good_involutions(const FreeModule& m, const GramForm& f,
                                                         long long cap) {
    const Ring& R = m.ring();
    const int k = m.rank();
    if (f.rank() != k) throw DimensionMismatch("form rank does not match module rank");
    const int kk = k * k;

    long long count = 1;
    for (int i = 0; i < kk; ++i) {
        count *= R.size();
        if (count > cap)
            throw SearchCapExceeded("matrix space " + std::to_string(R.size()) + "^" +
                                    std::to_string(kk) + " exceeds cap " + std::to_string(cap));
    }

    // quandle tables once, then each involution reduces to table lookups
    SymplecticQuandle sq = build_symplectic_quandle(R, k, f);
    const FiniteQuandle& q = sq.quandle;
    const int n = q.size();
    const LinearMap ident = LinearMap::identity(R, k);

    std::vector<LinearMap> found;
    LinearMap a;
    a.rank = k;
    a.entries.assign(kk, 0);
    for (long long idx = 0; idx < count; ++idx) {
        long long t = idx;
        for (int i = 0; i < kk; ++i) {
            a.entries[i] = static_cast<RElem>(t % R.size());
            t /= R.size();
        }
        if (compose(R, a, a) != ident) continue;

        // A^2 = I makes the induced map an involutive bijection
        Permutation p;
        p.images.resize(n);
        for (int x = 0; x < n; ++x)
            p.images[x] = static_cast<int>(m.index(apply(R, a, m.coords(x))));

        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n; ++y) {
                if (p(q.op(x, y)) != q.op(p(x), y) || q.op(x, p(y)) != q.inv_op(x, y)) {
                    ok = false;
                    break;
                }
            }
        if (ok) found.push_back(a);
    }
    return found;
}

}  // namespace symq
