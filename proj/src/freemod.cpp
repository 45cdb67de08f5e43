#include "symq/freemod.hpp"

namespace symq {

FreeModule::FreeModule(Ring ring, int rank) : ring_(std::move(ring)), rank_(rank) {
    if (rank < 1) throw std::invalid_argument("module rank must be >= 1");
    size_ = 1;
    for (int i = 0; i < rank_; ++i) {
        size_ *= ring_.size();
        if (size_ > (1LL << 40)) throw std::overflow_error("module size exceeds supported bound");
    }
}

Vec FreeModule::coords(long long index) const {
    Vec v(rank_);
    for (int i = 0; i < rank_; ++i) {
        v[i] = static_cast<RElem>(index % ring_.size());
        index /= ring_.size();
    }
    return v;
}

long long FreeModule::index(const Vec& v) const {
    long long idx = 0;
    for (int i = rank_ - 1; i >= 0; --i) idx = idx * ring_.size() + v[i];
    return idx;
}

Vec FreeModule::basis(int i) const {
    Vec v = zero();
    v[i] = ring_.one();
    return v;
}

Vec FreeModule::add(const Vec& x, const Vec& y) const {
    Vec out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = ring_.add(x[i], y[i]);
    return out;
}

Vec FreeModule::sub(const Vec& x, const Vec& y) const {
    Vec out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = ring_.sub(x[i], y[i]);
    return out;
}

Vec FreeModule::neg(const Vec& x) const {
    Vec out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = ring_.neg(x[i]);
    return out;
}

Vec FreeModule::scale(RElem r, const Vec& x) const {
    Vec out(rank_);
    for (int i = 0; i < rank_; ++i) out[i] = ring_.mul(r, x[i]);
    return out;
}

bool FreeModule::is_zero(const Vec& x) const {
    for (RElem c : x)
        if (c != 0) return false;
    return true;
}

std::string FreeModule::label(const Vec& v) const {
    std::string s = "(";
    for (int i = 0; i < rank_; ++i) {
        if (i) s += ',';
        s += ring_.to_string(v[i]);
    }
    s += ')';
    return s;
}

GramForm::GramForm(const Ring& ring, std::vector<std::vector<RElem>> gram)
    : rank_(static_cast<int>(gram.size())), gram_(std::move(gram)) {
    if (rank_ < 1) throw DimensionMismatch("gram matrix is empty");
    for (const auto& row : gram_)
        if (static_cast<int>(row.size()) != rank_)
            throw DimensionMismatch("gram matrix is not square");
    for (int i = 0; i < rank_; ++i) {
        if (gram_[i][i] != ring.zero())
            throw FormNotAlternating("gram[" + std::to_string(i) + "][" + std::to_string(i) +
                                     "] is nonzero");
        for (int j = 0; j < rank_; ++j)
            if (gram_[j][i] != ring.neg(gram_[i][j]))
                throw FormNotAlternating("gram[" + std::to_string(j) + "][" + std::to_string(i) +
                                         "] != -gram[" + std::to_string(i) + "][" +
                                         std::to_string(j) + "]");
    }
}

GramForm GramForm::standard(const Ring& ring, int rank) {
    return scaled(ring, rank, ring.one());
}

GramForm GramForm::scaled(const Ring& ring, int rank, RElem c) {
    if (rank < 2 || rank % 2 != 0)
        throw DimensionMismatch("standard form requires even rank >= 2, got " +
                                std::to_string(rank));
    std::vector<std::vector<RElem>> g(rank, std::vector<RElem>(rank, ring.zero()));
    for (int b = 0; b + 1 < rank; b += 2) {
        g[b][b + 1] = c;
        g[b + 1][b] = ring.neg(c);
    }
    return GramForm(ring, std::move(g));
}

GramForm GramForm::zero(const Ring& ring, int rank) {
    std::vector<std::vector<RElem>> g(rank, std::vector<RElem>(rank, ring.zero()));
    return GramForm(ring, std::move(g));
}

GramForm GramForm::negated(const Ring& ring) const {
    auto g = gram_;
    for (auto& row : g)
        for (auto& e : row) e = ring.neg(e);
    return GramForm(ring, std::move(g));
}

RElem form_eval(const FreeModule& m, const GramForm& f, const Vec& x, const Vec& y) {
    if (static_cast<int>(x.size()) != f.rank() || static_cast<int>(y.size()) != f.rank() ||
        m.rank() != f.rank())
        throw DimensionMismatch("form/vector dimensions differ");
    const Ring& R = m.ring();
    RElem acc = R.zero();
    for (int i = 0; i < f.rank(); ++i) {
        if (x[i] == R.zero()) continue;
        RElem row = R.zero();
        for (int j = 0; j < f.rank(); ++j) row = R.add(row, R.mul(f.entry(i, j), y[j]));
        acc = R.add(acc, R.mul(x[i], row));
    }
    return acc;
}

namespace {

RElem det_recursive(const Ring& R, const std::vector<std::vector<RElem>>& a) {
    const int n = static_cast<int>(a.size());
    if (n == 1) return a[0][0];
    RElem det = R.zero();
    for (int col = 0; col < n; ++col) {
        if (a[0][col] == R.zero()) continue;
        std::vector<std::vector<RElem>> minor(n - 1, std::vector<RElem>(n - 1));
        for (int i = 1; i < n; ++i) {
            int mj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == col) continue;
                minor[i - 1][mj++] = a[i][j];
            }
        }
        RElem term = R.mul(a[0][col], det_recursive(R, minor));
        det = (col % 2 == 0) ? R.add(det, term) : R.sub(det, term);
    }
    return det;
}

}  // namespace

RElem form_determinant(const Ring& ring, const GramForm& f) {
    return det_recursive(ring, f.gram());
}

bool is_nondegenerate(const FreeModule& m, const GramForm& f) {
    if (m.ring().is_unit(form_determinant(m.ring(), f))) return true;
    for (long long xi = 1; xi < m.size(); ++xi) {
        Vec x = m.coords(xi);
        bool in_kernel = true;
        for (int j = 0; j < m.rank() && in_kernel; ++j)
            if (form_eval(m, f, x, m.basis(j)) != m.ring().zero()) in_kernel = false;
        if (in_kernel) return false;
    }
    return true;
}

bool is_unimodular(const FreeModule& m, const GramForm& f) {
    return m.ring().is_unit(form_determinant(m.ring(), f));
}

std::optional<std::pair<Vec, Vec>> find_hyperbolic_pair(const FreeModule& m, const GramForm& f) {
    for (long long xi = 0; xi < m.size(); ++xi) {
        Vec x = m.coords(xi);
        for (long long yi = 0; yi < m.size(); ++yi) {
            Vec y = m.coords(yi);
            RElem u = form_eval(m, f, x, y);
            if (auto inv = m.ring().inverse(u))
                return std::make_pair(m.scale(*inv, x), y);
        }
    }
    return std::nullopt;
}

}  // namespace symq
