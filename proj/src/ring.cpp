#include "symq/ring.hpp"

#include <algorithm>

namespace symq {

namespace {

long long mod_reduce(long long v, long long n) {
    long long r = v % n;
    return r < 0 ? r + n : r;
}

}  // namespace

Ring::Ring(RingDescriptor desc) : desc_(std::move(desc)) {
    if (desc_.n < 2) throw InvalidModulus(desc_.n);

    if (desc_.kind == RingKind::zmod) {
        degree_ = 1;
        reduced_poly_.clear();
    } else {
        if (desc_.poly.size() < 2) throw EmptyPoly();
        degree_ = static_cast<int>(desc_.poly.size()) - 1;
        reduced_poly_.resize(desc_.poly.size());
        for (size_t i = 0; i < desc_.poly.size(); ++i)
            reduced_poly_[i] = static_cast<int>(mod_reduce(desc_.poly[i], desc_.n));
        if (reduced_poly_.back() != 1) throw NonMonic();
    }

    long long sz = 1;
    for (int i = 0; i < degree_; ++i) {
        sz *= desc_.n;
        if (sz > (1LL << 30)) throw std::overflow_error("ring size exceeds supported bound");
    }
    size_ = static_cast<int>(sz);
    one_ = from_int(1);

    // characteristic = additive order of 1
    characteristic_ = 1;
    RElem acc = one_;
    while (acc != 0) {
        acc = add_slow(acc, one_);
        ++characteristic_;
    }

    if (size_ <= kTableLimit) {
        add_table_.resize(static_cast<size_t>(size_) * size_);
        mul_table_.resize(static_cast<size_t>(size_) * size_);
        neg_table_.resize(size_);
        for (RElem a = 0; a < size_; ++a) {
            for (RElem b = 0; b < size_; ++b) {
                add_table_[static_cast<size_t>(a) * size_ + b] = add_slow(a, b);
                mul_table_[static_cast<size_t>(a) * size_ + b] = mul_slow(a, b);
            }
        }
        for (RElem a = 0; a < size_; ++a) {
            // neg(a) is the unique b with a + b = 0
            for (RElem b = 0; b < size_; ++b) {
                if (add_table_[static_cast<size_t>(a) * size_ + b] == 0) {
                    neg_table_[a] = b;
                    break;
                }
            }
        }
    }
}

Ring Ring::zmod(long long n) { return Ring(RingDescriptor{RingKind::zmod, n, {}}); }

Ring Ring::quotient(long long n, std::vector<long long> poly) {
    return Ring(RingDescriptor{RingKind::quotient, n, std::move(poly)});
}

std::vector<int> Ring::coeffs(RElem a) const {
    std::vector<int> cs(degree_);
    long long idx = a;
    for (int i = 0; i < degree_; ++i) {
        cs[i] = static_cast<int>(idx % desc_.n);
        idx /= desc_.n;
    }
    return cs;
}

RElem Ring::from_coeffs(const std::vector<long long>& cs) const {
    const long long n = desc_.n;
    std::vector<long long> work(cs.begin(), cs.end());
    for (auto& c : work) c = mod_reduce(c, n);
    if (desc_.kind == RingKind::quotient) {
        // reduce mod the monic polynomial f
        for (int deg = static_cast<int>(work.size()) - 1; deg >= degree_; --deg) {
            long long c = work[deg];
            if (c == 0) continue;
            work[deg] = 0;
            for (int i = 0; i < degree_; ++i)
                work[deg - degree_ + i] =
                    mod_reduce(work[deg - degree_ + i] - c * reduced_poly_[i], n);
        }
    } else if (work.size() > 1) {
        throw std::invalid_argument("coefficient array longer than ring degree");
    }
    long long idx = 0;
    for (int i = degree_ - 1; i >= 0; --i)
        idx = idx * n + (i < static_cast<int>(work.size()) ? work[i] : 0);
    return static_cast<RElem>(idx);
}

RElem Ring::from_int(long long m) const {
    std::vector<long long> cs{mod_reduce(m, desc_.n)};
    return from_coeffs(cs);
}

RElem Ring::add_slow(RElem a, RElem b) const {
    const long long n = desc_.n;
    long long ia = a, ib = b, idx = 0, pw = 1;
    for (int i = 0; i < degree_; ++i) {
        long long ca = ia % n, cb = ib % n;
        ia /= n;
        ib /= n;
        idx += ((ca + cb) % n) * pw;
        pw *= n;
    }
    return static_cast<RElem>(idx);
}

RElem Ring::mul_slow(RElem a, RElem b) const {
    const long long n = desc_.n;
    if (desc_.kind == RingKind::zmod) return static_cast<RElem>((static_cast<long long>(a) * b) % n);

    std::vector<int> ca = coeffs(a), cb = coeffs(b);
    std::vector<long long> prod(2 * degree_ - 1, 0);
    for (int i = 0; i < degree_; ++i) {
        if (ca[i] == 0) continue;
        for (int j = 0; j < degree_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<long long>(ca[i]) * cb[j]) % n;
    }
    return from_coeffs(prod);
}

RElem Ring::add(RElem a, RElem b) const {
    if (!add_table_.empty()) return add_table_[static_cast<size_t>(a) * size_ + b];
    return add_slow(a, b);
}

RElem Ring::neg(RElem a) const {
    if (!neg_table_.empty()) return neg_table_[a];
    std::vector<int> cs = coeffs(a);
    std::vector<long long> negc(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) negc[i] = -static_cast<long long>(cs[i]);
    return from_coeffs(negc);
}

RElem Ring::mul(RElem a, RElem b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * size_ + b];
    return mul_slow(a, b);
}

bool Ring::is_integral_domain() const {
    for (RElem a = 1; a < size_; ++a)
        for (RElem b = 1; b < size_; ++b)
            if (mul(a, b) == 0) return false;
    return true;
}

std::vector<RElem> Ring::units() const {
    std::vector<RElem> us;
    for (RElem a = 0; a < size_; ++a)
        if (inverse(a)) us.push_back(a);
    return us;
}

std::optional<RElem> Ring::inverse(RElem a) const {
    for (RElem b = 0; b < size_; ++b)
        if (mul(a, b) == one_) return b;
    return std::nullopt;
}

}  // namespace symq
