#include "symq/gaussian.hpp"

#include <algorithm>

namespace symq {

std::string GaussInt::str() const {
    std::string s = re.str();
    if (im >= 0) s += "+";
    s += im.str() + "i";
    return s;
}

GaussInt gauss_form(const GaussVector& x, const GaussVector& y) {
    GaussInt v = x.a * y.b - x.b * y.a;
    return {3 * v.re, 3 * v.im};
}

GaussVector gauss_op(const GaussVector& x, const GaussVector& y) {
    GaussInt c = gauss_form(x, y);
    return {x.a + c * y.a, x.b + c * y.b};
}

GaussVector gauss_inv_op(const GaussVector& x, const GaussVector& y) {
    GaussInt c = gauss_form(x, y);
    return {x.a - c * y.a, x.b - c * y.b};
}

namespace {

int mod3(const BigInt& v) {
    BigInt r = v % 3;
    if (r < 0) r += 3;
    return static_cast<int>(r);
}

bool divisible_by_3(const GaussVector& x) {
    return x.a.re % 3 == 0 && x.a.im % 3 == 0 && x.b.re % 3 == 0 && x.b.im % 3 == 0;
}

GaussVector div3(const GaussVector& x) {
    return {{x.a.re / 3, x.a.im / 3}, {x.b.re / 3, x.b.im / 3}};
}

}  // namespace

ResidueVector residue_neg(const ResidueVector& v) {
    ResidueVector w;
    for (int i = 0; i < 4; ++i) w.r[i] = (3 - v.r[i]) % 3;
    return w;
}

ResidueVector residue_mul_i(const ResidueVector& v) {
    // (re,im) -> (-im, re) per coordinate
    ResidueVector w;
    w.r[0] = (3 - v.r[1]) % 3;
    w.r[1] = v.r[0];
    w.r[2] = (3 - v.r[3]) % 3;
    w.r[3] = v.r[2];
    return w;
}

int v3(const GaussVector& x) {
    if (x.is_zero()) throw ZeroVector();
    int n = 0;
    GaussVector u = x;
    while (divisible_by_3(u)) {
        u = div3(u);
        ++n;
    }
    return n;
}

ResidueVector residue_bar(const GaussVector& x) {
    if (x.is_zero()) throw ZeroVector();
    GaussVector u = x;
    while (divisible_by_3(u)) u = div3(u);
    ResidueVector v;
    v.r = {mod3(u.a.re), mod3(u.a.im), mod3(u.b.re), mod3(u.b.im)};
    return v;
}

OrbitInfo orbit_rep(const ResidueVector& v) {
    if (v.is_zero()) throw ZeroVector();
    const ResidueVector iv = residue_mul_i(v);
    const std::array<ResidueVector, 4> orbit{v, residue_neg(v), iv, residue_neg(iv)};
    ResidueVector rep = orbit[0];
    for (const ResidueVector& w : orbit) rep = std::min(rep, w);

    OrbitInfo info;
    info.rep = rep;
    if (v == rep)
        info.position = OrbitPosition::rep;
    else if (v == residue_neg(rep))
        info.position = OrbitPosition::neg_rep;
    else if (v == residue_mul_i(rep))
        info.position = OrbitPosition::i_rep;
    else
        info.position = OrbitPosition::neg_i_rep;
    return info;
}

GaussInt sigma(const ResidueVector& v) {
    switch (orbit_rep(v).position) {
        case OrbitPosition::rep:
        case OrbitPosition::neg_rep:
            return kGaussI;
        case OrbitPosition::i_rep:
        case OrbitPosition::neg_i_rep:
            return kGaussMinusI;
    }
    return kGaussI;  // unreachable
}

GaussVector rho(const GaussVector& x) {
    if (x.is_zero()) return x;
    GaussInt s = sigma(residue_bar(x));
    return {s * x.a, s * x.b};
}

std::uint64_t SampleRng::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long long SampleRng::draw(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(next() % span);
}

SampleStats run_gaussian_samples(long long samples, long long coeff_bound, std::uint64_t seed) {
    SampleStats stats;
    stats.samples = samples;
    SampleRng rng(seed);
    auto draw_vec = [&] {
        GaussVector v;
        v.a.re = rng.draw(-coeff_bound, coeff_bound);
        v.a.im = rng.draw(-coeff_bound, coeff_bound);
        v.b.re = rng.draw(-coeff_bound, coeff_bound);
        v.b.im = rng.draw(-coeff_bound, coeff_bound);
        return v;
    };

    for (long long s = 0; s < samples; ++s) {
        GaussVector x = draw_vec();
        GaussVector y = draw_vec();

        if (!(rho(rho(x)) == x)) ++stats.involution_failures;
        GaussVector xy = gauss_op(x, y);
        if (!(rho(xy) == gauss_op(rho(x), y))) ++stats.cond1_failures;
        if (!(gauss_op(x, rho(y)) == gauss_inv_op(x, y))) ++stats.cond2_failures;

        if (x.is_zero()) {
            ++stats.zero_skipped;
        } else {
            if (v3(xy) != v3(x)) ++stats.v3_failures;
            if (!(residue_bar(xy) == residue_bar(x))) ++stats.bar_failures;
        }
    }
    return stats;
}

ResidueStats run_residue_checks() {
    ResidueStats stats;
    const GaussInt minus_one{-1, 0};

    bool sigma_square_ok = true;
    bool sigma_map_ok = true;
    std::vector<ResidueVector> reps;
    for (int i0 = 0; i0 < 3; ++i0)
        for (int i1 = 0; i1 < 3; ++i1)
            for (int i2 = 0; i2 < 3; ++i2)
                for (int i3 = 0; i3 < 3; ++i3) {
                    ResidueVector v;
                    v.r = {i0, i1, i2, i3};
                    if (v.is_zero()) continue;
                    ++stats.nonzero_vectors;

                    OrbitInfo info = orbit_rep(v);
                    if (std::find(reps.begin(), reps.end(), info.rep) == reps.end())
                        reps.push_back(info.rep);

                    GaussInt s = sigma(v);
                    if (!(s * s == minus_one)) sigma_square_ok = false;

                    // sigma(v)^{-1} = -sigma(v) given sigma(v)^2 = -1
                    ResidueVector sv = (s == kGaussI) ? residue_mul_i(v)
                                                      : residue_neg(residue_mul_i(v));
                    if (!(sigma(sv) == -s)) sigma_map_ok = false;
                }

    stats.sigma_square_ok = sigma_square_ok;
    stats.sigma_map_ok = sigma_map_ok;
    stats.orbit_count = static_cast<int>(reps.size());

    stats.all_orbits_size_4 = true;
    for (const ResidueVector& rep : reps) {
        std::array<ResidueVector, 4> orbit{rep, residue_neg(rep), residue_mul_i(rep),
                                           residue_neg(residue_mul_i(rep))};
        std::sort(orbit.begin(), orbit.end());
        if (std::adjacent_find(orbit.begin(), orbit.end()) != orbit.end())
            stats.all_orbits_size_4 = false;
    }
    return stats;
}

}  // namespace symq
