#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symq {

using BigInt = boost::multiprecision::cpp_int;

struct ZeroVector : std::domain_error {
    ZeroVector() : std::domain_error("operation undefined on the zero vector") {}
};

/// Gaussian integer a + bi with unbounded exact coefficients.
struct GaussInt {
    BigInt re, im;

    GaussInt() = default;
    GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}
    GaussInt(long long r, long long i) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussInt&, const GaussInt&) = default;

    std::string str() const;
};

inline const GaussInt kGaussI{0, 1};
inline const GaussInt kGaussMinusI{0, -1};

/// Element of (Z[i])^2.
struct GaussVector {
    GaussInt a, b;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    friend bool operator==(const GaussVector&, const GaussVector&) = default;
};

/// <(a,b),(c,d)> = 3(ad - bc).
GaussInt gauss_form(const GaussVector& x, const GaussVector& y);

/// x*y = x + <x,y>y, exact.
GaussVector gauss_op(const GaussVector& x, const GaussVector& y);
/// x*^{-1}y = x - <x,y>y.
GaussVector gauss_inv_op(const GaussVector& x, const GaussVector& y);

/// Element of M/3M: residues mod 3 of (re a, im a, re b, im b).
struct ResidueVector {
    std::array<int, 4> r{};

    bool is_zero() const { return r == std::array<int, 4>{0, 0, 0, 0}; }
    friend bool operator==(const ResidueVector&, const ResidueVector&) = default;
    friend auto operator<=>(const ResidueVector& a, const ResidueVector& b) {
        return a.r <=> b.r;
    }
};

ResidueVector residue_neg(const ResidueVector& v);
ResidueVector residue_mul_i(const ResidueVector& v);

/// Largest n with 3^n dividing every integer component; requires x != 0.
int v3(const GaussVector& x);

/// Reduction of u = x / 3^{v3(x)} mod 3; nonzero by construction. x != 0.
ResidueVector residue_bar(const GaussVector& x);

enum class OrbitPosition { rep, neg_rep, i_rep, neg_i_rep };

struct OrbitInfo {
    ResidueVector rep;  // lexicographically smallest of {v, -v, iv, -iv}
    OrbitPosition position;
};

/// The {1,-1,i,-i}-orbit of a nonzero residue vector has exactly 4 members;
/// returns the fixed representative and where v sits in it.
OrbitInfo orbit_rep(const ResidueVector& v);

/// The unit sigma(v) in {i, -i}: i on {rep, -rep}, -i on {i rep, -i rep}.
GaussInt sigma(const ResidueVector& v);

/// rho(x) = sigma(bar x) * x for x != 0, rho(0) = 0.
GaussVector rho(const GaussVector& x);

/// Deterministic sampler: splitmix64 with explicit modulo reduction, so the
/// stream is identical across standard libraries.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed) {}
    long long draw(long long lo, long long hi);

private:
    std::uint64_t next();
    std::uint64_t state_;
};

struct SampleStats {
    long long samples = 0;
    long long involution_failures = 0;
    long long cond1_failures = 0;
    long long cond2_failures = 0;
    long long v3_failures = 0;
    long long bar_failures = 0;
    long long zero_skipped = 0;  // x = 0 draws, exempt from v3/bar checks

    bool all_passed() const {
        return involution_failures == 0 && cond1_failures == 0 && cond2_failures == 0 &&
               v3_failures == 0 && bar_failures == 0;
    }
};

/// Samples coefficient tuples uniformly in [-coeff_bound, coeff_bound] and
/// checks rho^2 = id, both good-involution conditions, and v3/bar stability.
SampleStats run_gaussian_samples(long long samples, long long coeff_bound, std::uint64_t seed);

struct ResidueStats {
    int nonzero_vectors = 0;
    int orbit_count = 0;
    bool all_orbits_size_4 = false;
    bool sigma_square_ok = false;  // sigma(v)^2 = -1 on all nonzero v
    bool sigma_map_ok = false;     // sigma(sigma(v)v) = sigma(v)^{-1} on all nonzero v

    bool all_passed() const {
        return all_orbits_size_4 && sigma_square_ok && sigma_map_ok && orbit_count == 20;
    }
};

/// Exhaustive checks over all 80 nonzero residue vectors.
ResidueStats run_residue_checks();

}  // namespace symq
