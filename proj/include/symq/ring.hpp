#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symq {

/// Canonical index of a ring element, always in [0, ring.size()).
using RElem = int;

struct InvalidModulus : std::invalid_argument {
    explicit InvalidModulus(long long n)
        : std::invalid_argument("ring modulus must be >= 2, got " + std::to_string(n)) {}
};

struct EmptyPoly : std::invalid_argument {
    EmptyPoly() : std::invalid_argument("quotient ring requires a polynomial of degree >= 1") {}
};

struct NonMonic : std::invalid_argument {
    NonMonic() : std::invalid_argument("quotient polynomial is not monic mod n") {}
};

enum class RingKind { zmod, quotient };

/// Defining data of a finite commutative ring with identity:
/// Z/nZ, or (Z/nZ)[X]/(f) with f monic of degree >= 1, constant term first.
struct RingDescriptor {
    RingKind kind = RingKind::zmod;
    long long n = 2;
    std::vector<long long> poly;  // present iff kind == quotient
};

/**
 * Exact arithmetic in a finite commutative ring with identity.
 *
 * Elements are canonical indices: an element with reduced coefficients
 * (c_0, ..., c_{d-1}), constant term first, has index sum c_i * n^i.
 * Every operation returns a canonical index. Rings of size <= 256 get
 * precomputed add/mul tables; larger rings compute coefficientwise.
 *
 * Immutable after construction; all operations are pure.
 */
class Ring {
public:
    explicit Ring(RingDescriptor desc);

    static Ring zmod(long long n);
    static Ring quotient(long long n, std::vector<long long> poly);

    const RingDescriptor& descriptor() const { return desc_; }
    int size() const { return size_; }
    int degree() const { return degree_; }
    long long modulus() const { return desc_.n; }

    RElem zero() const { return 0; }
    RElem one() const { return one_; }

    RElem add(RElem a, RElem b) const;
    RElem neg(RElem a) const;
    RElem sub(RElem a, RElem b) const { return add(a, neg(b)); }
    RElem mul(RElem a, RElem b) const;

    /// Integer coercion m -> m * 1_R.
    RElem from_int(long long m) const;

    /// Reduced coefficients of an element, constant term first, length degree().
    std::vector<int> coeffs(RElem a) const;

    /// Element from arbitrary integer coefficients (constant first); longer
    /// inputs are reduced mod the defining polynomial.
    RElem from_coeffs(const std::vector<long long>& cs) const;

    /// Smallest m >= 1 with m * 1_R = 0.
    int characteristic() const { return characteristic_; }

    /// True iff no two nonzero elements multiply to zero.
    bool is_integral_domain() const;

    /// All invertible elements, sorted by canonical index.
    std::vector<RElem> units() const;

    /// Multiplicative inverse, or nullopt if a is not a unit.
    std::optional<RElem> inverse(RElem a) const;

    bool is_unit(RElem a) const { return inverse(a).has_value(); }

    std::string to_string(RElem a) const { return std::to_string(a); }

private:
    RElem add_slow(RElem a, RElem b) const;
    RElem mul_slow(RElem a, RElem b) const;

    RingDescriptor desc_;
    int degree_ = 1;
    int size_ = 0;
    RElem one_ = 0;
    int characteristic_ = 0;
    std::vector<int> reduced_poly_;  // coefficients of f mod n, constant first
    std::vector<RElem> add_table_;   // size*size when size <= kTableLimit
    std::vector<RElem> mul_table_;
    std::vector<RElem> neg_table_;

    static constexpr int kTableLimit = 256;
};

}  // namespace symq
