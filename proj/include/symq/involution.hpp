#pragma once

#include "symq/freemod.hpp"
#include "symq/quandle.hpp"

namespace symq {

struct SearchCapExceeded : std::runtime_error {
    explicit SearchCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// True iff p is an involution with p(x*y) = p(x)*y and x*p(y) = x*^{-1}y
/// for all pairs (exhaustive).
bool is_good_involution(const FiniteQuandle& q, const Permutation& p);

/// Per-element candidate sets C(y) = { z : s_z = s_y^{-1} }, i.e. the elements
/// whose op column equals the inv_op column of y. rho(y) in C(y) is necessary
/// for any good involution.
std::vector<std::vector<int>> candidate_sets(const FiniteQuandle& q);

struct EnumerateOptions {
    long long limit = 0;  // 0 = unlimited; otherwise stop after the first
                          // `limit` involutions in canonical order
    int threads = 1;
};

struct EnumerationResult {
    std::vector<Permutation> involutions;  // sorted lexicographically by image array
    long long total = 0;                   // number returned
    bool complete = true;                  // false iff more exist beyond `limit`
};

/**
 * Enumerates all good involutions of a finite quandle.
 *
 * Backtracking over the least unassigned element; assigning rho(x) = z forces
 * rho(z) = x and, through rho(x*y) = z*y, a worklist closure over the whole
 * right-translation orbit. Candidate-set membership prunes. Root branches may
 * run on separate threads; output order is identical for any thread count.
 */
EnumerationResult enumerate_good_involutions(const FiniteQuandle& q,
                                             const EnumerateOptions& opts = {});

/// A k x k matrix over R acting on column vectors, row-major entries.
struct LinearMap {
    int rank = 0;
    std::vector<RElem> entries;

    RElem entry(int i, int j) const { return entries[static_cast<size_t>(i) * rank + j]; }
    static LinearMap identity(const Ring& ring, int rank);

    friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

Vec apply(const Ring& ring, const LinearMap& a, const Vec& x);
LinearMap compose(const Ring& ring, const LinearMap& a, const LinearMap& b);

struct InvolutionFlags {
    bool involution = false;      // A^2 = I
    bool condition1 = false;      // A(x*y) = A(x)*y for all pairs
    bool condition2 = false;      // x*A(y) = x*^{-1}y for all pairs
    bool symplectic = false;      // <Ax,Ay> = <x,y> for all pairs
    bool anti_symplectic = false; // <Ax,Ay> = -<x,y> for all pairs
    bool good = false;            // involution && condition1 && condition2
};

/// Checks every flag exhaustively over the module.
InvolutionFlags classify_linear_involution(const FreeModule& m, const GramForm& f,
                                           const LinearMap& a);

inline constexpr long long kDefaultMatrixCap = 20000000;

/// Brute force over all k x k matrices; returns those that are good
/// involutions of the symplectic quandle, in canonical matrix order.
std::vector<LinearMap> enumerate_linear_good_involutions(const FreeModule& m, const GramForm& f,
                                                         long long cap = kDefaultMatrixCap);

}  // namespace symq
