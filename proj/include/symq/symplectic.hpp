#pragma once

#include "symq/freemod.hpp"
#include "symq/quandle.hpp"

namespace symq {

struct SizeCapExceeded : std::length_error {
    explicit SizeCapExceeded(long long size, long long cap)
        : std::length_error("quandle would have " + std::to_string(size) +
                            " elements, cap is " + std::to_string(cap)) {}
};

/// A symplectic quandle together with the module and form it was built from.
struct SymplecticQuandle {
    FreeModule module;
    GramForm form;
    FiniteQuandle quandle;
};

inline constexpr long long kDefaultSizeCap = 10000;

/**
 * Builds the quandle on R^k with x*y = x + <x,y>y and x*^{-1}y = x - <x,y>y.
 * Element labels carry the coordinate tuples. The result is axiom-checked
 * (full cubic check up to 1024 elements, idempotence/invertibility above).
 */
SymplecticQuandle build_symplectic_quandle(const Ring& ring, int rank, const GramForm& form,
                                           long long size_cap = kDefaultSizeCap);

/// True iff <x,y>y = 0 for all x,y, i.e. the operation collapses to x*y = x.
bool is_trivial_symplectic(const FreeModule& m, const GramForm& f);

/// The column permutation s_y : x -> x*y.
Permutation right_translation(const FiniteQuandle& q, int y);

/// Exhaustively checks s_y(x+x') = s_y(x)+s_y(x') and s_y(rx) = r s_y(x).
bool right_translation_is_linear(const SymplecticQuandle& sq, int y);

}  // namespace symq
